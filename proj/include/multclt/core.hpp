#pragma once

#include <stdexcept>

namespace multclt {

// Enumeration cap for lattice point searches, in candidate tuples.
inline constexpr unsigned long long kDefaultEnumBudget = 100'000'000ULL;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Region parameters: product bounds (a, b), coordinate bound c, height cutoff T.
struct DomainParams {
  double a = 0.0;
  double b = 0.5;
  double c = 0.5;
  double T = 100.0;

  // 0 <= a < b < 1, 0 < c < 1, T > 1.
  void validate() const;
  // Same, but allows a == b (degenerate region of volume zero).
  void validate_allow_degenerate() const;
};

struct Point3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double y = 0.0;
};

// a < |x1||x2| y < b, |x1| <= c, |x2| <= c, 1 <= y < T.
bool in_omega(const Point3& z, const DomainParams& p);

// 0 < |x1 x2| y <= 1, c/e < |x1| <= c, c/e < |x2| <= c.
bool in_delta_c(const Point3& z, double c);

// 0 < |x1 x2| y <= 1.
bool in_delta_inf(const Point3& z);

// |x1 x2| y <= (ln T)^-K, |x1|,|x2| <= c, 1 <= y < T.
bool in_theta(const Point3& z, double K, double T, double c);

// Exact area of {(x1,x2): |x1 x2| <= eps, |x1|,|x2| <= c}.
// Splitting the first quadrant at x1 = eps/c gives
//   area = 4 (eps + eps ln(c^2/eps))   for eps < c^2,   4 c^2 otherwise.
double upsilon_area(double eps, double c);

}  // namespace multclt
