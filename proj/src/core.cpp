#include "multclt/core.hpp"

#include <cmath>

namespace multclt {

namespace {

void validate_impl(const DomainParams& p, bool allow_degenerate) {
  if (!(p.a >= 0.0) || !std::isfinite(p.a)) {
    throw std::invalid_argument("DomainParams: need a >= 0");
  }
  const bool order_ok = allow_degenerate ? (p.a <= p.b) : (p.a < p.b);
  if (!order_ok) {
    throw std::invalid_argument(allow_degenerate ? "DomainParams: need a <= b"
                                                 : "DomainParams: need a < b");
  }
  if (!(p.b < 1.0)) throw std::invalid_argument("DomainParams: need b < 1");
  if (!(p.c > 0.0 && p.c < 1.0)) {
    throw std::invalid_argument("DomainParams: need 0 < c < 1");
  }
  if (!(p.T > 1.0) || !std::isfinite(p.T)) {
    throw std::invalid_argument("DomainParams: need T > 1");
  }
}

}  // namespace

void DomainParams::validate() const { validate_impl(*this, false); }

void DomainParams::validate_allow_degenerate() const { validate_impl(*this, true); }

// Comparisons are exact; these predicates feed counting, where any fuzz
// would silently change counts.
bool in_omega(const Point3& z, const DomainParams& p) {
  if (!(std::fabs(z.x1) <= p.c)) return false;
  if (!(std::fabs(z.x2) <= p.c)) return false;
  if (!(z.y >= 1.0 && z.y < p.T)) return false;
  const double prod = std::fabs(z.x1) * std::fabs(z.x2) * z.y;
  return prod > p.a && prod < p.b;
}

bool in_delta_c(const Point3& z, double c) {
  const double inv_e_c = c * 0.36787944117144232160;  // c / e
  const double a1 = std::fabs(z.x1);
  const double a2 = std::fabs(z.x2);
  if (!(a1 > inv_e_c && a1 <= c)) return false;
  if (!(a2 > inv_e_c && a2 <= c)) return false;
  const double prod = std::fabs(z.x1 * z.x2) * z.y;
  return prod > 0.0 && prod <= 1.0;
}

bool in_delta_inf(const Point3& z) {
  const double prod = std::fabs(z.x1 * z.x2) * z.y;
  return prod > 0.0 && prod <= 1.0;
}

bool in_theta(const Point3& z, double K, double T, double c) {
  if (!(std::fabs(z.x1) <= c)) return false;
  if (!(std::fabs(z.x2) <= c)) return false;
  if (!(z.y >= 1.0 && z.y < T)) return false;
  const double cutoff = std::pow(std::log(T), -K);
  return std::fabs(z.x1 * z.x2) * z.y <= cutoff;
}

double upsilon_area(double eps, double c) {
  if (eps <= 0.0) return 0.0;
  const double c2 = c * c;
  if (eps >= c2) return 4.0 * c2;
  return 4.0 * (eps + eps * std::log(c2 / eps));
}

}  // namespace multclt
