#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "multclt/core.hpp"

namespace multclt {

// Exact Lebesgue volume of Omega_{a,b,T}: integrate over y in [1, T) the
// area difference G(b/y) - G(a/y), with G(s) the area of
// {|x1 x2| <= s, |xi| <= c} (see upsilon_area). The antiderivative of the
// curved part is 4 p ln y + 2 p ln(c^2 y / p)^2.
double vol_omega_exact(const DomainParams& p);

// Displayed main terms: 2 (ln T)^2 (b-a) + 4 ln T [(b-a) + b ln(c^2/b)
// - a ln(c^2/a)]; the remainder against vol_omega_exact is bounded in T.
double vol_omega_main_terms(const DomainParams& p);

// Volume of p^-1 a(m) Delta_c intersected with q^-1 Delta_c. The y-section
// has length min(p,q)^-3... the closed form collapses to
//   4 max(p,q)^-3 * hat(m1 + ln(q/p)) * hat(m2 + ln(q/p)),
// hat(t) = max(0, 1 - |t|); in particular the value carries no c dependence.
double v_pq_m(int p, int q, int m1, int m2);

// Volume of p^-1 Delta_inf intersected with q^-1 Delta_c, summed over flow
// shifts |m1|, |m2| <= m_cutoff (the support is finite for each pair).
double v_pq_inf(int p, int q, int m_cutoff);

enum class SeriesVariant {
  kAllPairs,
  kZetaWeighted,
  kCoprimePairs,
};

struct SeriesConfig {
  int pq_cutoff = 200;
  int m_cutoff = 10;
  SeriesVariant variant = SeriesVariant::kAllPairs;

  void validate() const;
};

struct SigmaSeries {
  // Raw sum over enumerated pairs p, q <= pq_cutoff (gcd-filtered or
  // zeta(3)^-1-weighted per variant); monotone in the cutoff.
  double partial_sum = 0.0;
  // Rigorous bound on the discarded tail: calibrated constant times the
  // comparison series sum over max(p,q) > cutoff of p^-3/2 q^-3/2.
  double tail_bound = 0.0;
  // partial_sum completed by the analytic tail of the term law
  // 4 max(p,q)^-3; this is the converged series value.
  double value = 0.0;
};

SigmaSeries sigma_squared(const SeriesConfig& cfg);

// One (p, q, m) contribution, for CSV audit dumps.
struct SeriesTerm {
  int p = 0;
  int q = 0;
  int m1 = 0;
  int m2 = 0;
  double value = 0.0;
};

// Nonzero terms in lexicographic (p, q, m1, m2) order.
std::vector<SeriesTerm> series_terms(const SeriesConfig& cfg);

// Axis-aligned box, for Rogers right-hand sides.
struct Box3 {
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};

  double volume() const;
};

// (int f)(int g) + zeta(3)^-1 sum_{p,q<=cutoff} [ int f(pz) g(qz) dz
// + int f(pz) g(-qz) dz ] for f, g indicators of disjoint box unions.
double rogers_rhs(const std::vector<Box3>& f_boxes, const std::vector<Box3>& g_boxes,
                  int pq_cutoff);

inline constexpr double kZeta2 = 1.6449340668482264365;
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta3Half = 2.6123753486854883433;

}  // namespace multclt
