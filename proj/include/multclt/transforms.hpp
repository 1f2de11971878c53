#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "multclt/core.hpp"
#include "multclt/lattice.hpp"

namespace multclt {

struct BoxRegion {
  Point3 lo;
  Point3 hi;
};

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

struct CovarianceEstimate {
  double covariance = 0.0;
  double stderr_ = 0.0;
};

struct TailPoint {
  double L = 0.0;
  double fraction = 0.0;
};

// Number of nonzero lattice points of L in the closed box.
std::int64_t siegel_transform(const BoxRegion& box, const UnimodularLattice& L,
                              std::uint64_t budget = kDefaultEnumBudget);

// Average of the box count over the torus family a(n) Lambda_alpha, exactly:
// unfolding over alpha gives e^-(n1+n2) * (x-section area) * #{q >= 1 with
// e^-(n1+n2) q in the y-range}. Requires a positive y-range and n >= 0.
double y_expectation_exact(const BoxRegion& box, const FlowExponent& n);

// Monte Carlo version over alpha uniform in [0,1)^2.
MeanStderr y_expectation_mc(const BoxRegion& box, const FlowExponent& n,
                            std::int64_t samples, std::uint64_t seed,
                            std::uint64_t budget = kDefaultEnumBudget);

// Empirical fractions of alpha with ht(a(n) Lambda_alpha) >= L per grid value.
std::vector<TailPoint> height_tail(const FlowExponent& n, const std::vector<double>& L_grid,
                                   std::int64_t samples, std::uint64_t seed,
                                   std::uint64_t budget = kDefaultEnumBudget);

// Monte Carlo second moment of the box count over the torus family.
MeanStderr second_moment_y(const BoxRegion& box, const FlowExponent& n,
                           std::int64_t samples, std::uint64_t seed,
                           std::uint64_t budget = kDefaultEnumBudget);

// Sample covariance over alpha of the box counts at two flow times.
CovarianceEstimate decorrelation_probe(const BoxRegion& box, const FlowExponent& t_a,
                                       const FlowExponent& t_b, std::int64_t samples,
                                       std::uint64_t seed,
                                       std::uint64_t budget = kDefaultEnumBudget);

}  // namespace multclt
