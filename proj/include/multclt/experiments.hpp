#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "multclt/core.hpp"
#include "multclt/volumes.hpp"

namespace multclt {

struct ExperimentConfig {
  DomainParams params;
  std::int64_t samples = 2000;
  std::uint64_t seed = 42;
  SeriesVariant sigma_variant = SeriesVariant::kZetaWeighted;
  std::vector<double> T_grid;  // optional; empty means single run at params.T

  // Throws on structural problems; returns human-readable warnings when the
  // parameters sit outside the regime the limit statements assume.
  std::vector<std::string> validate() const;
};

struct SampleRecord {
  double x1 = 0.0;
  double x2 = 0.0;
  std::int64_t count = 0;
  double discrepancy = 0.0;
  std::int64_t seed_index = 0;
};

struct SummaryStats {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double ks_distance = 0.0;
  std::int64_t n = 0;
};

struct CltRun {
  std::vector<SampleRecord> records;
  SummaryStats summary;
  double vol = 0.0;
  double var_ratio = 0.0;  // Var(N) / Vol(Omega), equal to Var(discrepancy)
  // Converged sigma^2 and KS distance per variant, indexed by SeriesVariant.
  std::array<double, 3> sigma2{};
  std::array<double, 3> ks{};
  SeriesVariant closest_variant = SeriesVariant::kAllPairs;
  std::vector<std::string> warnings;
};

// Draws x uniformly in [0,1)^2, counts solutions, forms discrepancies, and
// summarizes. Deterministic given (config, seed), whatever the thread count.
CltRun run_clt(const ExperimentConfig& cfg);

// Plug-in cumulants of the centered sample: k2 = m2, k3 = m3, k4 = m4 - 3 m2^2.
// Returns orders 2..max_order.
std::vector<double> empirical_cumulants(const std::vector<double>& values, int max_order);

// sup_x |F_emp - cdf| over the sample points, both one-sided gaps included.
double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf);

// Normal(0, sigma2) distribution function.
double normal_cdf(double xi, double sigma2);

struct SmallProductsRow {
  double T = 0.0;
  double mean = 0.0;
  std::int64_t max = 0;
};

// Mean and max of count_small_products over random x, per grid T. K > 2.
std::vector<SmallProductsRow> small_products_study(double K, const std::vector<double>& T_grid,
                                                   std::int64_t samples, std::uint64_t seed,
                                                   double c);

struct CumulantTrendRow {
  double T = 0.0;
  double skewness = 0.0;
  double skewness_stderr = 0.0;  // bootstrap
  double excess_kurtosis = 0.0;
  double vol = 0.0;
  double var_ratio = 0.0;
  double ks_best = 0.0;  // KS against the variant closest in variance
};

// Normalized cumulants of the discrepancy per grid T (config's T is ignored).
std::vector<CumulantTrendRow> cumulant_trend(const ExperimentConfig& cfg);

}  // namespace multclt
