#include "multclt/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "multclt/counting.hpp"
#include "multclt/parallel.hpp"
#include "multclt/rng.hpp"

namespace multclt {

namespace {

struct CentralMoments {
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

CentralMoments central_moments(const std::vector<double>& xs) {
  CentralMoments r;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) r.mean += x;
  r.mean /= n;
  for (double x : xs) {
    const double d = x - r.mean;
    const double d2 = d * d;
    r.m2 += d2;
    r.m3 += d2 * d;
    r.m4 += d2 * d2;
  }
  r.m2 /= n;
  r.m3 /= n;
  r.m4 /= n;
  return r;
}

double skewness_of(const CentralMoments& m) {
  return m.m2 > 0.0 ? m.m3 / std::pow(m.m2, 1.5) : 0.0;
}

constexpr int kBootstrapResamples = 200;

double bootstrap_skewness_stderr(const std::vector<double>& xs, std::uint64_t seed) {
  const std::size_t n = xs.size();
  std::vector<double> skews(kBootstrapResamples);
  std::vector<double> resample(n);
  for (int b = 0; b < kBootstrapResamples; ++b) {
    RngStream rng(seed ^ 0xB00757AFULL, static_cast<std::uint64_t>(b));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = static_cast<std::size_t>(rng.next_u64() % n);
      resample[i] = xs[j];
    }
    skews[b] = skewness_of(central_moments(resample));
  }
  const CentralMoments sm = central_moments(skews);
  return std::sqrt(sm.m2);
}

SeriesVariant variant_from_index(int i) {
  switch (i) {
    case 0: return SeriesVariant::kAllPairs;
    case 1: return SeriesVariant::kZetaWeighted;
    default: return SeriesVariant::kCoprimePairs;
  }
}

int variant_index(SeriesVariant v) {
  switch (v) {
    case SeriesVariant::kAllPairs: return 0;
    case SeriesVariant::kZetaWeighted: return 1;
    case SeriesVariant::kCoprimePairs: return 2;
  }
  return 0;
}

std::array<double, 3> sigma2_all_variants() {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    SeriesConfig sc;
    sc.pq_cutoff = 200;
    sc.m_cutoff = 10;
    sc.variant = variant_from_index(i);
    out[i] = sigma_squared(sc).value;
  }
  return out;
}

std::vector<SampleRecord> draw_samples(const DomainParams& params, std::int64_t samples,
                                       std::uint64_t seed, double vol) {
  std::vector<SampleRecord> records(samples);
  const double sqrt_vol = std::sqrt(vol);
  parallel_for(samples, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    SampleRecord rec;
    rec.seed_index = i;
    rec.x1 = rng.next_double();
    rec.x2 = rng.next_double();
    rec.count = count_products(rec.x1, rec.x2, params);
    rec.discrepancy = (static_cast<double>(rec.count) - vol) / sqrt_vol;
    records[i] = rec;
  });
  return records;
}

SummaryStats summarize(const std::vector<double>& ds) {
  SummaryStats s;
  const CentralMoments m = central_moments(ds);
  s.mean = m.mean;
  s.variance = m.m2;
  s.skewness = skewness_of(m);
  s.excess_kurtosis = m.m2 > 0.0 ? m.m4 / (m.m2 * m.m2) - 3.0 : 0.0;
  s.n = static_cast<std::int64_t>(ds.size());
  return s;
}

}  // namespace

std::vector<std::string> ExperimentConfig::validate() const {
  params.validate();
  if (samples < 100) throw std::invalid_argument("ExperimentConfig: samples >= 100");
  for (double T : T_grid) {
    if (!(T > 1.0)) throw std::invalid_argument("ExperimentConfig: grid T must be > 1");
  }
  std::vector<std::string> warnings;
  auto check_scale = [&](double T) {
    const double floor_b = std::pow(std::log(T), -1.2);
    if (params.b < floor_b) {
      warnings.push_back("b below (ln T)^-6/5 at T=" + std::to_string(T) +
                         "; the normal limit regime is not guaranteed");
    }
    const double lnln = std::log(std::log(T));
    if (lnln > 0.0 && params.a > params.b * std::pow(lnln, -4.0)) {
      warnings.push_back("a above b (ln ln T)^-4 at T=" + std::to_string(T) +
                         "; the normal limit regime is not guaranteed");
    }
  };
  check_scale(params.T);
  for (double T : T_grid) check_scale(T);
  return warnings;
}

CltRun run_clt(const ExperimentConfig& cfg) {
  CltRun run;
  run.warnings = cfg.validate();
  run.vol = vol_omega_exact(cfg.params);
  if (!(run.vol > 0.0)) {
    throw std::invalid_argument("run_clt: domain has zero volume");
  }
  run.records = draw_samples(cfg.params, cfg.samples, cfg.seed, run.vol);

  std::vector<double> ds(run.records.size());
  for (std::size_t i = 0; i < run.records.size(); ++i) ds[i] = run.records[i].discrepancy;
  run.summary = summarize(ds);
  run.var_ratio = run.summary.variance;

  run.sigma2 = sigma2_all_variants();
  for (int i = 0; i < 3; ++i) {
    const double s2 = run.sigma2[i];
    run.ks[i] = ks_distance(ds, [s2](double x) { return normal_cdf(x, s2); });
  }
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::fabs(run.var_ratio - run.sigma2[i]) <
        std::fabs(run.var_ratio - run.sigma2[best])) {
      best = i;
    }
  }
  run.closest_variant = variant_from_index(best);
  run.summary.ks_distance = run.ks[variant_index(cfg.sigma_variant)];
  return run;
}

std::vector<double> empirical_cumulants(const std::vector<double>& values, int max_order) {
  if (values.size() < 2) {
    throw std::invalid_argument("empirical_cumulants: need at least 2 values");
  }
  if (max_order < 2 || max_order > 4) {
    throw std::invalid_argument("empirical_cumulants: max_order in [2,4]");
  }
  const CentralMoments m = central_moments(values);
  std::vector<double> out;
  out.push_back(m.m2);
  if (max_order >= 3) out.push_back(m.m3);
  if (max_order >= 4) out.push_back(m.m4 - 3.0 * m.m2 * m.m2);
  return out;
}

double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    const double emp_hi = static_cast<double>(i + 1) / n;
    const double emp_lo = static_cast<double>(i) / n;
    d = std::max({d, std::fabs(emp_hi - f), std::fabs(f - emp_lo)});
  }
  return d;
}

double normal_cdf(double xi, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("normal_cdf: need sigma2 > 0");
  return 0.5 * std::erfc(-xi / std::sqrt(2.0 * sigma2));
}

std::vector<SmallProductsRow> small_products_study(double K, const std::vector<double>& T_grid,
                                                   std::int64_t samples, std::uint64_t seed,
                                                   double c) {
  if (!(K > 2.0)) throw std::invalid_argument("small_products_study: need K > 2");
  if (T_grid.empty()) throw std::invalid_argument("small_products_study: empty T grid");
  if (samples < 1) throw std::invalid_argument("small_products_study: samples >= 1");
  std::vector<SmallProductsRow> rows;
  rows.reserve(T_grid.size());
  for (double T : T_grid) {
    std::vector<std::int64_t> counts(samples);
    parallel_for(samples, [&](std::int64_t i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      const double x1 = rng.next_double();
      const double x2 = rng.next_double();
      counts[i] = count_small_products(x1, x2, K, T, c);
    });
    SmallProductsRow row;
    row.T = T;
    for (std::int64_t v : counts) {
      row.mean += static_cast<double>(v);
      row.max = std::max(row.max, v);
    }
    row.mean /= static_cast<double>(samples);
    rows.push_back(row);
  }
  return rows;
}

std::vector<CumulantTrendRow> cumulant_trend(const ExperimentConfig& cfg) {
  if (cfg.T_grid.size() < 3) {
    throw std::invalid_argument("cumulant_trend: need a T grid of >= 3 values");
  }
  cfg.validate();
  std::vector<CltRun> runs;
  runs.reserve(cfg.T_grid.size());
  for (double T : cfg.T_grid) {
    ExperimentConfig point = cfg;
    point.params.T = T;
    point.T_grid.clear();
    runs.push_back(run_clt(point));
  }
  // "Best-fitting" variant is judged at the largest T and then applied to
  // every row, so the KS trend compares like with like.
  const int best = variant_index(runs.back().closest_variant);

  std::vector<CumulantTrendRow> rows;
  rows.reserve(runs.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const CltRun& run = runs[r];
    CumulantTrendRow row;
    row.T = cfg.T_grid[r];
    row.skewness = run.summary.skewness;
    row.excess_kurtosis = run.summary.excess_kurtosis;
    row.vol = run.vol;
    row.var_ratio = run.var_ratio;
    std::vector<double> ds(run.records.size());
    for (std::size_t i = 0; i < run.records.size(); ++i) ds[i] = run.records[i].discrepancy;
    row.skewness_stderr =
        bootstrap_skewness_stderr(ds, cfg.seed + static_cast<std::uint64_t>(r + 1));
    row.ks_best = run.ks[best];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace multclt
