#include "multclt/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "multclt/parallel.hpp"
#include "multclt/rng.hpp"

namespace multclt {

namespace {

void require_box(const BoxRegion& box) {
  if (!(box.lo.x1 < box.hi.x1 && box.lo.x2 < box.hi.x2 && box.lo.y < box.hi.y)) {
    throw std::invalid_argument("box: need lo < hi componentwise");
  }
}

MeanStderr mean_and_stderr(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  MeanStderr r;
  r.mean = mean;
  r.stderr_ = xs.size() > 1 ? std::sqrt(ss / (n * (n - 1.0))) : 0.0;
  return r;
}

}  // namespace

std::int64_t siegel_transform(const BoxRegion& box, const UnimodularLattice& L,
                              std::uint64_t budget) {
  require_box(box);
  return static_cast<std::int64_t>(enumerate_in_box(L, box.lo, box.hi, budget).size());
}

double y_expectation_exact(const BoxRegion& box, const FlowExponent& n) {
  require_box(box);
  if (!(box.lo.y > 0.0)) {
    throw std::invalid_argument("y_expectation_exact: y-range must be positive");
  }
  if (!(n.t1 >= 0.0 && n.t2 >= 0.0)) {
    throw std::invalid_argument("y_expectation_exact: need n >= 0");
  }
  const double s = n.t1 + n.t2;
  const double es = std::exp(-s);
  // q >= 1 with es * q in [lo.y, hi.y].
  const double q_lo = std::ceil(box.lo.y / es);
  const double q_hi = std::floor(box.hi.y / es);
  if (q_hi < q_lo) return 0.0;
  const double count = q_hi - q_lo + 1.0;
  const double area = (box.hi.x1 - box.lo.x1) * (box.hi.x2 - box.lo.x2);
  return es * count * area;
}

MeanStderr y_expectation_mc(const BoxRegion& box, const FlowExponent& n,
                            std::int64_t samples, std::uint64_t seed,
                            std::uint64_t budget) {
  require_box(box);
  if (samples < 100) throw std::invalid_argument("y_expectation_mc: samples >= 100");
  std::vector<double> counts(samples);
  parallel_for(samples, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const double a1 = rng.next_double();
    const double a2 = rng.next_double();
    const UnimodularLattice L = apply_flow(n, lattice_from_alpha(a1, a2));
    counts[i] = static_cast<double>(siegel_transform(box, L, budget));
  });
  return mean_and_stderr(counts);
}

std::vector<TailPoint> height_tail(const FlowExponent& n, const std::vector<double>& L_grid,
                                   std::int64_t samples, std::uint64_t seed,
                                   std::uint64_t budget) {
  if (L_grid.empty()) throw std::invalid_argument("height_tail: empty L grid");
  for (std::size_t i = 0; i < L_grid.size(); ++i) {
    if (!(L_grid[i] > 1.0) || (i > 0 && !(L_grid[i] > L_grid[i - 1]))) {
      throw std::invalid_argument("height_tail: L grid must be increasing and > 1");
    }
  }
  if (samples < 1) throw std::invalid_argument("height_tail: samples >= 1");
  std::vector<double> heights(samples);
  parallel_for(samples, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const double a1 = rng.next_double();
    const double a2 = rng.next_double();
    heights[i] = height_of_flowed_torus_lattice(a1, a2, n, budget);
  });
  std::vector<TailPoint> out;
  out.reserve(L_grid.size());
  for (double L : L_grid) {
    std::int64_t hits = 0;
    for (double h : heights) {
      if (h >= L) ++hits;
    }
    out.push_back(TailPoint{L, static_cast<double>(hits) / static_cast<double>(samples)});
  }
  return out;
}

MeanStderr second_moment_y(const BoxRegion& box, const FlowExponent& n,
                           std::int64_t samples, std::uint64_t seed,
                           std::uint64_t budget) {
  require_box(box);
  if (samples < 100) throw std::invalid_argument("second_moment_y: samples >= 100");
  std::vector<double> sq(samples);
  parallel_for(samples, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const double a1 = rng.next_double();
    const double a2 = rng.next_double();
    const UnimodularLattice L = apply_flow(n, lattice_from_alpha(a1, a2));
    const double c = static_cast<double>(siegel_transform(box, L, budget));
    sq[i] = c * c;
  });
  return mean_and_stderr(sq);
}

CovarianceEstimate decorrelation_probe(const BoxRegion& box, const FlowExponent& t_a,
                                       const FlowExponent& t_b, std::int64_t samples,
                                       std::uint64_t seed, std::uint64_t budget) {
  require_box(box);
  if (!(t_a.t1 >= 0.0 && t_a.t2 >= 0.0 && t_b.t1 >= 0.0 && t_b.t2 >= 0.0)) {
    throw std::invalid_argument("decorrelation_probe: flow times must be >= 0");
  }
  if (samples < 100) throw std::invalid_argument("decorrelation_probe: samples >= 100");
  std::vector<double> xs(samples), ys(samples);
  parallel_for(samples, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const double a1 = rng.next_double();
    const double a2 = rng.next_double();
    const UnimodularLattice base = lattice_from_alpha(a1, a2);
    xs[i] = static_cast<double>(siegel_transform(box, apply_flow(t_a, base), budget));
    ys[i] = static_cast<double>(siegel_transform(box, apply_flow(t_b, base), budget));
  });
  const double n = static_cast<double>(samples);
  double mx = 0.0, my = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double m11 = 0.0, m22 = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    m11 += dx * dy;
    m22 += dx * dx * dy * dy;
  }
  m11 /= n;
  m22 /= n;
  CovarianceEstimate r;
  r.covariance = m11;
  r.stderr_ = std::sqrt(std::max(0.0, m22 - m11 * m11) / n);
  return r;
}

}  // namespace multclt
