#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "multclt/rng.hpp"
#include "multclt/transforms.hpp"

using namespace multclt;

namespace {

UnimodularLattice z3() { return UnimodularLattice::from_basis(Mat3::identity()); }

}  // namespace

TEST_CASE("siegel_transform worked values") {
  CHECK(siegel_transform({{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}}, z3()) == 26);
  CHECK(siegel_transform({{0.1, 0.1, 0.1}, {0.9, 0.9, 0.9}}, z3()) == 0);
  CHECK(siegel_transform({{-0.6, -0.6, 0.5}, {0.6, 0.6, 1.5}},
                         lattice_from_alpha(0.5, 0.5)) == 4);
}

TEST_CASE("siegel_transform is additive over disjoint boxes") {
  RngStream rng(61, 0);
  for (int i = 0; i < 20; ++i) {
    const UnimodularLattice L = lattice_from_alpha(rng.next_double(), rng.next_double());
    const double split = 1.0 + 3.0 * rng.next_double();
    const BoxRegion whole{{-0.7, -0.7, 0.2}, {0.7, 0.7, 9.2}};
    const BoxRegion lower{{-0.7, -0.7, 0.2}, {0.7, 0.7, split}};
    const BoxRegion upper{{-0.7, -0.7, std::nextafter(split, 10.0)}, {0.7, 0.7, 9.2}};
    CHECK(siegel_transform(whole, L) ==
          siegel_transform(lower, L) + siegel_transform(upper, L));
  }
}

TEST_CASE("y_expectation_exact worked values") {
  // Box [-1/2,1/2]^2 x [1,2] at n = (1,1): q in {8..14}, area 1 -> 7 e^-2.
  const BoxRegion box{{-0.5, -0.5, 1.0}, {0.5, 0.5, 2.0}};
  CHECK(y_expectation_exact(box, {1.0, 1.0}) ==
        doctest::Approx(7.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(7.0 * std::exp(-2.0) == doctest::Approx(0.9473).epsilon(1e-4));
  // A y-range straddling no multiple of e^-s.
  const BoxRegion gap{{-0.5, -0.5, 1.001}, {0.5, 0.5, 1.353}};
  CHECK(y_expectation_exact(gap, {0.0, 0.0}) == 0.0);
  const BoxRegion unit{{-0.5, -0.5, 0.5}, {0.5, 0.5, 1.5}};
  CHECK(y_expectation_exact(unit, {0.0, 0.0}) == 1.0);
  CHECK_THROWS_AS(y_expectation_exact({{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}}, {0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("y_expectation_mc reproduces the exact values") {
  // The n = (0,0) unit-height box is deterministic: exactly one point per alpha.
  const BoxRegion unit{{-0.5, -0.5, 0.5}, {0.5, 0.5, 1.5}};
  const auto det = y_expectation_mc(unit, {0.0, 0.0}, 2000, 7);
  CHECK(det.mean == 1.0);
  CHECK(det.stderr_ == 0.0);

  const BoxRegion worked{{-0.5, -0.5, 1.0}, {0.5, 0.5, 2.0}};
  const auto mc = y_expectation_mc(worked, {1.0, 1.0}, 20000, 8);
  CHECK(std::fabs(mc.mean - 7.0 * std::exp(-2.0)) <= 4.0 * mc.stderr_);

  // Zero-mean boxes stay zero.
  const BoxRegion gap{{-0.5, -0.5, 1.001}, {0.5, 0.5, 1.353}};
  const auto zero = y_expectation_mc(gap, {0.0, 0.0}, 500, 9);
  CHECK(zero.mean == 0.0);
  CHECK(zero.stderr_ == 0.0);

  // A grid of (box, n) pairs within 4 standard errors.
  RngStream rng(62, 0);
  for (int i = 0; i < 6; ++i) {
    const double w1 = 0.3 + 0.5 * rng.next_double();
    const double w2 = 0.3 + 0.5 * rng.next_double();
    const double ylo = 0.5 + rng.next_double();
    const BoxRegion box{{-w1, -w2, ylo}, {w1, w2, ylo + 1.0 + rng.next_double()}};
    const FlowExponent n{static_cast<double>(i % 3), static_cast<double>((i * 2) % 3)};
    const auto est = y_expectation_mc(box, n, 8000, 100 + i);
    const double exact = y_expectation_exact(box, n);
    CHECK(std::fabs(est.mean - exact) <= std::max(4.0 * est.stderr_, 1e-12));
  }
}

TEST_CASE("large flow times approach the flat average") {
  // At n = (8,8) the family average matches the box volume closely.
  const BoxRegion box{{-0.5, -0.5, 1.0}, {0.5, 0.5, 2.0}};
  const double vol = (box.hi.x1 - box.lo.x1) * (box.hi.x2 - box.lo.x2) *
                     (box.hi.y - box.lo.y);
  const auto mc = y_expectation_mc(box, {8.0, 8.0}, 20000, 11);
  CHECK(std::fabs(mc.mean - vol) <= 4.0 * mc.stderr_ + 0.05);
}

TEST_CASE("height_tail: degenerate flow, monotonicity") {
  const auto flat = height_tail({0.0, 0.0}, {2.0, 4.0, 8.0}, 500, 5);
  for (const auto& row : flat) CHECK(row.fraction == 0.0);
  const auto tail = height_tail({4.0, 4.0}, {2.0, 4.0, 8.0, 16.0}, 4000, 6);
  for (std::size_t i = 1; i < tail.size(); ++i) {
    CHECK(tail[i].fraction <= tail[i - 1].fraction);
  }
  CHECK_THROWS_AS(height_tail({1.0, 1.0}, {4.0, 2.0}, 500, 5), std::invalid_argument);
}

TEST_CASE("height_tail is bounded by C (L^-3 + L^-2 e^-min(n))") {
  const std::vector<double> grid{2.0, 4.0, 8.0, 16.0};
  double C = 0.0;
  for (double k : {4.0, 6.0, 8.0}) {
    const auto tail = height_tail({k, k}, grid, 4000, 12);
    for (const auto& row : tail) {
      const double bound = std::pow(row.L, -3.0) + std::pow(row.L, -2.0) * std::exp(-k);
      if (row.fraction > 0.0) C = std::max(C, row.fraction / bound);
    }
  }
  CHECK(C > 0.0);
  CHECK(C <= 50.0);
}

TEST_CASE("second moment dominates the squared mean and is stable in n") {
  const BoxRegion box{{-0.5, -0.5, 0.1}, {0.5, 0.5, 1.0}};
  double fitted_lo = 1e300, fitted_hi = 0.0;
  for (double k : {2.0, 4.0, 6.0}) {
    const FlowExponent n{k, k};
    const auto m2 = second_moment_y(box, n, 8000, 13);
    const auto m1 = y_expectation_mc(box, n, 8000, 13);
    CHECK(m2.mean + 4.0 * m2.stderr_ >= m1.mean * m1.mean);
    const double denom = 1.0 * std::pow(std::max(1.0, std::log(10.0)), 2.0);
    const double fitted = m2.mean / denom;
    fitted_lo = std::min(fitted_lo, fitted);
    fitted_hi = std::max(fitted_hi, fitted);
  }
  CHECK(fitted_hi <= 3.0 * fitted_lo);

  // Empty-intersection boxes give zero.
  const BoxRegion gap{{0.31, 0.31, 1.12}, {0.36, 0.36, 1.13}};
  const auto zero = second_moment_y(gap, {0.0, 0.0}, 500, 14);
  CHECK(zero.mean == 0.0);
}

TEST_CASE("decorrelation probe basics") {
  const BoxRegion box{{-0.4, -0.4, 0.5}, {0.4, 0.4, 20.5}};
  // Identical flow times: covariance equals the variance of one transform.
  const auto same = decorrelation_probe(box, {1.0, 1.0}, {1.0, 1.0}, 3000, 15);
  CHECK(same.covariance >= 0.0);
  const auto far_box = decorrelation_probe({{40.0, 40.0, 40.0}, {41.0, 41.0, 41.0}},
                                           {0.0, 0.0}, {1.0, 1.0}, 300, 16);
  CHECK(far_box.covariance == 0.0);

  const auto near = decorrelation_probe(box, {0.0, 0.0}, {1.0, 1.0}, 20000, 17);
  const auto far = decorrelation_probe(box, {0.0, 0.0}, {8.0, 8.0}, 20000, 17);
  CHECK(std::fabs(far.covariance) <
        std::fabs(near.covariance) - 2.0 * (near.stderr_ + far.stderr_));
}
