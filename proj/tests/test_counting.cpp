#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "multclt/counting.hpp"
#include "multclt/rng.hpp"
#include "multclt/volumes.hpp"
#include "oracles.hpp"

using namespace multclt;

TEST_CASE("count_products worked values") {
  CHECK(count_products(0.0, 0.0, {0.0, 0.5, 0.5, 10.0}) == 0);
  CHECK(count_products(0.5, 0.5, {0.0, 0.1, 0.5, 10.0}) == 0);
  CHECK_THROWS_AS(count_products(0.1, 0.2, {0.0, 0.5, 0.5, 1e10}),
                  std::invalid_argument);
}

TEST_CASE("count_products is invariant under q chunking") {
  const double x1 = std::sqrt(2.0) - 1.0, x2 = std::sqrt(3.0) - 1.0;
  const DomainParams p{0.0, 0.3, 0.5, 2e4};
  const std::int64_t serial = count_products(x1, x2, p, 1);
  CHECK(count_products(x1, x2, p, 3) == serial);
  CHECK(count_products(x1, x2, p, 8) == serial);
}

TEST_CASE("count_products equals the extended-precision oracle") {
  const double x1 = std::sqrt(2.0) - 1.0, x2 = std::sqrt(3.0) - 1.0;
  const DomainParams p{0.0, 0.2, 0.5, 1000.0};
  const auto oracle = oracles::ld_count_products(x1, x2, p);
  REQUIRE_FALSE(oracle.near_boundary);
  CHECK(count_products(x1, x2, p) == oracle.count);
}

TEST_CASE("count_products equals the oracle on random x") {
  RngStream rng(31, 0);
  int done = 0;
  while (done < 12) {
    const double x1 = rng.next_double(), x2 = rng.next_double();
    DomainParams p{0.0, 0.05 + 0.6 * rng.next_double(), 0.5, 2000.0};
    if (rng.next_double() < 0.4) p.a = p.b * 0.2 * rng.next_double();
    if (rng.next_double() < 0.5) p.c = 0.2 + 0.3 * rng.next_double();
    const auto oracle = oracles::ld_count_products(x1, x2, p);
    if (oracle.near_boundary) continue;
    CHECK(count_products(x1, x2, p) == oracle.count);
    ++done;
  }
}

TEST_CASE("count is invariant under x -> 1 - x at c = 1/2") {
  RngStream rng(32, 0);
  int done = 0;
  while (done < 12) {
    const double x1 = rng.next_double(), x2 = rng.next_double();
    const DomainParams p{0.0, 0.3, 0.5, 1000.0};
    const auto direct = oracles::ld_count_products(x1, x2, p);
    const auto mirr1 = oracles::ld_count_products(1.0 - x1, x2, p);
    const auto mirr2 = oracles::ld_count_products(x1, 1.0 - x2, p);
    if (direct.near_boundary || mirr1.near_boundary || mirr2.near_boundary) continue;
    CHECK(count_products(x1, x2, p) == count_products(1.0 - x1, x2, p));
    CHECK(count_products(x1, x2, p) == count_products(x1, 1.0 - x2, p));
    ++done;
  }
}

TEST_CASE("count_products is monotone in a, b, T") {
  RngStream rng(33, 0);
  for (int i = 0; i < 25; ++i) {
    const double x1 = rng.next_double(), x2 = rng.next_double();
    DomainParams p{0.0, 0.0, 0.45, 500.0 + 500.0 * rng.next_double()};
    p.a = 0.2 * rng.next_double();
    p.b = p.a + 0.01 + 0.5 * rng.next_double();
    DomainParams bigger_b = p;
    bigger_b.b = p.b + (0.99 - p.b) * rng.next_double();
    DomainParams bigger_T = p;
    bigger_T.T = p.T * (1.0 + rng.next_double());
    DomainParams smaller_a = p;
    smaller_a.a = p.a * rng.next_double();
    const std::int64_t base = count_products(x1, x2, p);
    CHECK(count_products(x1, x2, bigger_b) >= base);
    CHECK(count_products(x1, x2, bigger_T) >= base);
    CHECK(count_products(x1, x2, smaller_a) >= base);
  }
}

TEST_CASE("count_via_lattice equals count_products") {
  CHECK(count_via_lattice(0.0, 0.0, {0.0, 0.5, 0.5, 10.0}) == 0);
  CHECK_THROWS_AS(count_via_lattice(0.1, 0.2, {0.0, 0.5, 0.5, 2e5}),
                  std::invalid_argument);
  RngStream rng(34, 0);
  const DomainParams sets[]{{0.0, 0.3, 0.5, 100.0},
                            {0.01, 0.5, 0.5, 100.0},
                            {0.0, 0.2, 0.35, 100.0}};
  for (const DomainParams& p : sets) {
    for (int i = 0; i < 30; ++i) {
      const double x1 = rng.next_double(), x2 = rng.next_double();
      CHECK(count_via_lattice(x1, x2, p) == count_products(x1, x2, p));
    }
  }
}

TEST_CASE("count_small_products worked values") {
  CHECK(count_small_products(0.0, 0.0, 3.0, 1e4, 0.5) == 0);
  CHECK_THROWS_AS(count_small_products(0.1, 0.2, 3.0, 2.0, 0.5), std::invalid_argument);
  // Huge K drives the threshold to zero: no solutions for generic x.
  RngStream rng(35, 0);
  for (int i = 0; i < 20; ++i) {
    CHECK(count_small_products(rng.next_double(), rng.next_double(), 1000.0, 1e6, 0.5) == 0);
  }
}

TEST_CASE("count_small_products equals the extended-precision oracle") {
  const double x1 = std::sqrt(2.0) - 1.0, x2 = std::sqrt(3.0) - 1.0;
  const auto oracle = oracles::ld_count_small_products(x1, x2, 3.0, 1e5, 0.5);
  REQUIRE_FALSE(oracle.near_boundary);
  CHECK(count_small_products(x1, x2, 3.0, 1e5, 0.5) == oracle.count);
  RngStream rng(36, 0);
  for (int i = 0; i < 10; ++i) {
    const double a1 = rng.next_double(), a2 = rng.next_double();
    const auto o = oracles::ld_count_small_products(a1, a2, 2.5, 2e4, 0.5);
    if (o.near_boundary) continue;
    CHECK(count_small_products(a1, a2, 2.5, 2e4, 0.5) == o.count);
  }
}

TEST_CASE("discrepancy definition and composition") {
  const DomainParams p{0.0, 0.3, 0.5, 1e4};
  CHECK_THROWS_AS(discrepancy(0.1, 0.2, p, 0.0), std::invalid_argument);
  const double vol = vol_omega_exact(p);
  const double x1 = std::sqrt(2.0) - 1.0, x2 = std::sqrt(3.0) - 1.0;
  const auto oracle = oracles::ld_count_products(x1, x2, p);
  REQUIRE_FALSE(oracle.near_boundary);
  const double expected = (static_cast<double>(oracle.count) - vol) / std::sqrt(vol);
  CHECK(discrepancy(x1, x2, p, vol) == doctest::Approx(expected).epsilon(1e-12));
  // count = vol and count = vol + sqrt(vol) map to 0 and 1.
  CHECK((vol - vol) / std::sqrt(vol) == 0.0);
  CHECK((vol + std::sqrt(vol) - vol) / std::sqrt(vol) == doctest::Approx(1.0));
}
