#include "multclt/counting.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "multclt/lattice.hpp"

namespace multclt {

namespace {

std::int64_t q_limit(double T) {
  // 1 <= q < T for real T.
  return static_cast<std::int64_t>(std::ceil(T)) - 1;
}

std::int64_t count_products_range(double x1, double x2, const DomainParams& p,
                                  std::int64_t q_lo, std::int64_t q_hi) {
  const double a = p.a, b = p.b, c = p.c;
  std::int64_t count = 0;
  for (std::int64_t q = q_lo; q <= q_hi; ++q) {
    const double qd = static_cast<double>(q);
    const double t1 = qd * x1;
    const double t2 = qd * x2;
    const std::int64_t p1_lo = static_cast<std::int64_t>(std::ceil(t1 - c));
    const std::int64_t p1_hi = static_cast<std::int64_t>(std::floor(t1 + c));
    if (p1_lo > p1_hi) continue;
    const std::int64_t p2_lo = static_cast<std::int64_t>(std::ceil(t2 - c));
    const std::int64_t p2_hi = static_cast<std::int64_t>(std::floor(t2 + c));
    if (p2_lo > p2_hi) continue;
    for (std::int64_t p1 = p1_lo; p1 <= p1_hi; ++p1) {
      const double d1 = std::fabs(t1 - static_cast<double>(p1));
      if (d1 > c) continue;
      for (std::int64_t p2 = p2_lo; p2 <= p2_hi; ++p2) {
        const double d2 = std::fabs(t2 - static_cast<double>(p2));
        if (d2 > c) continue;
        const double prod = d1 * d2 * qd;
        if (prod > a && prod < b) ++count;
      }
    }
  }
  return count;
}

}  // namespace

std::int64_t count_products(double x1, double x2, const DomainParams& p, int threads) {
  p.validate();
  if (p.T > 4294967296.0) {
    throw std::invalid_argument("count_products: T > 2^32 is out of range");
  }
  const std::int64_t qmax = q_limit(p.T);
  if (threads <= 1 || qmax < 4096) {
    return count_products_range(x1, x2, p, 1, qmax);
  }
  const int workers = static_cast<int>(std::min<std::int64_t>(threads, qmax));
  std::vector<std::int64_t> partial(workers, 0);
  const std::int64_t chunk = (qmax + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = 1 + w * chunk;
    const std::int64_t hi = std::min(qmax, lo + chunk - 1);
    if (lo > hi) break;
    pool.emplace_back([&, w, lo, hi] {
      partial[w] = count_products_range(x1, x2, p, lo, hi);
    });
  }
  for (auto& t : pool) t.join();
  std::int64_t count = 0;
  for (std::int64_t c : partial) count += c;  // fixed chunk order
  return count;
}

std::int64_t count_via_lattice(double x1, double x2, const DomainParams& p,
                               std::uint64_t budget) {
  p.validate();
  if (p.T > 1e5) {
    throw std::invalid_argument("count_via_lattice: T must be <= 1e5");
  }
  const UnimodularLattice L = lattice_from_alpha(x1, x2);
  const Point3 lo{-p.c, -p.c, 1.0};
  const Point3 hi{p.c, p.c, p.T};
  std::int64_t count = 0;
  for (const Point3& z : enumerate_in_box(L, lo, hi, budget)) {
    if (in_omega(z, p)) ++count;
  }
  return count;
}

std::int64_t count_small_products(double x1, double x2, double K, double T, double c) {
  if (!(T > 2.718281828459045)) {
    throw std::invalid_argument("count_small_products: need T > e");
  }
  if (!(K > 0.0)) throw std::invalid_argument("count_small_products: need K > 0");
  if (!(c > 0.0 && c < 1.0)) {
    throw std::invalid_argument("count_small_products: need 0 < c < 1");
  }
  if (T > 4294967296.0) {
    throw std::invalid_argument("count_small_products: T > 2^32 is out of range");
  }
  const double cutoff = std::pow(std::log(T), -K);
  const std::int64_t qmax = q_limit(T);
  std::int64_t count = 0;
  for (std::int64_t q = 1; q <= qmax; ++q) {
    const double qd = static_cast<double>(q);
    const double t1 = qd * x1;
    const double t2 = qd * x2;
    const std::int64_t p1_lo = static_cast<std::int64_t>(std::ceil(t1 - c));
    const std::int64_t p1_hi = static_cast<std::int64_t>(std::floor(t1 + c));
    if (p1_lo > p1_hi) continue;
    const std::int64_t p2_lo = static_cast<std::int64_t>(std::ceil(t2 - c));
    const std::int64_t p2_hi = static_cast<std::int64_t>(std::floor(t2 + c));
    if (p2_lo > p2_hi) continue;
    for (std::int64_t p1 = p1_lo; p1 <= p1_hi; ++p1) {
      const double d1 = std::fabs(t1 - static_cast<double>(p1));
      if (d1 > c) continue;
      for (std::int64_t p2 = p2_lo; p2 <= p2_hi; ++p2) {
        const double d2 = std::fabs(t2 - static_cast<double>(p2));
        if (d2 > c) continue;
        const double prod = d1 * d2 * qd;
        if (prod > 0.0 && prod <= cutoff) ++count;
      }
    }
  }
  return count;
}

double discrepancy(double x1, double x2, const DomainParams& p, double vol) {
  if (!(vol > 0.0)) throw std::invalid_argument("discrepancy: need vol > 0");
  const std::int64_t n = count_products(x1, x2, p);
  return (static_cast<double>(n) - vol) / std::sqrt(vol);
}

}  // namespace multclt
