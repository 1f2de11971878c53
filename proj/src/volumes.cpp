#include "multclt/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace multclt {

namespace {

// Integral over [1, T) of the area G(p_ / y), G as in upsilon_area.
double area_integral(double part, double c, double T) {
  if (part <= 0.0 || T <= 1.0) return 0.0;
  const double c2 = c * c;
  const double y0 = part / c2;  // below y0 the x-section saturates at 4 c^2
  double total = 0.0;
  if (y0 > 1.0) total += 4.0 * c2 * (std::min(T, y0) - 1.0);
  const double y_start = std::max(1.0, y0);
  if (T > y_start) {
    auto antiderivative = [&](double y) {
      const double l = std::log(c2 * y / part);
      return 4.0 * part * std::log(y) + 2.0 * part * l * l;
    };
    total += antiderivative(T) - antiderivative(y_start);
  }
  return total;
}

double hat(double t) { return std::max(0.0, 1.0 - std::fabs(t)); }

double hat_sum(double t, int m_cutoff) {
  double s = 0.0;
  for (int m = -m_cutoff; m <= m_cutoff; ++m) s += hat(static_cast<double>(m) + t);
  return s;
}

// sum_{k > M} k^-2, Euler-Maclaurin past M >= 30.
double tail_inv_square(long long M) {
  double acc = 0.0;
  while (M < 30) {
    ++M;
    acc += 1.0 / (static_cast<double>(M) * static_cast<double>(M));
  }
  const double x = static_cast<double>(M);
  acc += 1.0 / x - 1.0 / (2.0 * x * x) + 1.0 / (6.0 * x * x * x) -
         1.0 / (30.0 * std::pow(x, 5)) + 1.0 / (42.0 * std::pow(x, 7));
  return acc;
}

// sum_{k > M} k^-3.
double tail_inv_cube(long long M) {
  double acc = 0.0;
  while (M < 30) {
    ++M;
    acc += 1.0 / std::pow(static_cast<double>(M), 3);
  }
  const double x = static_cast<double>(M);
  acc += 1.0 / (2.0 * x * x) - 1.0 / (2.0 * x * x * x) +
         1.0 / (4.0 * std::pow(x, 4)) - 1.0 / (12.0 * std::pow(x, 6));
  return acc;
}

// sum over pairs with max(p, q) > M of 4 max(p, q)^-3, i.e. the exact tail of
// the all-pairs series (each shell max = k holds 2k - 1 pairs).
double tail_all_pairs(long long M) {
  if (M <= 0) return 8.0 * kZeta2 - 4.0 * kZeta3;
  return 8.0 * tail_inv_square(M) - 4.0 * tail_inv_cube(M);
}

const std::vector<int>& moebius_table() {
  static const std::vector<int> mu = [] {
    const int n = 150000;
    std::vector<int> m(n + 1, 1);
    std::vector<int> primes;
    std::vector<bool> composite(n + 1, false);
    for (int i = 2; i <= n; ++i) {
      if (!composite[i]) {
        primes.push_back(i);
        m[i] = -1;
      }
      for (int p : primes) {
        const long long ip = static_cast<long long>(i) * p;
        if (ip > n) break;
        composite[ip] = true;
        if (i % p == 0) {
          m[ip] = 0;
          break;
        }
        m[ip] = -m[i];
      }
    }
    return m;
  }();
  return mu;
}

// Tail of the coprime-pairs series past cutoff N, by Moebius inversion of the
// all-pairs tails: sum_d mu(d) d^-3 tail_all(floor(N/d)).
double tail_coprime(long long N) {
  const auto& mu = moebius_table();
  double acc = 0.0;
  for (std::size_t d = 1; d < mu.size(); ++d) {
    if (mu[d] == 0) continue;
    const double dd = static_cast<double>(d);
    acc += static_cast<double>(mu[d]) / (dd * dd * dd) *
           tail_all_pairs(N / static_cast<long long>(d));
  }
  return acc;
}

double interval_overlap(double lo1, double hi1, double lo2, double hi2) {
  return std::max(0.0, std::min(hi1, hi2) - std::max(lo1, lo2));
}

}  // namespace

double vol_omega_exact(const DomainParams& p) {
  p.validate_allow_degenerate();
  return area_integral(p.b, p.c, p.T) - area_integral(p.a, p.c, p.T);
}

double vol_omega_main_terms(const DomainParams& p) {
  p.validate_allow_degenerate();
  const double L = std::log(p.T);
  const double c2 = p.c * p.c;
  const double b_term = p.b * std::log(c2 / p.b);
  const double a_term = p.a > 0.0 ? p.a * std::log(c2 / p.a) : 0.0;
  return 2.0 * L * L * (p.b - p.a) + 4.0 * L * ((p.b - p.a) + b_term - a_term);
}

double v_pq_m(int p, int q, int m1, int m2) {
  if (p < 1 || q < 1) throw std::invalid_argument("v_pq_m: need p, q >= 1");
  const double t = std::log(static_cast<double>(q) / static_cast<double>(p));
  const double pq_max = static_cast<double>(std::max(p, q));
  // The hat product is grouped first so swapping m1 and m2 is exact.
  const double hats = hat(static_cast<double>(m1) + t) * hat(static_cast<double>(m2) + t);
  return 4.0 / (pq_max * pq_max * pq_max) * hats;
}

double v_pq_inf(int p, int q, int m_cutoff) {
  if (p < 1 || q < 1) throw std::invalid_argument("v_pq_inf: need p, q >= 1");
  if (m_cutoff < 0) throw std::invalid_argument("v_pq_inf: need m_cutoff >= 0");
  const double t = std::log(static_cast<double>(q) / static_cast<double>(p));
  const double pq_max = static_cast<double>(std::max(p, q));
  return 4.0 / (pq_max * pq_max * pq_max) * hat_sum(t, m_cutoff) * hat_sum(t, m_cutoff);
}

void SeriesConfig::validate() const {
  if (pq_cutoff < 1) throw std::invalid_argument("SeriesConfig: pq_cutoff >= 1");
  if (m_cutoff < 1) throw std::invalid_argument("SeriesConfig: m_cutoff >= 1");
}

SigmaSeries sigma_squared(const SeriesConfig& cfg) {
  cfg.validate();
  const bool coprime_only = cfg.variant == SeriesVariant::kCoprimePairs;
  double raw = 0.0;
  double max_ratio = 0.0;
  for (int p = 1; p <= cfg.pq_cutoff; ++p) {
    for (int q = 1; q <= cfg.pq_cutoff; ++q) {
      if (coprime_only && std::gcd(p, q) != 1) continue;
      const double v = v_pq_inf(p, q, cfg.m_cutoff);
      raw += v;
      if (v > 0.0) {
        max_ratio = std::max(
            max_ratio, v * std::pow(static_cast<double>(p), 1.5) *
                           std::pow(static_cast<double>(q), 1.5));
      }
    }
  }

  // Comparison-series tail bound with the calibrated constant doubled.
  const double calibrated = 2.0 * max_ratio;
  double h32 = 0.0;
  for (int k = 1; k <= cfg.pq_cutoff; ++k) h32 += std::pow(static_cast<double>(k), -1.5);
  const double comparison_tail = kZeta3Half * kZeta3Half - h32 * h32;

  SigmaSeries out;
  switch (cfg.variant) {
    case SeriesVariant::kAllPairs:
      out.partial_sum = raw;
      out.value = raw + tail_all_pairs(cfg.pq_cutoff);
      out.tail_bound = calibrated * comparison_tail;
      break;
    case SeriesVariant::kZetaWeighted:
      out.partial_sum = raw / kZeta3;
      out.value = (raw + tail_all_pairs(cfg.pq_cutoff)) / kZeta3;
      out.tail_bound = calibrated * comparison_tail / kZeta3;
      break;
    case SeriesVariant::kCoprimePairs:
      out.partial_sum = raw;
      out.value = raw + tail_coprime(cfg.pq_cutoff);
      out.tail_bound = calibrated * comparison_tail;
      break;
  }
  return out;
}

std::vector<SeriesTerm> series_terms(const SeriesConfig& cfg) {
  cfg.validate();
  const bool coprime_only = cfg.variant == SeriesVariant::kCoprimePairs;
  std::vector<SeriesTerm> out;
  for (int p = 1; p <= cfg.pq_cutoff; ++p) {
    for (int q = 1; q <= cfg.pq_cutoff; ++q) {
      if (coprime_only && std::gcd(p, q) != 1) continue;
      for (int m1 = -cfg.m_cutoff; m1 <= cfg.m_cutoff; ++m1) {
        for (int m2 = -cfg.m_cutoff; m2 <= cfg.m_cutoff; ++m2) {
          const double v = v_pq_m(p, q, m1, m2);
          if (v > 0.0) out.push_back(SeriesTerm{p, q, m1, m2, v});
        }
      }
    }
  }
  return out;
}

double Box3::volume() const {
  double v = 1.0;
  for (int i = 0; i < 3; ++i) v *= std::max(0.0, hi[i] - lo[i]);
  return v;
}

double rogers_rhs(const std::vector<Box3>& f_boxes, const std::vector<Box3>& g_boxes,
                  int pq_cutoff) {
  if (pq_cutoff < 1) throw std::invalid_argument("rogers_rhs: need pq_cutoff >= 1");
  auto check = [](const std::vector<Box3>& boxes) {
    for (const Box3& b : boxes) {
      for (int i = 0; i < 3; ++i) {
        if (!(b.lo[i] < b.hi[i])) {
          throw std::invalid_argument("rogers_rhs: box needs lo < hi");
        }
      }
    }
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (std::size_t j = i + 1; j < boxes.size(); ++j) {
        bool overlap = true;
        for (int k = 0; k < 3; ++k) {
          overlap = overlap && interval_overlap(boxes[i].lo[k], boxes[i].hi[k],
                                                boxes[j].lo[k], boxes[j].hi[k]) > 0.0;
        }
        if (overlap) {
          throw std::invalid_argument("rogers_rhs: boxes in a union must be disjoint");
        }
      }
    }
  };
  check(f_boxes);
  check(g_boxes);

  double int_f = 0.0, int_g = 0.0;
  for (const Box3& b : f_boxes) int_f += b.volume();
  for (const Box3& b : g_boxes) int_g += b.volume();

  // f(p z) is the indicator of p^-1 box; the -q term reflects g's boxes.
  auto cross = [&](bool reflect_g) {
    double s = 0.0;
    for (int p = 1; p <= pq_cutoff; ++p) {
      for (int q = 1; q <= pq_cutoff; ++q) {
        const double pd = static_cast<double>(p);
        const double qd = static_cast<double>(q);
        for (const Box3& bf : f_boxes) {
          for (const Box3& bg : g_boxes) {
            double v = 1.0;
            for (int k = 0; k < 3 && v > 0.0; ++k) {
              const double glo = reflect_g ? -bg.hi[k] / qd : bg.lo[k] / qd;
              const double ghi = reflect_g ? -bg.lo[k] / qd : bg.hi[k] / qd;
              v *= interval_overlap(bf.lo[k] / pd, bf.hi[k] / pd, glo, ghi);
            }
            s += v;
          }
        }
      }
    }
    return s;
  };

  return int_f * int_g + (cross(false) + cross(true)) / kZeta3;
}

}  // namespace multclt
