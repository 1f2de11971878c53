#include "multclt/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace multclt {

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
  return r;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    r.m[i][0] = c0[i];
    r.m[i][1] = c1[i];
    r.m[i][2] = c2[i];
  }
  return r;
}

Vec3 Mat3::column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

Vec3 Mat3::apply(const Vec3& v) const {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) {
    r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  }
  return r;
}

double Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::inverse() const {
  const double d = det();
  if (d == 0.0 || !std::isfinite(d)) {
    throw std::invalid_argument("Mat3: singular matrix");
  }
  Mat3 r;
  r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  return r;
}

Vec3 wedge(const Vec3& u, const Vec3& v) {
  return {u[0] * v[1] - u[1] * v[0],   // w12
          u[0] * v[2] - u[2] * v[0],   // w13
          u[1] * v[2] - u[2] * v[1]};  // w23
}

Mat3 wedge_basis(const Mat3& basis) {
  const Vec3 b1 = basis.column(0);
  const Vec3 b2 = basis.column(1);
  const Vec3 b3 = basis.column(2);
  return Mat3::from_columns(wedge(b1, b2), wedge(b1, b3), wedge(b2, b3));
}

UnimodularLattice UnimodularLattice::from_basis(const Mat3& basis) {
  const double d = std::fabs(basis.det());
  if (!std::isfinite(d) || d == 0.0) {
    throw std::invalid_argument("UnimodularLattice: basis is singular");
  }
  if (std::fabs(d - 1.0) > 1e-9) {
    throw std::invalid_argument("UnimodularLattice: |det| must be 1");
  }
  return UnimodularLattice{basis};
}

UnimodularLattice lattice_from_alpha(double x1, double x2) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw std::invalid_argument("lattice_from_alpha: coordinates must be finite");
  }
  return UnimodularLattice{
      Mat3::from_columns({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {x1, x2, 1.0})};
}

UnimodularLattice apply_flow(const FlowExponent& t, const UnimodularLattice& L) {
  if (!std::isfinite(t.t1) || !std::isfinite(t.t2) ||
      std::fabs(t.t1) > 700.0 || std::fabs(t.t2) > 700.0 ||
      std::fabs(t.t1 + t.t2) > 700.0) {
    throw std::range_error("apply_flow: exponent out of double range");
  }
  const double s0 = std::exp(t.t1);
  const double s1 = std::exp(t.t2);
  const double s2 = std::exp(-t.t1 - t.t2);
  Mat3 r = L.basis;
  for (int j = 0; j < 3; ++j) {
    r.m[0][j] *= s0;
    r.m[1][j] *= s1;
    r.m[2][j] *= s2;
  }
  return UnimodularLattice{r};
}

namespace {

double sup_norm(const Vec3& v) {
  return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

// LLL (delta = 0.75) on three columns, tracking the unimodular coefficient
// matrix so the reduced vectors can be recomputed from the original basis.
struct Reduced {
  Mat3 basis;                                  // reduced columns
  std::array<std::array<long long, 3>, 3> u;   // basis_red = basis_orig * u
};

Reduced lll_reduce(const Mat3& input) {
  std::array<Vec3, 3> b = {input.column(0), input.column(1), input.column(2)};
  std::array<std::array<long long, 3>, 3> u{};
  for (int i = 0; i < 3; ++i) u[i][i] = 1;

  std::array<Vec3, 3> star;
  std::array<std::array<double, 3>, 3> mu{};
  std::array<double, 3> norm2{};

  auto gram_schmidt = [&] {
    for (int i = 0; i < 3; ++i) {
      star[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = norm2[j] > 0.0 ? dot(b[i], star[j]) / norm2[j] : 0.0;
        for (int k = 0; k < 3; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      norm2[i] = dot(star[i], star[i]);
    }
  };

  auto size_reduce = [&](int i, int j) {
    const double r = std::round(mu[i][j]);
    if (r == 0.0 || std::fabs(r) > 9.0e15) return;
    const long long m = static_cast<long long>(r);
    for (int k = 0; k < 3; ++k) b[i][k] -= r * b[j][k];
    for (int k = 0; k < 3; ++k) u[k][i] -= m * u[k][j];
    for (int k = 0; k < j; ++k) mu[i][k] -= r * mu[j][k];
    mu[i][j] -= r;
  };

  gram_schmidt();
  int k = 1;
  int iter = 0;
  while (k < 3 && ++iter < 512) {
    for (int j = k - 1; j >= 0; --j) size_reduce(k, j);
    gram_schmidt();
    const double lhs = norm2[k];
    const double rhs = (0.75 - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      for (int r = 0; r < 3; ++r) std::swap(u[r][k], u[r][k - 1]);
      gram_schmidt();
      k = std::max(k - 1, 1);
    }
  }

  // Recompute reduced columns from the exact integer combination to shed
  // drift accumulated by the in-place updates.
  Mat3 red;
  for (int j = 0; j < 3; ++j) {
    for (int r = 0; r < 3; ++r) {
      red.m[r][j] = input.m[r][0] * static_cast<double>(u[0][j]) +
                    input.m[r][1] * static_cast<double>(u[1][j]) +
                    input.m[r][2] * static_cast<double>(u[2][j]);
    }
  }
  return Reduced{red, u};
}

// One-sided linear form c . k <= bound.
struct HalfSpace {
  std::array<double, 3> c{};
  double bound = 0.0;
};

constexpr double kCoefEps = 1e-13;

// Fourier-Motzkin elimination of variable `var` from `cons`; appends the
// derived constraints (free of `var`) to `out`.
void eliminate(const std::vector<HalfSpace>& cons, int var, std::vector<HalfSpace>* out) {
  std::vector<HalfSpace> uppers, lowers;
  for (const HalfSpace& h : cons) {
    const double cv = h.c[var];
    if (std::fabs(cv) <= kCoefEps) {
      out->push_back(h);
    } else if (cv > 0.0) {
      uppers.push_back(h);
    } else {
      lowers.push_back(h);
    }
  }
  for (const HalfSpace& up : uppers) {
    for (const HalfSpace& lo : lowers) {
      // lower(k_rest) <= k_var <= upper(k_rest), cross-multiplied by the
      // positive leading coefficients.
      HalfSpace h;
      const double a = up.c[var];
      const double bneg = -lo.c[var];
      for (int j = 0; j < 3; ++j) h.c[j] = bneg * up.c[j] + a * lo.c[j];
      h.c[var] = 0.0;
      h.bound = bneg * up.bound + a * lo.bound;
      out->push_back(h);
    }
  }
}

// Interval of `var` implied by constraints whose only surviving variable is
// `var`, with the other coordinates already substituted in `fixed`.
void bounds_for(const std::vector<HalfSpace>& cons, int var, const std::array<double, 3>& fixed,
                double* lo, double* hi) {
  *lo = -std::numeric_limits<double>::infinity();
  *hi = std::numeric_limits<double>::infinity();
  for (const HalfSpace& h : cons) {
    double rest = h.bound;
    for (int j = 0; j < 3; ++j) {
      if (j != var) rest -= h.c[j] * fixed[j];
    }
    const double cv = h.c[var];
    if (std::fabs(cv) <= kCoefEps) {
      // Dropped coefficients are below kCoefEps, so only prune on a clear
      // violation; the exact box filter disposes of false candidates later.
      if (rest < -1e-6 * (1.0 + std::fabs(h.bound))) {
        *lo = 1.0;
        *hi = 0.0;
        return;
      }
      continue;
    }
    const double v = rest / cv;
    if (cv > 0.0) {
      *hi = std::min(*hi, v);
    } else {
      *lo = std::max(*lo, v);
    }
  }
}

long long floor_ll(double x) { return static_cast<long long>(std::floor(x)); }
long long ceil_ll(double x) { return static_cast<long long>(std::ceil(x)); }

// Enumerates every integer k with B k in the closed box [lo, hi]. Candidate
// ranges come from exact Fourier-Motzkin projections of the box polytope
// (inflated by a hair so rounding cannot drop boundary points); each candidate
// is then filtered against the box with exact comparisons.
template <typename Fn>
void enumerate_box(const Mat3& B, const Vec3& lo, const Vec3& hi, std::uint64_t budget,
                   Fn&& visit) {
  std::vector<HalfSpace> cons;
  cons.reserve(6);
  for (int i = 0; i < 3; ++i) {
    HalfSpace up{{B.m[i][0], B.m[i][1], B.m[i][2]}, hi[i]};
    HalfSpace dn{{-B.m[i][0], -B.m[i][1], -B.m[i][2]}, -lo[i]};
    cons.push_back(up);
    cons.push_back(dn);
  }

  std::vector<HalfSpace> no_k0;
  eliminate(cons, 0, &no_k0);
  std::vector<HalfSpace> no_k01;
  eliminate(no_k0, 1, &no_k01);

  const double slack = 1e-9;
  std::array<double, 3> fixed{};
  double lo2, hi2;
  bounds_for(no_k01, 2, fixed, &lo2, &hi2);
  if (!(lo2 <= hi2)) return;
  if (!std::isfinite(lo2) || !std::isfinite(hi2) || std::fabs(lo2) > 9e15 ||
      std::fabs(hi2) > 9e15 || hi2 - lo2 > static_cast<double>(budget)) {
    throw BudgetExceeded("enumerate_in_box: outer coefficient range too large");
  }

  std::uint64_t visited = 0;
  const long long k2_lo = ceil_ll(lo2 - slack * (1.0 + std::fabs(lo2)));
  const long long k2_hi = floor_ll(hi2 + slack * (1.0 + std::fabs(hi2)));
  for (long long k2 = k2_lo; k2 <= k2_hi; ++k2) {
    fixed[2] = static_cast<double>(k2);
    double lo1, hi1;
    bounds_for(no_k0, 1, fixed, &lo1, &hi1);
    if (!(lo1 <= hi1)) continue;
    if (!std::isfinite(lo1) || !std::isfinite(hi1) || std::fabs(lo1) > 9e15 ||
        std::fabs(hi1) > 9e15) {
      throw BudgetExceeded("enumerate_in_box: middle coefficient range too large");
    }
    const long long k1_lo = ceil_ll(lo1 - slack * (1.0 + std::fabs(lo1)));
    const long long k1_hi = floor_ll(hi1 + slack * (1.0 + std::fabs(hi1)));
    for (long long k1 = k1_lo; k1 <= k1_hi; ++k1) {
      if ((visited += 1) > budget) {
        throw BudgetExceeded("enumerate_in_box: candidate budget exceeded");
      }
      fixed[1] = static_cast<double>(k1);
      double lo0, hi0;
      bounds_for(cons, 0, fixed, &lo0, &hi0);
      if (!(lo0 <= hi0)) continue;
      if (!std::isfinite(lo0) || !std::isfinite(hi0) || std::fabs(lo0) > 9e15 ||
          std::fabs(hi0) > 9e15) {
        throw BudgetExceeded("enumerate_in_box: inner coefficient range too large");
      }
      const long long k0_lo = ceil_ll(lo0 - slack * (1.0 + std::fabs(lo0)));
      const long long k0_hi = floor_ll(hi0 + slack * (1.0 + std::fabs(hi0)));
      for (long long k0 = k0_lo; k0 <= k0_hi; ++k0) {
        if ((visited += 1) > budget) {
          throw BudgetExceeded("enumerate_in_box: candidate budget exceeded");
        }
        if (k0 == 0 && k1 == 0 && k2 == 0) continue;
        const Vec3 z = B.apply({static_cast<double>(k0), static_cast<double>(k1),
                                static_cast<double>(k2)});
        if (z[0] >= lo[0] && z[0] <= hi[0] && z[1] >= lo[1] && z[1] <= hi[1] &&
            z[2] >= lo[2] && z[2] <= hi[2]) {
          visit(z);
        }
      }
    }
  }
}

// Certified sup-norm shortest vector. The search radius starts at the
// shortest reduced basis vector and doubles until a minimum is found inside
// the box; vectors outside [-R,R]^3 exceed R, so the found minimum (<= R)
// is global.
double shortest_sup_norm(const Mat3& basis, std::uint64_t budget) {
  const Reduced red = lll_reduce(basis);
  double radius = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 3; ++j) {
    radius = std::min(radius, sup_norm(red.basis.column(j)));
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("shortest_sup_norm: degenerate basis");
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    double best = std::numeric_limits<double>::infinity();
    const Vec3 lo = {-radius, -radius, -radius};
    const Vec3 hi = {radius, radius, radius};
    enumerate_box(red.basis, lo, hi, budget, [&](const Vec3& z) {
      best = std::min(best, sup_norm(z));
    });
    if (best <= radius) return best;
    radius *= 2.0;
  }
  throw BudgetExceeded("shortest_sup_norm: no certified minimum found");
}

}  // namespace

std::vector<Point3> enumerate_in_box(const UnimodularLattice& L, const Point3& lo,
                                     const Point3& hi, std::uint64_t budget) {
  if (!(lo.x1 < hi.x1 && lo.x2 < hi.x2 && lo.y < hi.y)) {
    throw std::invalid_argument("enumerate_in_box: need lo < hi componentwise");
  }
  const Reduced red = lll_reduce(L.basis);
  std::vector<Point3> out;
  enumerate_box(red.basis, {lo.x1, lo.x2, lo.y}, {hi.x1, hi.x2, hi.y}, budget,
                [&](const Vec3& z) {
                  out.push_back(Point3{z[0], z[1], z[2]});
                });
  std::sort(out.begin(), out.end(), [](const Point3& a, const Point3& b) {
    if (a.x1 != b.x1) return a.x1 < b.x1;
    if (a.x2 != b.x2) return a.x2 < b.x2;
    return a.y < b.y;
  });
  return out;
}

MinimaReport successive_minima(const UnimodularLattice& L, std::uint64_t budget) {
  MinimaReport r;
  r.s1 = shortest_sup_norm(L.basis, budget);
  r.s1_star = shortest_sup_norm(wedge_basis(L.basis), budget);
  // Triples lambda_1 ^ lambda_2 ^ lambda_3 realize det(basis) times every
  // nonzero integer determinant, so the minimum is |det(basis)| itself;
  // unimodular input pins it to 1.
  const double ad = std::fabs(L.basis.det());
  r.d = std::fabs(ad - 1.0) <= 1e-9 ? 1.0 : ad;
  r.height = 1.0 / std::min({r.s1, r.s1_star, r.d});
  return r;
}

double height_of_flowed_torus_lattice(double x1, double x2, const FlowExponent& n,
                                      std::uint64_t budget) {
  if (!(n.t1 >= 0.0 && n.t2 >= 0.0)) {
    throw std::invalid_argument("height_of_flowed_torus_lattice: need n >= 0");
  }
  const UnimodularLattice flowed = apply_flow(n, lattice_from_alpha(x1, x2));
  return successive_minima(flowed, budget).height;
}

}  // namespace multclt
