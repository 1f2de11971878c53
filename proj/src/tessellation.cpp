#include "multclt/tessellation.hpp"

#include <cmath>
#include <stdexcept>

namespace multclt {

namespace {

constexpr double kE = 2.718281828459045235;

void require_positive_a(const DomainParams& p) {
  if (!(p.a > 0.0)) {
    throw std::invalid_argument("tessellation: a = 0 makes the index set unbounded");
  }
}

}  // namespace

std::pair<double, double> index_bounds(const DomainParams& p) {
  p.validate();
  require_positive_a(p);
  const double alpha = -2.0 - std::log(p.b) + 2.0 * std::log(p.c);
  const double beta = std::log(p.T) - std::log(p.a) + 2.0 * std::log(p.c);
  return {alpha, beta};
}

std::vector<CellIndex> cells(const DomainParams& p) {
  const auto [alpha, beta] = index_bounds(p);
  std::vector<CellIndex> out;
  const double s_lo_real = std::max(0.0, std::ceil(alpha));
  const double s_hi_real = std::ceil(beta) - 1.0;  // n1 + n2 < beta
  if (s_hi_real < s_lo_real) return out;
  const int s_lo = static_cast<int>(s_lo_real);
  const int s_hi = static_cast<int>(s_hi_real);
  for (int n1 = 0; n1 <= s_hi; ++n1) {
    for (int n2 = std::max(0, s_lo - n1); n1 + n2 <= s_hi; ++n2) {
      out.push_back(CellIndex{n1, n2});
    }
  }
  return out;
}

bool in_cell(const Point3& z, const CellIndex& n, const DomainParams& p) {
  p.validate();
  const double inv_e_c = p.c / kE;
  const double a1 = std::fabs(z.x1);
  const double a2 = std::fabs(z.x2);
  if (!(a1 > inv_e_c && a1 <= p.c)) return false;
  if (!(a2 > inv_e_c && a2 <= p.c)) return false;
  const double prod = std::fabs(z.x1 * z.x2) * z.y;
  if (!(prod > p.a && prod <= p.b)) return false;
  const double scale = std::exp(-static_cast<double>(n.n1 + n.n2));
  return z.y >= scale && z.y < p.T * scale;
}

Point3 apply_cell_flow(const CellIndex& n, const Point3& z) {
  // The y factor matches in_cell's window scale expression so boundary
  // points (y = 1 exactly) stay classified consistently.
  const double e1 = std::exp(static_cast<double>(n.n1));
  const double e2 = std::exp(static_cast<double>(n.n2));
  return Point3{z.x1 * e1, z.x2 * e2,
                z.y * std::exp(-static_cast<double>(n.n1 + n.n2))};
}

std::optional<CellIndex> locate(const Point3& z, const DomainParams& p) {
  p.validate();
  require_positive_a(p);
  if (!in_omega(z, p)) return std::nullopt;

  // e^{n_i} |x_i| must land in (c/e, c]; start from the floor of ln(c/|x_i|)
  // and correct by direct comparison so exact boundary values obey the
  // half-open convention.
  const double inv_e_c = p.c / kE;
  int n[2];
  const double coords[2] = {std::fabs(z.x1), std::fabs(z.x2)};
  for (int i = 0; i < 2; ++i) {
    int ni = static_cast<int>(std::floor(std::log(p.c / coords[i])));
    for (int step = 0; step < 4; ++step) {
      const double v = std::exp(static_cast<double>(ni)) * coords[i];
      if (v > p.c) {
        --ni;
      } else if (v <= inv_e_c) {
        ++ni;
      } else {
        break;
      }
    }
    n[i] = ni;
  }
  const CellIndex idx{n[0], n[1]};
  const auto [alpha, beta] = index_bounds(p);
  const double s = static_cast<double>(idx.n1 + idx.n2);
  const bool in_index_set =
      idx.n1 >= 0 && idx.n2 >= 0 && s >= alpha && s < beta;
  if (!in_index_set || !in_cell(apply_cell_flow(idx, z), idx, p)) {
    throw std::logic_error("locate: point in Omega failed cell verification");
  }
  return idx;
}

std::pair<Point3, Point3> cell_bounding_box(const CellIndex&, const DomainParams& p) {
  p.validate();
  const double c2 = p.c * p.c;
  return {Point3{-p.c, -p.c, p.a / c2}, Point3{p.c, p.c, kE * kE * p.b / c2}};
}

}  // namespace multclt
