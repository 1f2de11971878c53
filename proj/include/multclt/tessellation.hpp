#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "multclt/core.hpp"

namespace multclt {

// Index of a tessellation cell; members of the index set satisfy
// alpha <= n1 + n2 < beta with nonnegative n1, n2.
struct CellIndex {
  int n1 = 0;
  int n2 = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// (ln(e^-2 c^2 / b), ln(T c^2 / a)). Requires a > 0, otherwise the index set
// is unbounded.
std::pair<double, double> index_bounds(const DomainParams& p);

// All cell indices in lexicographic (n1, n2) order.
std::vector<CellIndex> cells(const DomainParams& p);

// Cell membership: a < |x1 x2| y <= b, c/e < |xi| <= c, and
// e^-(n1+n2) <= y < T e^-(n1+n2).
bool in_cell(const Point3& z, const CellIndex& n, const DomainParams& p);

// For z in Omega, the unique index n with a(n) z in the cell; empty otherwise.
// n_i is the integer placing e^{n_i} |x_i| inside (c/e, c], recovered by
// flooring ln(c/|x_i|) and correcting against the half-open convention, then
// verified through in_cell.
std::optional<CellIndex> locate(const Point3& z, const DomainParams& p);

// Box containing every cell: [-c,c]^2 x [a c^-2, e^2 b c^-2].
std::pair<Point3, Point3> cell_bounding_box(const CellIndex& n, const DomainParams& p);

// a(n) z for integer flow exponents.
Point3 apply_cell_flow(const CellIndex& n, const Point3& z);

}  // namespace multclt
