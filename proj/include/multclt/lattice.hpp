#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "multclt/core.hpp"

namespace multclt {

using Vec3 = std::array<double, 3>;

// 3x3 matrix, m[r][c]; lattice bases store generators as columns.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity();
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  Vec3 column(int j) const;
  Vec3 apply(const Vec3& v) const;
  double det() const;
  Mat3 inverse() const;
};

struct FlowExponent {
  double t1 = 0.0;
  double t2 = 0.0;
};

// Full-rank lattice in R^3 with |det| = 1 (relative tolerance 1e-9).
struct UnimodularLattice {
  Mat3 basis;

  static UnimodularLattice from_basis(const Mat3& basis);
};

struct MinimaReport {
  double s1 = 0.0;       // shortest nonzero vector, sup norm
  double s1_star = 0.0;  // shortest nonzero wedge, sup norm on (w12, w13, w23)
  double d = 0.0;        // minimal nonzero triple determinant magnitude
  double height = 0.0;   // 1 / min(s1, s1_star, d)
};

// Lattice {(q x1 + p1, q x2 + p2, q)}: columns (1,0,0), (0,1,0), (x1,x2,1).
UnimodularLattice lattice_from_alpha(double x1, double x2);

// Diagonal flow diag(e^t1, e^t2, e^-t1-t2) applied to every basis vector.
// Rejects exponents that overflow the double range.
UnimodularLattice apply_flow(const FlowExponent& t, const UnimodularLattice& L);

// All nonzero lattice points in the closed box [lo, hi], sorted
// lexicographically by (x1, x2, y). The basis is LLL-reduced first and
// integer coefficients are enumerated over the exact projections of the box
// polytope, so the result is independent of the presented basis.
std::vector<Point3> enumerate_in_box(const UnimodularLattice& L, const Point3& lo,
                                     const Point3& hi,
                                     std::uint64_t budget = kDefaultEnumBudget);

// Certified successive minima. s1 comes from box enumeration on the reduced
// basis at radius R = shortest reduced vector: any lattice vector outside
// [-R,R]^3 already exceeds the candidates inside. s1_star is the same
// computation on the rank-3 wedge lattice spanned by b_i ^ b_j, which carries
// exactly the nonzero values lambda1 ^ lambda2 (in rank 3 every nonzero
// 2-vector of the lattice is decomposable). d equals |det| and is pinned to 1
// for unimodular input.
MinimaReport successive_minima(const UnimodularLattice& L,
                               std::uint64_t budget = kDefaultEnumBudget);

// height(a(n) Lambda_x) for n >= 0 componentwise.
double height_of_flowed_torus_lattice(double x1, double x2, const FlowExponent& n,
                                      std::uint64_t budget = kDefaultEnumBudget);

// Wedge coordinates (w12, w13, w23) of u ^ v.
Vec3 wedge(const Vec3& u, const Vec3& v);

// Basis of the wedge lattice: columns b1^b2, b1^b3, b2^b3.
Mat3 wedge_basis(const Mat3& basis);

}  // namespace multclt
