#pragma once

#include <cstdint>

#include "multclt/core.hpp"

namespace multclt {

// Number of integer triples (p1, p2, q) with
//   a < |q x1 - p1| |q x2 - p2| q < b,  |q xi - pi| <= c,  1 <= q < T.
// The q loop tests the at most two integers p in [q x - c, q x + c] per
// coordinate; the strict lower bound excludes zero products throughout.
// threads > 1 splits the q range into chunks whose integer partial counts
// are summed in chunk order, so the result never depends on the split.
std::int64_t count_products(double x1, double x2, const DomainParams& p,
                            int threads = 1);

// Same count obtained through the lattice route: points of Lambda_x inside
// the bounding box of Omega, filtered by in_omega. Requires T <= 1e5.
std::int64_t count_via_lattice(double x1, double x2, const DomainParams& p,
                               std::uint64_t budget = kDefaultEnumBudget);

// Solutions with 0 < |q x1 - p1| |q x2 - p2| q <= (ln T)^-K and coordinates
// bounded by c, 1 <= q < T.
std::int64_t count_small_products(double x1, double x2, double K, double T, double c);

// (count_products - vol) / sqrt(vol).
double discrepancy(double x1, double x2, const DomainParams& p, double vol);

}  // namespace multclt
