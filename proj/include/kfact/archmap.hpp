#pragma once

#include <vector>

#include "kfact/factorization.hpp"
#include "kfact/forest.hpp"

namespace kfact {

/// Combinatorial layout of an arch diagram and its planar dual.
/// For edge label i in 1..m: the arch spans [l(i), r(i)) on baseline
/// positions 0..m, and d(i) is the baseline position of the dual child
/// vertex of edge i. The d values form a permutation of {0..m-1}.
struct DualLayout {
  int m = 0;
  std::vector<int> l, r, d;  // 1-indexed, slot 0 unused
};

/// The arch-diagram bijection F_m -> R_m: vertex i's parent is the arch
/// whose span minimally strictly contains span(i); span-maximal arches
/// become roots.
RootedForest cda(const KFactorization& f);

/// Arch endpoints plus the dual child position of every edge. d(i) is the
/// unique baseline position under arch i not covered by a nested arch,
/// computed from the cover structure alone.
DualLayout dual_layout(const KFactorization& f);

/// Inverse of cda: reconstructs the unique noncrossing layout whose cover
/// poset is F and reads off the arch endpoints.
KFactorization cda_inverse(const RootedForest& forest);

/// The main bijection F_n^k -> R_n^k (join of cda of the lower decomposition).
KForest jcdal(const KFactorization& f);

KFactorization jcdal_inverse(const KForest& forest);

/// Same map computed through the upper decomposition; agrees with jcdal
/// pointwise.
KForest jcdal_via_upper(const KFactorization& f);

}  // namespace kfact
