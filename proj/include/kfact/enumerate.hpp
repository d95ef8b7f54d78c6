#pragma once

#include <vector>

#include "kfact/factorization.hpp"
#include "kfact/forest.hpp"
#include "kfact/parking.hpp"

namespace kfact {
namespace enumerate {

/// (kn+1)^(n-1), the common size of R_n^k, F_n^k and P_n^k.
long long expected_count(int n, int k);

/// All rooted forests on 1..n, parent arrays in lexicographic order.
std::vector<RootedForest> forests(int n);

/// All k-forests: every colouring of every forest, lexicographic.
std::vector<KForest> k_forests(int n, int k);

/// All minimal k-factorizations, obtained through the bijection.
std::vector<KFactorization> k_factorizations(int n, int k);

/// Independent oracle: every length-n sequence of (k+1)-cycles on {0..kn}
/// whose product is the full cycle, by direct search. Guarded to kn <= 6
/// unless allow_large is set.
std::vector<KFactorization> brute_force_factorizations(int n, int k,
                                                       bool allow_large = false);

/// All k-parking functions of length n, lexicographic.
std::vector<ParkingFunction> k_parking_functions(int n, int k);

}  // namespace enumerate
}  // namespace kfact
