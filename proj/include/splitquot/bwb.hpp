#pragma once

#include <optional>
#include <vector>

#include "splitquot/partition.hpp"

namespace splitquot {

/*
 * Borel-Weil-Bott on Gr(k, n) (k-dimensional subspaces of an n-space),
 * specialized to the two weight shapes needed for tautological bundles:
 * S_mu A (x) S_alpha B^v with A the rank-k subbundle and B the rank-(n-k)
 * quotient, and S_nu B^v alone. A bundle of this kind has cohomology in at
 * most one degree; the rule adds a staircase to the weight and vanishes on
 * repeats, otherwise the degree is the length of the sorting permutation.
 */

struct BWBOutcome {
    std::optional<long> degree; // nullopt: all cohomology vanishes
    bool vanishes() const { return !degree.has_value(); }
};

// S_mu A (x) S_alpha B^v on Gr(k, n). The staircase vector is
// (f_k, ..., f_1, g_1, ..., g_{n-k}) with f_i = n-k+i-1-mu_i and
// g_j = n-k-j+alpha_j; the degree counts its inversions.
BWBOutcome bwb_mixed(int k, int n, const Partition& mu,
                     const Partition& alpha);

struct QuotDualOutcome {
    std::optional<long> degree;
    std::optional<int> witness_j; // absent for nu empty (degree 0)
    bool vanishes() const { return !degree.has_value(); }
};

// S_nu B^v on Gr(k, n): nonzero iff nu is empty (degree 0) or there is a
// (unique) 1 <= j <= n-k with nu_j >= k + j and nu_{j+1} <= j, in which
// case the degree is j*k.
QuotDualOutcome bwb_quot_dual(int k, int n, const Partition& nu);

struct BWBIndices {
    std::vector<int> i; // 0 <= i_1 <= ... <= i_{n-k} <= k
    long d1;            // sum of (i_l - i_{l-1}) * (n-k-l+1)
};

// Crossing indices of the nonvanishing mixed bundle: i_l is the largest i
// with f_i < g_{n-k-l+1} (0 if none). The closed-form degree d1 equals the
// inversion count of bwb_mixed.
BWBIndices bwb_indices(int k, int n, const Partition& mu,
                       const Partition& alpha);

} // namespace splitquot
