#pragma once

#include <utility>
#include <vector>

#include "splitquot/partition.hpp"

namespace splitquot {

// Association lists sorted ascending by key; multiplicities always positive.
using PartitionMultiset = std::vector<std::pair<Partition, long>>;
using PartitionPair = std::pair<Partition, Partition>;
using PartitionPairMultiset = std::vector<std::pair<PartitionPair, long>>;

/*
 * Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
 * semistandard skew tableaux of shape nu/lambda and content mu whose
 * reverse reading word is a lattice word. Counted by backtracking over
 * cells in reading order. Zero whenever |nu| != |lambda| + |mu| or
 * lambda is not contained in nu.
 */
long lr_coefficient(const Partition& lambda, const Partition& mu,
                    const Partition& nu);

// Decomposition of S_lambda V (x) S_mu V into Schur functors of V with
// dim V = max_length; summands needing more than max_length rows vanish.
PartitionMultiset tensor_schur(const Partition& lambda, const Partition& mu,
                               int max_length);

// Decomposition of S_lambda(V (+) W) into S_{g1} V (x) S_{g2} W where both
// V and W have dimension `rank`. Multiplicity of (g1, g2) is c^lambda_{g1,g2}.
PartitionPairMultiset schur_of_double(const Partition& lambda, int rank);

/*
 * Cauchy decomposition of the n-th exterior power of a tensor product:
 *   wedge^n (E (x) F) = (+)_{mu |- n} S_{mu^t} E (x) S_mu F,
 * restricted to mu with mu_1 <= rank E and length(mu) <= rank F.
 * Returns the surviving (mu^t, mu) pairs sorted by first component.
 */
std::vector<PartitionPair> cauchy_wedge(int n, int rank_e, int rank_f);

/*
 * t-th term of the Schur complex of a map E -> F^{(+)2}: the multiset of
 * (alpha^t, beta) with multiplicity c^lambda_{alpha,beta} over alpha |- t,
 * beta |- |lambda| - t. First component indexes the source bundle, second
 * the doubled target.
 */
PartitionPairMultiset schur_complex_terms(const Partition& lambda, int t);

} // namespace splitquot
