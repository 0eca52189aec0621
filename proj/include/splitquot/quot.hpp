#pragma once

#include <map>
#include <optional>
#include <vector>

#include "splitquot/bwb.hpp"
#include "splitquot/lr.hpp"
#include "splitquot/partition.hpp"

namespace splitquot {

/*
 * Numerology of the embedding of Quot^{r,d}_{P^1}(O^N) into a product of
 * Grassmannians Gr(k1, n1) x Gr(k2, n2) built from the sections of two
 * consecutive twists of the universal subsheaf. Valid for d > 0, N >= r >= 0
 * and twist m >= d.
 */
struct QuotEmbedding {
    int r;
    long d;
    int N;
    int m;
    int k1, n1; // first factor Gr(k1, n1)
    int k2, n2; // second factor Gr(k2, n2)
};

QuotEmbedding stromme_embedding(int r, long d, int N, int m);

// Rank of the tautological bundle E_m = (p_* Q(m))^v, i.e. r(m+1) + d.
long taut_rank(int r, long d, int m);

// Total multiplicity of nonzero cohomology by degree; empty when the
// bundle has no cohomology at all. Multiplicities are always positive.
using CohomologyReport = std::map<long, long>;

/*
 * Cohomology of V_{mu,alpha,beta} = (S_mu A1 (x) S_alpha B1^v) boxtimes
 * (S_{mu^t}(B2^v (+) B2^v) (x) S_beta B2^v) on the Grassmannian product.
 * The second factor decomposes into S_nu B2^v with multiplicity
 * sum_{g1,g2,nu'} c^{mu^t}_{g1,g2} c^{nu'}_{g1,g2} c^nu_{nu',beta}; degrees
 * combine by Kunneth as D1 + D2 with multiplicities accumulating.
 */
CohomologyReport v_cohomology(const QuotEmbedding& emb, const Partition& mu,
                              const Partition& alpha, const Partition& beta);

// Per-summand detail of the second factor, for reporting and bound checks.
struct VFactorTerm {
    Partition nu;
    long multiplicity;
    QuotDualOutcome outcome;
};

struct VCohomologyDetail {
    BWBOutcome factor1;             // S_mu A1 (x) S_alpha B1^v
    std::vector<VFactorTerm> terms; // all nu with positive multiplicity
    CohomologyReport report;
};

VCohomologyDetail v_cohomology_detail(const QuotEmbedding& emb,
                                      const Partition& mu,
                                      const Partition& alpha,
                                      const Partition& beta);

// The mu indexing the Koszul summands of wedge^k over the product: all
// mu |- k with length <= k1 and mu_1 <= 2(n2 - k2).
std::vector<Partition> koszul_summands(const QuotEmbedding& emb, int k);

struct SizeBoundCheck {
    long lhs; // |mu| + |alpha| + |beta|
    long rhs; // j*k2 + i1*(n1 - k1) + (i1 - j)^2 + |alpha|
    int i1;
    int j;
};

// Both sides of the size lower bound for a nonvanishing summand
// W_{mu,alpha,nu} of V_{mu,alpha,beta}; lhs >= rhs always.
SizeBoundCheck summand_size_bound(const QuotEmbedding& emb, const Partition& mu,
                               const Partition& alpha, const Partition& beta,
                               const Partition& nu);

struct VanishingWitness {
    Partition mu, alpha, beta;
    long degree;
    long bound; // |mu| + |alpha| + |beta|
};

struct VanishingReport {
    long tuples_checked = 0;
    std::vector<VanishingWitness> counterexamples; // degree > bound
    std::vector<VanishingWitness> sharp;           // degree == bound
};

/*
 * Sweep of the cohomology bound over all (mu, alpha, beta) with
 * |alpha| + |beta| = D, alpha_{n1-k1} = 0 and |mu| <= mu_cap: every nonzero
 * degree of V_{mu,alpha,beta} must be at most |mu| + D. Requires
 * D < n1 - k1. Work is split across threads by mu; results are merged in
 * enumeration order, so output is identical for any job count.
 */
VanishingReport verify_vanishing(const QuotEmbedding& emb, int D, int mu_cap,
                                 int jobs);

// Single-threaded reference implementation with identical output.
VanishingReport verify_vanishing_serial(const QuotEmbedding& emb, int D,
                                        int mu_cap);

} // namespace splitquot
