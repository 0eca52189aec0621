#include "splitquot/quot.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "splitquot/precondition.hpp"

namespace splitquot {

QuotEmbedding stromme_embedding(int r, long d, int N, int m) {
    require(d > 0, "quotient degree must be positive");
    require(N >= r && r >= 0, "need N >= r >= 0");
    require(m >= d, "embedding twist must be at least the degree");
    QuotEmbedding emb;
    emb.r = r;
    emb.d = d;
    emb.N = N;
    emb.m = m;
    emb.k1 = static_cast<int>((N - r) * static_cast<long>(m) - d);
    emb.n1 = N * m;
    emb.k2 = static_cast<int>((N - r) * static_cast<long>(m + 1) - d);
    emb.n2 = N * (m + 1);
    require(emb.k1 >= 1 && emb.k1 < emb.n1,
            "first Grassmannian factor is degenerate");
    require(emb.k2 >= 1 && emb.k2 < emb.n2,
            "second Grassmannian factor is degenerate");
    return emb;
}

long taut_rank(int r, long d, int m) {
    require(r >= 0, "quotient rank must be nonnegative");
    require(m >= -1, "tautological bundle exists only for twists >= -1");
    return r * static_cast<long>(m + 1) + d;
}

namespace {

// Multiplicities of S_{nu'} W in S_{lambda}(W (+) W), dim W = rank:
// sum over (g1, g2) of c^lambda_{g1,g2} c^{nu'}_{g1,g2}.
std::map<Partition, long> double_decomposition(const Partition& lambda,
                                               int rank) {
    std::map<Partition, long> out;
    if (lambda.empty()) {
        out[Partition()] = 1;
        return out;
    }
    for (const auto& [pair, c] : schur_of_double(lambda, rank))
        for (const auto& [nup, c2] : tensor_schur(pair.first, pair.second, rank))
            out[nup] += c * c2;
    return out;
}

std::map<Partition, long> second_factor_terms(const Partition& mu,
                                              const Partition& beta,
                                              int rank) {
    std::map<Partition, long> terms;
    for (const auto& [nup, mult] : double_decomposition(conjugate(mu), rank))
        for (const auto& [nu, c3] : tensor_schur(nup, beta, rank))
            terms[nu] += mult * c3;
    return terms;
}

void require_shapes(const QuotEmbedding& emb, const Partition& mu,
                    const Partition& alpha, const Partition& beta) {
    require(mu.length() <= emb.k1, "mu exceeds the rank of the subbundle");
    require(alpha.length() <= emb.n1 - emb.k1,
            "alpha exceeds the rank of the first quotient");
    require(beta.length() <= emb.n2 - emb.k2,
            "beta exceeds the rank of the second quotient");
}

} // namespace

VCohomologyDetail v_cohomology_detail(const QuotEmbedding& emb,
                                      const Partition& mu,
                                      const Partition& alpha,
                                      const Partition& beta) {
    require_shapes(emb, mu, alpha, beta);
    VCohomologyDetail out;
    out.factor1 = bwb_mixed(emb.k1, emb.n1, mu, alpha);
    if (out.factor1.vanishes())
        return out;
    for (const auto& [nu, mult] :
         second_factor_terms(mu, beta, emb.n2 - emb.k2)) {
        VFactorTerm term{nu, mult, bwb_quot_dual(emb.k2, emb.n2, nu)};
        if (!term.outcome.vanishes())
            out.report[*out.factor1.degree + *term.outcome.degree] += mult;
        out.terms.push_back(std::move(term));
    }
    return out;
}

CohomologyReport v_cohomology(const QuotEmbedding& emb, const Partition& mu,
                              const Partition& alpha, const Partition& beta) {
    return v_cohomology_detail(emb, mu, alpha, beta).report;
}

std::vector<Partition> koszul_summands(const QuotEmbedding& emb, int k) {
    require(k >= 0, "exterior power degree must be nonnegative");
    std::vector<Partition> out;
    for (const auto& [mudag, mu] :
         cauchy_wedge(k, 2 * (emb.n2 - emb.k2), emb.k1))
        out.push_back(mu);
    std::sort(out.begin(), out.end());
    return out;
}

SizeBoundCheck summand_size_bound(const QuotEmbedding& emb, const Partition& mu,
                               const Partition& alpha, const Partition& beta,
                               const Partition& nu) {
    require_shapes(emb, mu, alpha, beta);
    require(!mu.empty(), "the bound applies to nonempty mu");
    require(nu.length() <= emb.n2 - emb.k2,
            "nu exceeds the rank of the second quotient");
    const auto terms = second_factor_terms(mu, beta, emb.n2 - emb.k2);
    const auto it = terms.find(nu);
    require(it != terms.end() && it->second > 0,
            "nu does not occur in the decomposition for (mu, beta)");
    const QuotDualOutcome qd = bwb_quot_dual(emb.k2, emb.n2, nu);
    require(!qd.vanishes() && qd.witness_j.has_value(),
            "the second factor has no cohomology at nu");
    const BWBIndices idx = bwb_indices(emb.k1, emb.n1, mu, alpha);
    const int i1 = idx.i.front();
    const int j = *qd.witness_j;
    SizeBoundCheck out;
    out.i1 = i1;
    out.j = j;
    out.lhs = mu.size() + alpha.size() + beta.size();
    out.rhs = static_cast<long>(j) * emb.k2 +
              static_cast<long>(i1) * (emb.n1 - emb.k1) +
              static_cast<long>(i1 - j) * (i1 - j) + alpha.size();
    return out;
}

namespace {

struct MuBlockResult {
    std::vector<VanishingWitness> counterexamples;
    std::vector<VanishingWitness> sharp;
    long tuples = 0;
};

MuBlockResult sweep_mu_block(const QuotEmbedding& emb, const Partition& mu,
                             int D) {
    MuBlockResult res;
    const int q1 = emb.n1 - emb.k1;
    const int q2 = emb.n2 - emb.k2;
    const long bound = mu.size() + D;

    // Second factor depends on (mu, beta) only, first on (mu, alpha).
    for (int a = 0; a <= D; ++a) {
        std::vector<Partition> alphas;
        for (const Partition& alpha : partitions_of(a, q1, a))
            if (alpha.part(q1) == 0)
                alphas.push_back(alpha);
        if (alphas.empty())
            continue;
        for (const Partition& beta : partitions_of(D - a, q2, D - a)) {
            // Degrees contributed by the second factor, with multiplicity.
            std::map<long, long> d2_mults;
            for (const auto& [nu, mult] : second_factor_terms(mu, beta, q2)) {
                const QuotDualOutcome qd = bwb_quot_dual(emb.k2, emb.n2, nu);
                if (!qd.vanishes())
                    d2_mults[*qd.degree] += mult;
            }
            for (const Partition& alpha : alphas) {
                ++res.tuples;
                const BWBOutcome f1 = bwb_mixed(emb.k1, emb.n1, mu, alpha);
                if (f1.vanishes())
                    continue;
                for (const auto& [d2, mult] : d2_mults) {
                    const long degree = *f1.degree + d2;
                    if (degree > bound)
                        res.counterexamples.push_back(
                            {mu, alpha, beta, degree, bound});
                    else if (degree == bound)
                        res.sharp.push_back({mu, alpha, beta, degree, bound});
                }
            }
        }
    }
    return res;
}

VanishingReport run_sweep(const QuotEmbedding& emb, int D, int mu_cap,
                          int jobs) {
    require(D >= 1, "need |alpha| + |beta| > 0");
    require(D < emb.n1 - emb.k1,
            "twist too small: need D < n1 - k1 so that alpha_{n1-k1} = 0");
    require(mu_cap >= 0, "mu size cap must be nonnegative");

    std::vector<Partition> mus;
    for (int k = 0; k <= mu_cap; ++k)
        for (const Partition& mu : koszul_summands(emb, k))
            mus.push_back(mu);

    std::vector<MuBlockResult> slots(mus.size());
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long i = 0; i < static_cast<long>(mus.size()); ++i)
            slots[static_cast<std::size_t>(i)] =
                sweep_mu_block(emb, mus[static_cast<std::size_t>(i)], D);
    } else
#endif
    {
        (void)jobs;
        for (std::size_t i = 0; i < mus.size(); ++i)
            slots[i] = sweep_mu_block(emb, mus[i], D);
    }

    VanishingReport report;
    for (MuBlockResult& slot : slots) {
        report.tuples_checked += slot.tuples;
        for (auto& w : slot.counterexamples)
            report.counterexamples.push_back(std::move(w));
        for (auto& w : slot.sharp)
            report.sharp.push_back(std::move(w));
    }
    auto key_less = [](const VanishingWitness& x, const VanishingWitness& y) {
        const int xs = x.mu.size(), ys = y.mu.size();
        return std::tie(xs, x.mu, x.alpha, x.beta, x.degree) <
               std::tie(ys, y.mu, y.alpha, y.beta, y.degree);
    };
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              key_less);
    std::sort(report.sharp.begin(), report.sharp.end(), key_less);
    return report;
}

} // namespace

VanishingReport verify_vanishing(const QuotEmbedding& emb, int D, int mu_cap,
                                 int jobs) {
    require(jobs >= 1, "job count must be positive");
    return run_sweep(emb, D, mu_cap, jobs);
}

VanishingReport verify_vanishing_serial(const QuotEmbedding& emb, int D,
                                        int mu_cap) {
    return run_sweep(emb, D, mu_cap, 1);
}

} // namespace splitquot
