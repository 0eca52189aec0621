#pragma once

#include <string>
#include <vector>

#include "splitquot/partition.hpp"

namespace splitquot {

/*
 * Splitting type of a vector bundle on P^1: the weakly increasing exponent
 * vector (e_1, ..., e_r) of O(e_1) (+) ... (+) O(e_r). The empty type is
 * allowed (rank-zero bundle); it carries no cohomology and is convenient
 * as the "no subsheaf constraint" case.
 *
 * Cohomology on P^1 reduces to the line-bundle counts
 *   h0 O(e)(m) = max(e + m + 1, 0),  h1 O(e)(m) = max(-e - m - 1, 0),
 * so everything in this header is exact integer arithmetic.
 */
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    long degree() const { return degree_; }
    bool empty() const { return entries_.empty(); }

    int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    int min_entry() const { return entries_.front(); }
    int max_entry() const { return entries_.back(); }

    // Subrange (e_lo, ..., e_hi), 1-based inclusive.
    SplittingType slice(int lo, int hi) const;

    std::string to_string() const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    friend auto operator<=>(const SplittingType& a, const SplittingType& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    long degree_ = 0;
};

long h0(const SplittingType& e, long m);
long h1(const SplittingType& e, long m);

// h1 End O(e) = sum over pairs of max(e_j - e_i - 1, 0); the expected
// codimension of the corresponding splitting stratum.
long u(const SplittingType& e);

long hom(const SplittingType& a, const SplittingType& b);  // h0 Hom(O(a), O(b))
long ext1(const SplittingType& a, const SplittingType& b); // h1 Hom(O(a), O(b))

bool is_balanced(const SplittingType& e);           // max - min <= 1
bool is_perfectly_balanced(const SplittingType& e); // all entries equal
// Some split point (including the trivial one) leaves both halves balanced.
bool is_tame(const SplittingType& e);

/*
 * Dominance order on a fixed (rank, degree) class: e >= f when every prefix
 * sum of e weakly exceeds the prefix sum of f. Three interchangeable tests:
 * prefix sums, the h1-by-twist comparison over the finite window where the
 * twists can differ, and the constructive subsheaf-flag recursion. All
 * require matching rank and degree.
 */
bool dominates(const SplittingType& e, const SplittingType& f);
bool dominates_via_h1(const SplittingType& e, const SplittingType& f);
bool dominates_via_flag(const SplittingType& e, const SplittingType& f);

/*
 * Harder-Narasimhan flag data. On P^1, the flag groups equal entries by
 * value, largest slope first: E_1 is the top block, E_{m+1} the full bundle.
 * quotient_ranks/degrees record rank and degree of O(e)/E_i for i = 1..m.
 */
struct HNData {
    std::vector<SplittingType> flag; // E_1, ..., E_{m+1}
    std::vector<int> quotient_ranks;
    std::vector<long> quotient_degrees;
    int steps() const { return static_cast<int>(flag.size()) - 1; } // m
};

HNData hn_data(const SplittingType& e);

/*
 * Subsets I of [m] (m = HN steps) such that every successive quotient
 * E_{i_j}/E_{i_{j-1}} of the induced subflag is balanced, with E_{i_0} = 0
 * and E_{i_{k+1}} the full bundle. Enumerated in bitmask order.
 */
std::vector<std::vector<int>> admissible_sets(const SplittingType& e);

// O(e) has a subsheaf isomorphic to O(a) iff a_{s-j} <= e_{r-j} for
// 0 <= j < s: the top entries of a fit under the top entries of e.
bool admits_subsheaf(const SplittingType& a, const SplittingType& e);

// True when some rank-r degree-d type admits an O(a)-subsheaf; always the
// case for rank(a) < r, and for rank(a) == r exactly when d >= deg(a).
bool eb_feasible(int r, long d, const SplittingType& a);

/*
 * The dominance-maximal splitting type of rank r and degree d admitting an
 * O(a)-subsheaf. Has the shape (Bal, a_plus) with Bal balanced and a_plus a
 * tail of a; found by scanning the tail length downward and keeping the
 * first candidate that is weakly increasing and still admits a.
 */
SplittingType eb(int r, long d, const SplittingType& a);

// u(e) - ext1(O(a), O(e)); nonnegative whenever O(e) admits an
// O(a)-subsheaf, and zero exactly at e == eb(r, d, a).
long gap(const SplittingType& a, const SplittingType& e);

/*
 * Chain of splitting types with strictly increasing ranks, each admitting
 * an inclusion into the next, the last being the ambient bundle.
 */
struct FlagChain {
    std::vector<SplittingType> types;
};

// Dimension of the space of flags with these splitting types inside the
// ambient bundle: sum over steps of h0 Hom(t_i, t_{i+1}) - h0 End(t_i).
long flag_stratum_dim(const FlagChain& chain);

struct StratumCodim {
    long codim;
    long rk_f;     // rank of the ambient pushforward at twist c
    long rk_g;     // rank at twist c - 1
    long hom_term; // h0 Hom(O(a), O(c+1)^{rk_g})
    long gap;      // u(e) - ext1(a, e)
};

/*
 * Codimension of the locus of O(a)-subsheaves of bundles of type e inside
 * the ambient relative Quot scheme at twist c >= e_r:
 *   u(a) + rk_g * sum_j (c + 2 - a_j) + u(e) - ext1(a, e).
 * rk_g defaults to rc - d (and rk_f to r(c+1) - d), the Euler
 * characteristics of the dual bundle at twists c-1 and c.
 */
StratumCodim stratum_codim(const SplittingType& a, const SplittingType& e,
                           long c);
StratumCodim stratum_codim(const SplittingType& a, const SplittingType& e,
                           long c, long rk_f, long rk_g);

struct TangentCheck {
    long lhs;
    long rhs;
};

/*
 * Both sides of the tangent-space dimension identity at a worst-case point:
 * lhs = u(ep) + sum_j chi Hom(E_{i_j}, E_{i_{j+1}}/E_{i_j}) computed from
 * the (e, I) subflag ranks and degrees, rhs = u(ep) - u(e). Requires I
 * admissible for e and ep <= e; the two sides agree identically.
 */
TangentCheck tangent_check(const SplittingType& e, const std::vector<int>& I,
                           const SplittingType& ep);

// Splitting type ((-2)^{g-d+r}, (-1)^{k-g+d-2r-1}, 0^{r+1}) of rank k.
SplittingType gp_type(int g, long d, int r, int k);

} // namespace splitquot
