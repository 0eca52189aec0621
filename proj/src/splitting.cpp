#include "splitquot/splitting.hpp"

#include <algorithm>
#include <numeric>

#include "splitquot/precondition.hpp"

namespace splitquot {

SplittingType::SplittingType(std::vector<int> entries)
    : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        require(entries_[i - 1] <= entries_[i],
                "splitting type entries must be weakly increasing");
    degree_ = std::accumulate(entries_.begin(), entries_.end(), 0L);
}

SplittingType SplittingType::slice(int lo, int hi) const {
    if (lo > hi)
        return SplittingType();
    return SplittingType(std::vector<int>(entries_.begin() + (lo - 1),
                                          entries_.begin() + hi));
}

std::string SplittingType::to_string() const {
    if (entries_.empty())
        return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

long h0(const SplittingType& e, long m) {
    long total = 0;
    for (int ei : e.entries())
        total += std::max(ei + m + 1, 0L);
    return total;
}

long h1(const SplittingType& e, long m) {
    long total = 0;
    for (int ei : e.entries())
        total += std::max(-ei - m - 1, 0L);
    return total;
}

long u(const SplittingType& e) {
    long total = 0;
    for (int a : e.entries())
        for (int b : e.entries())
            total += std::max(b - a - 1, 0);
    return total;
}

long hom(const SplittingType& a, const SplittingType& b) {
    long total = 0;
    for (int ai : a.entries())
        for (int bi : b.entries())
            total += std::max(bi - ai + 1, 0);
    return total;
}

long ext1(const SplittingType& a, const SplittingType& b) {
    long total = 0;
    for (int ai : a.entries())
        for (int bi : b.entries())
            total += std::max(ai - bi - 1, 0);
    return total;
}

bool is_balanced(const SplittingType& e) {
    return e.empty() || e.max_entry() - e.min_entry() <= 1;
}

bool is_perfectly_balanced(const SplittingType& e) {
    return e.empty() || e.max_entry() == e.min_entry();
}

bool is_tame(const SplittingType& e) {
    if (e.rank() <= 1)
        return true;
    for (int k = 1; k <= e.rank(); ++k)
        if (is_balanced(e.slice(1, k)) && is_balanced(e.slice(k + 1, e.rank())))
            return true;
    return false;
}

namespace {

void require_comparable(const SplittingType& e, const SplittingType& f) {
    require(e.rank() == f.rank(),
            "dominance requires splitting types of equal rank");
    require(e.degree() == f.degree(),
            "dominance requires splitting types of equal degree");
}

} // namespace

bool dominates(const SplittingType& e, const SplittingType& f) {
    require_comparable(e, f);
    long se = 0, sf = 0;
    for (int i = 1; i <= e.rank(); ++i) {
        se += e.entry(i);
        sf += f.entry(i);
        if (se < sf)
            return false;
    }
    return true;
}

bool dominates_via_h1(const SplittingType& e, const SplittingType& f) {
    require_comparable(e, f);
    if (e.rank() == 0)
        return true;
    // Outside this window both h1 values agree identically: far below it
    // each equals -d - r(m+1), and at or above the top both vanish.
    const long lo = -std::max(e.max_entry(), f.max_entry()) - 1;
    const long hi = -std::min(e.min_entry(), f.min_entry()) - 1;
    for (long m = lo; m <= hi; ++m)
        if (h1(e, m) > h1(f, m))
            return false;
    return true;
}

bool dominates_via_flag(const SplittingType& e, const SplittingType& f) {
    require_comparable(e, f);
    const int r = e.rank();
    if (r <= 1)
        return true;
    // Split off the constant prefix of e.
    int i = 1;
    while (i < r && e.entry(i + 1) == e.entry(1))
        ++i;
    if (i == r)
        return true; // perfectly balanced, the class maximum
    SplittingType a = e.slice(i + 1, r);
    const int s = r - i;
    // Witness subsheaf type: tail of f with the first entry forced by degree.
    long first = a.degree();
    std::vector<int> ap(static_cast<std::size_t>(s));
    for (int j = 2; j <= s; ++j) {
        ap[static_cast<std::size_t>(j - 1)] = f.entry(i + j);
        first -= f.entry(i + j);
    }
    if (s >= 2 && first > ap[1])
        return false;
    ap[0] = static_cast<int>(first);
    SplittingType witness(std::move(ap));
    if (!admits_subsheaf(witness, f))
        return false;
    return dominates_via_flag(a, witness);
}

HNData hn_data(const SplittingType& e) {
    require(e.rank() >= 1, "Harder-Narasimhan data needs a nonzero bundle");
    HNData out;
    // Walk entry blocks from the largest value down, accumulating the flag.
    std::vector<int> acc;
    int pos = e.rank();
    while (pos >= 1) {
        int block_end = pos;
        while (pos >= 1 && e.entry(pos) == e.entry(block_end))
            --pos;
        for (int j = pos + 1; j <= block_end; ++j)
            acc.push_back(e.entry(j));
        std::vector<int> sorted_acc(acc);
        std::sort(sorted_acc.begin(), sorted_acc.end());
        out.flag.emplace_back(std::move(sorted_acc));
    }
    for (std::size_t i = 0; i + 1 < out.flag.size(); ++i) {
        out.quotient_ranks.push_back(e.rank() - out.flag[i].rank());
        out.quotient_degrees.push_back(e.degree() - out.flag[i].degree());
    }
    return out;
}

namespace {

// Quotient of consecutive flag members as a splitting type; on P^1 the
// quotient in a split flag is just the complementary block of entries.
SplittingType flag_quotient(const SplittingType& e,
                            const std::vector<SplittingType>& flag, int lo,
                            int hi) {
    // Entries of the full type are grouped from the top; flag[i] holds the
    // top flag[i].rank() entries. Quotient (flag[hi]/flag[lo]) therefore
    // consists of the entries ranked between the two.
    const int r = e.rank();
    const int top = lo >= 0 ? flag[static_cast<std::size_t>(lo)].rank() : 0;
    const int bot = flag[static_cast<std::size_t>(hi)].rank();
    return e.slice(r - bot + 1, r - top);
}

} // namespace

std::vector<std::vector<int>> admissible_sets(const SplittingType& e) {
    const HNData hn = hn_data(e);
    const int m = hn.steps();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> subset;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1)))
                subset.push_back(i);
        // Successive quotients of the subflag (0, E_{i_1}, ..., full).
        bool ok = true;
        int prev = -1; // -1 encodes the zero sheaf
        auto check = [&](int idx) {
            SplittingType q = flag_quotient(e, hn.flag, prev, idx);
            ok = ok && is_balanced(q);
            prev = idx;
        };
        for (int i : subset)
            check(i - 1);
        check(m); // final quotient O(e)/E_{i_k}
        if (ok)
            out.push_back(std::move(subset));
    }
    return out;
}

bool admits_subsheaf(const SplittingType& a, const SplittingType& e) {
    require(a.rank() <= e.rank(),
            "subsheaf rank cannot exceed ambient rank");
    for (int j = 0; j < a.rank(); ++j)
        if (a.entry(a.rank() - j) > e.entry(e.rank() - j))
            return false;
    return true;
}

bool eb_feasible(int r, long d, const SplittingType& a) {
    require(r >= 1, "ambient rank must be positive");
    require(a.rank() <= r, "subsheaf rank cannot exceed ambient rank");
    return a.rank() < r || d >= a.degree();
}

namespace {

long floor_div(long num, long den) {
    long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

// Balanced type of given rank and degree: floor slopes first, then ceil.
SplittingType balanced_type(int rank, long degree) {
    const long q = floor_div(degree, rank);
    const long rem = degree - q * rank;
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank - rem; ++i)
        entries.push_back(static_cast<int>(q));
    for (int i = 0; i < rem; ++i)
        entries.push_back(static_cast<int>(q + 1));
    return SplittingType(std::move(entries));
}

} // namespace

SplittingType eb(int r, long d, const SplittingType& a) {
    require(r >= 1, "ambient rank must be positive");
    const int s = a.rank();
    require(s <= r, "subsheaf rank cannot exceed ambient rank");
    for (int k = s; k >= 0; --k) {
        long tail = 0; // degree of the k largest entries of a
        for (int j = 0; j < k; ++j)
            tail += a.entry(s - j);
        if (k == r) {
            if (d == a.degree())
                return a;
            continue;
        }
        SplittingType bal = balanced_type(r - k, d - tail);
        if (k >= 1 && bal.max_entry() > a.entry(s - k + 1))
            continue;
        std::vector<int> entries(bal.entries());
        for (int j = s - k + 1; j <= s; ++j)
            entries.push_back(a.entry(j));
        SplittingType candidate(std::move(entries));
        if (admits_subsheaf(a, candidate))
            return candidate;
    }
    throw precondition_error(
        "no splitting type of this rank and degree admits the subsheaf");
}

long gap(const SplittingType& a, const SplittingType& e) {
    require(admits_subsheaf(a, e), "gap requires an O(a)-subsheaf of O(e)");
    return u(e) - ext1(a, e);
}

long flag_stratum_dim(const FlagChain& chain) {
    require(!chain.types.empty(), "flag chain must be nonempty");
    for (std::size_t i = 0; i + 1 < chain.types.size(); ++i) {
        require(chain.types[i].rank() < chain.types[i + 1].rank(),
                "flag chain ranks must strictly increase");
        require(admits_subsheaf(chain.types[i], chain.types[i + 1]),
                "each flag member must admit an inclusion into the next");
    }
    long dim = 0;
    for (std::size_t i = 0; i + 1 < chain.types.size(); ++i)
        dim += hom(chain.types[i], chain.types[i + 1]) -
               hom(chain.types[i], chain.types[i]);
    return dim;
}

StratumCodim stratum_codim(const SplittingType& a, const SplittingType& e,
                           long c) {
    const long r = e.rank();
    return stratum_codim(a, e, c, r * (c + 1) - e.degree(),
                         r * c - e.degree());
}

StratumCodim stratum_codim(const SplittingType& a, const SplittingType& e,
                           long c, long rk_f, long rk_g) {
    require(e.rank() >= 1, "ambient type must be nonzero");
    require(admits_subsheaf(a, e), "stratum requires an O(a)-subsheaf of O(e)");
    require(a.empty() || c >= a.max_entry(),
            "twist must dominate the subsheaf entries");
    require(rk_f >= 1 && rk_g >= 0, "pushforward ranks out of range");
    // h0 Hom(O(a), O(c+1)^{rk_g}); with c >= a_s this is
    // rk_g * sum_j (c + 2 - a_j).
    long hom_term = 0;
    for (int j = 1; j <= a.rank(); ++j)
        hom_term += rk_g * (c + 2 - a.entry(j));
    const long g = u(e) - ext1(a, e);
    return {u(a) + hom_term + g, rk_f, rk_g, hom_term, g};
}

TangentCheck tangent_check(const SplittingType& e, const std::vector<int>& I,
                           const SplittingType& ep) {
    require(dominates(e, ep), "the degeneration must be dominated");
    const HNData hn = hn_data(e);
    const int m = hn.steps();
    for (std::size_t i = 0; i < I.size(); ++i) {
        require(I[i] >= 1 && I[i] <= m, "flag index out of range");
        require(i == 0 || I[i - 1] < I[i], "flag indices must increase");
    }
    {
        auto sets = admissible_sets(e);
        require(std::find(sets.begin(), sets.end(), I) != sets.end(),
                "index set is not admissible for this splitting type");
    }
    // chi Hom on P^1 depends only on ranks and degrees:
    // chi(Hom(A, B)) = rk A deg B - deg A rk B + rk A rk B.
    std::vector<int> idx(I);
    idx.push_back(m + 1);
    long chi_sum = 0;
    for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
        const SplittingType& sub = hn.flag[static_cast<std::size_t>(idx[j] - 1)];
        const SplittingType& next =
            hn.flag[static_cast<std::size_t>(idx[j + 1] - 1)];
        const long qr = next.rank() - sub.rank();
        const long qd = next.degree() - sub.degree();
        chi_sum += sub.rank() * qd - sub.degree() * qr +
                   static_cast<long>(sub.rank()) * qr;
    }
    return {u(ep) + chi_sum, u(ep) - u(e)};
}

SplittingType gp_type(int g, long d, int r, int k) {
    require(g >= 0 && r >= 0 && k >= 1, "invalid Brill-Noether numerics");
    const long twos = g - d + r;
    const long ones = k - g + d - 2L * r - 1;
    const long zeros = r + 1L;
    require(twos >= 0 && ones >= 0,
            "splitting-type block lengths must be nonnegative");
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(k));
    for (long i = 0; i < twos; ++i)
        entries.push_back(-2);
    for (long i = 0; i < ones; ++i)
        entries.push_back(-1);
    for (long i = 0; i < zeros; ++i)
        entries.push_back(0);
    return SplittingType(std::move(entries));
}

} // namespace splitquot
