#include "splitquot/bwb.hpp"

#include <algorithm>

#include "splitquot/precondition.hpp"

namespace splitquot {

namespace {

void require_grassmannian(int k, int n) {
    require(k >= 1 && k < n, "need 1 <= k < n for Gr(k, n)");
}

std::vector<long> mixed_sequence(int k, int n, const Partition& mu,
                                 const Partition& alpha) {
    std::vector<long> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = k; i >= 1; --i)
        v.push_back(n - k + i - 1 - mu.part(i));
    for (int j = 1; j <= n - k; ++j)
        v.push_back(n - k - j + alpha.part(j));
    return v;
}

bool has_repeat(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

long inversions(const std::vector<long>& v) {
    long count = 0;
    for (std::size_t p = 0; p < v.size(); ++p)
        for (std::size_t q = p + 1; q < v.size(); ++q)
            if (v[p] < v[q])
                ++count;
    return count;
}

} // namespace

BWBOutcome bwb_mixed(int k, int n, const Partition& mu,
                     const Partition& alpha) {
    require_grassmannian(k, n);
    require(mu.length() <= k, "mu has more rows than the subbundle rank");
    require(alpha.length() <= n - k,
            "alpha has more rows than the quotient rank");
    std::vector<long> v = mixed_sequence(k, n, mu, alpha);
    if (has_repeat(v))
        return {};
    return {inversions(v)};
}

QuotDualOutcome bwb_quot_dual(int k, int n, const Partition& nu) {
    require_grassmannian(k, n);
    require(nu.length() <= n - k, "nu has more rows than the quotient rank");
    if (nu.empty())
        return {0L, std::nullopt};
    for (int j = 1; j <= n - k; ++j)
        if (nu.part(j) >= k + j && nu.part(j + 1) <= j)
            return {static_cast<long>(j) * k, j};
    return {};
}

BWBIndices bwb_indices(int k, int n, const Partition& mu,
                       const Partition& alpha) {
    require(!bwb_mixed(k, n, mu, alpha).vanishes(),
            "crossing indices are defined only for nonvanishing bundles");
    std::vector<long> f(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        f[static_cast<std::size_t>(i - 1)] = n - k + i - 1 - mu.part(i);
    BWBIndices out;
    out.i.resize(static_cast<std::size_t>(n - k));
    for (int l = 1; l <= n - k; ++l) {
        const long g = n - k - (n - k - l + 1) + alpha.part(n - k - l + 1);
        int best = 0;
        for (int i = 1; i <= k; ++i)
            if (f[static_cast<std::size_t>(i - 1)] < g)
                best = i;
        out.i[static_cast<std::size_t>(l - 1)] = best;
    }
    out.d1 = 0;
    int prev = 0;
    for (int l = 1; l <= n - k; ++l) {
        const int il = out.i[static_cast<std::size_t>(l - 1)];
        out.d1 += static_cast<long>(il - prev) * (n - k - l + 1);
        prev = il;
    }
    return out;
}

} // namespace splitquot
