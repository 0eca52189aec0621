#include "splitquot/lr.hpp"

#include <algorithm>
#include <map>

#include "splitquot/precondition.hpp"

namespace splitquot {

namespace {

struct Cell {
    int row;
    int col; // 1-based
};

// Counts lattice-word fillings by walking cells in reverse reading order
// (each row right to left, rows top to bottom), so the lattice property
// can be maintained incrementally.
class SkewCounter {
public:
    SkewCounter(const Partition& lambda, const Partition& mu,
                const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu) {
        for (int r = 1; r <= nu.length(); ++r)
            for (int c = nu.part(r); c > lambda.part(r); --c)
                cells_.push_back({r, c});
        counts_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
        grid_.assign(static_cast<std::size_t>(nu.length()) + 1,
                     std::vector<int>(static_cast<std::size_t>(nu.first()) + 1, 0));
    }

    long count() { return walk(0); }

private:
    long walk(std::size_t idx) {
        if (idx == cells_.size())
            return 1;
        const Cell cell = cells_[idx];
        long total = 0;
        for (int v = 1; v <= mu_.length(); ++v) {
            if (counts_[static_cast<std::size_t>(v)] >= mu_.part(v))
                continue;
            // Lattice: after placing v, #v may not exceed #(v-1).
            if (v > 1 && counts_[static_cast<std::size_t>(v)] >=
                             counts_[static_cast<std::size_t>(v - 1)])
                continue;
            // Row weakly increasing; the right neighbor was placed earlier.
            if (cell.col < nu_.part(cell.row) &&
                v > at(cell.row, cell.col + 1))
                continue;
            // Column strictly increasing below a filled cell.
            if (cell.row > 1 && cell.col > lambda_.part(cell.row - 1) &&
                v <= at(cell.row - 1, cell.col))
                continue;
            set(cell.row, cell.col, v);
            ++counts_[static_cast<std::size_t>(v)];
            total += walk(idx + 1);
            --counts_[static_cast<std::size_t>(v)];
            set(cell.row, cell.col, 0);
        }
        return total;
    }

    int at(int r, int c) const {
        return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    void set(int r, int c, int v) {
        grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<Cell> cells_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> grid_;
};

PartitionMultiset sorted(std::map<Partition, long> acc) {
    PartitionMultiset out;
    out.reserve(acc.size());
    for (auto& [key, mult] : acc)
        out.emplace_back(key, mult);
    return out;
}

} // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu,
                    const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size())
        return 0;
    if (!nu.contains(lambda) || !nu.contains(mu))
        return 0;
    if (mu.empty())
        return 1;
    return SkewCounter(lambda, mu, nu).count();
}

PartitionMultiset tensor_schur(const Partition& lambda, const Partition& mu,
                               int max_length) {
    require(max_length >= 1, "max_length must be positive");
    std::map<Partition, long> acc;
    const int total = lambda.size() + mu.size();
    const int max_part = lambda.first() + mu.first();
    for (const Partition& nu :
         partitions_of(total, max_length, std::max(max_part, 1))) {
        long c = lr_coefficient(lambda, mu, nu);
        if (c > 0)
            acc[nu] = c;
    }
    return sorted(std::move(acc));
}

PartitionPairMultiset schur_of_double(const Partition& lambda, int rank) {
    require(rank >= 1, "rank must be positive");
    PartitionPairMultiset out;
    const int n = lambda.size();
    for (int k = 0; k <= n; ++k) {
        for (const Partition& g1 :
             partitions_of(k, rank, std::max(lambda.first(), 1))) {
            if (!lambda.contains(g1))
                continue;
            for (const Partition& g2 :
                 partitions_of(n - k, rank, std::max(lambda.first(), 1))) {
                if (!lambda.contains(g2))
                    continue;
                long c = lr_coefficient(g1, g2, lambda);
                if (c > 0)
                    out.push_back({{g1, g2}, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartitionPair> cauchy_wedge(int n, int rank_e, int rank_f) {
    require(n >= 0, "exterior power degree must be nonnegative");
    require(rank_e >= 1 && rank_f >= 1, "ranks must be positive");
    std::vector<PartitionPair> out;
    for (const Partition& mu : partitions_of(n, rank_f, rank_e))
        out.push_back({conjugate(mu), mu});
    std::sort(out.begin(), out.end());
    return out;
}

PartitionPairMultiset schur_complex_terms(const Partition& lambda, int t) {
    require(t >= 0 && t <= lambda.size(),
            "term index must lie in [0, |lambda|]");
    PartitionPairMultiset out;
    const int cap = std::max(lambda.size(), 1);
    for (const Partition& alpha : partitions_of(t, cap, cap)) {
        for (const Partition& beta : partitions_of(lambda.size() - t, cap, cap)) {
            long c = lr_coefficient(alpha, beta, lambda);
            if (c > 0)
                out.push_back({{conjugate(alpha), beta}, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace splitquot
