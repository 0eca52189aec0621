#include "splitquot/partition.hpp"

#include <algorithm>
#include <numeric>

#include "splitquot/precondition.hpp"

namespace splitquot {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 0, "partition parts must be nonnegative");
        require(i == 0 || parts_[i - 1] >= parts_[i],
                "partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length())
        return false;
    for (int i = 1; i <= other.length(); ++i)
        if (part(i) < other.part(i))
            return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(static_cast<std::size_t>(p.first()), 0);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

namespace {

void emit(int remaining, int max_part, int slots, std::vector<int>& acc,
          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (slots == 0)
        return;
    int hi = std::min(max_part, remaining);
    for (int p = hi; p >= 1; --p) {
        // Remaining boxes must fit in the slots left at height <= p.
        if (static_cast<long>(p) * slots < remaining)
            break;
        acc.push_back(p);
        emit(remaining - p, p, slots - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
    require(n >= 0, "cannot partition a negative integer");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (max_length <= 0 || max_part <= 0)
        return out;
    std::vector<int> acc;
    emit(n, max_part, max_length, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace splitquot
