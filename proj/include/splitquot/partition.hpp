#pragma once

#include <compare>
#include <string>
#include <vector>

namespace splitquot {

/*
 * Integer partition in weakly decreasing order, trailing zeros stripped.
 * The normal form makes equality structural, so partitions can be used
 * directly as map keys. part(i) is 1-based and returns 0 past the end,
 * which matches the usual convention lambda_i = 0 for i > length.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }          // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    int first() const { return part(1); }

    // Young diagram containment.
    bool contains(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part lists; used for canonical sorted output.
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& p);

// All partitions of n with at most max_length parts, each part at most
// max_part, sorted ascending lexicographically.
std::vector<Partition> partitions_of(int n, int max_length, int max_part);

} // namespace splitquot
