#include "splitquot/hankel.hpp"

#include <algorithm>
#include <numeric>

#include "splitquot/precondition.hpp"

namespace splitquot {

HankelMatrix hankel(int k, int d) {
    require(d >= 2, "need degree at least 2");
    require(k >= 1 && k <= d - 1, "need 1 <= k <= d - 1");
    return {k, d};
}

namespace {

// Rank by fraction-free (Bareiss) elimination with full pivoting.
int bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t step = 0; rank < rows && step < cols; ++step) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = rank; i < rows && pr == rows; ++i)
            for (std::size_t j = rank; j < cols; ++j)
                if (m[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows)
            break;
        std::swap(m[rank], m[pr]);
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(m[i][rank], m[i][pc]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = rank + 1; j < cols; ++j)
                m[i][j] = (m[rank][rank] * m[i][j] - m[i][rank] * m[rank][j]) /
                          prev;
            m[i][rank] = 0;
        }
        prev = m[rank][rank];
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace

int hankel_rank(const HankelMatrix& mat, const HankelPoint& pt) {
    require(pt.d == mat.d, "point and matrix degrees disagree");
    require(static_cast<int>(pt.coords.size()) == pt.d - 1,
            "point must have d - 1 coordinates");
    // Scale by the common denominator; one global factor keeps the rank.
    BigInt common = 1;
    for (const Rational& c : pt.coords)
        common = boost::integer::lcm(common, c.denominator());
    std::vector<std::vector<BigInt>> m(
        static_cast<std::size_t>(mat.rows()),
        std::vector<BigInt>(static_cast<std::size_t>(mat.cols())));
    for (int i = 1; i <= mat.rows(); ++i)
        for (int j = 1; j <= mat.cols(); ++j) {
            const Rational& c =
                pt.coords[static_cast<std::size_t>(mat.var_index(i, j))];
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                c.numerator() * (common / c.denominator());
        }
    return bareiss_rank(std::move(m));
}

SplittingType splitting_from_point(const HankelPoint& pt) {
    require(pt.d >= 2, "need degree at least 2");
    require(static_cast<int>(pt.coords.size()) == pt.d - 1,
            "point must have d - 1 coordinates");
    int e1 = 0;
    for (int k = 1; k <= pt.d / 2; ++k)
        if (hankel_rank(hankel(k, pt.d), pt) == k)
            e1 = std::max(e1, k);
    return SplittingType({e1, pt.d - e1});
}

IntegerPolynomial::IntegerPolynomial(int nvars) : nvars_(nvars) {
    require(nvars >= 0, "variable count must be nonnegative");
}

IntegerPolynomial IntegerPolynomial::variable(int index, int nvars) {
    require(index >= 0 && index < nvars, "variable index out of range");
    IntegerPolynomial p(nvars);
    std::vector<int> mono(static_cast<std::size_t>(nvars), 0);
    mono[static_cast<std::size_t>(index)] = 1;
    p.terms_[std::move(mono)] = 1;
    return p;
}

IntegerPolynomial IntegerPolynomial::constant(long long value, int nvars) {
    IntegerPolynomial p(nvars);
    if (value != 0)
        p.terms_[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = value;
    return p;
}

IntegerPolynomial IntegerPolynomial::operator+(
    const IntegerPolynomial& other) const {
    require(nvars_ == other.nvars_, "mixed variable counts");
    IntegerPolynomial out(*this);
    for (const auto& [mono, coeff] : other.terms_) {
        auto it = out.terms_.find(mono);
        if (it == out.terms_.end()) {
            out.terms_[mono] = coeff;
        } else if ((it->second += coeff) == 0) {
            out.terms_.erase(it);
        }
    }
    return out;
}

IntegerPolynomial IntegerPolynomial::operator-(
    const IntegerPolynomial& other) const {
    IntegerPolynomial neg(other.nvars_);
    for (const auto& [mono, coeff] : other.terms_)
        neg.terms_[mono] = -coeff;
    return *this + neg;
}

IntegerPolynomial IntegerPolynomial::operator*(
    const IntegerPolynomial& other) const {
    require(nvars_ == other.nvars_, "mixed variable counts");
    IntegerPolynomial out(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) {
            std::vector<int> mono(m1);
            for (std::size_t v = 0; v < mono.size(); ++v)
                mono[v] += m2[v];
            auto it = out.terms_.find(mono);
            if (it == out.terms_.end()) {
                out.terms_[std::move(mono)] = c1 * c2;
            } else if ((it->second += c1 * c2) == 0) {
                out.terms_.erase(it);
            }
        }
    return out;
}

Rational IntegerPolynomial::evaluate(const std::vector<Rational>& values) const {
    require(static_cast<int>(values.size()) == nvars_,
            "evaluation point has the wrong dimension");
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term(coeff);
        for (std::size_t v = 0; v < mono.size(); ++v)
            for (int p = 0; p < mono[v]; ++p)
                term *= values[v];
        total += term;
    }
    return total;
}

std::string IntegerPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first)
            out += " + ";
        first = false;
        out += std::to_string(coeff);
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0)
                continue;
            out += " * a_" + std::to_string(v);
            if (mono[v] > 1)
                out += "^" + std::to_string(mono[v]);
        }
    }
    return out;
}

namespace {

IntegerPolynomial determinant(
    const std::vector<std::vector<IntegerPolynomial>>& m, int nvars) {
    const std::size_t n = m.size();
    if (n == 0)
        return IntegerPolynomial::constant(1, nvars);
    if (n == 1)
        return m[0][0];
    // Laplace expansion along the first row; sizes here are tiny.
    IntegerPolynomial det(nvars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<IntegerPolynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<IntegerPolynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        IntegerPolynomial cofactor = m[0][j] * determinant(minor, nvars);
        det = (j % 2 == 0) ? det + cofactor : det - cofactor;
    }
    return det;
}

void column_subsets(int cols, int size, int start, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == size) {
        out.push_back(acc);
        return;
    }
    for (int c = start; c < cols; ++c) {
        acc.push_back(c);
        column_subsets(cols, size, c + 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<IntegerPolynomial> fitting_generators(int d, int e) {
    require(2 * e >= d + 2 && e < d,
            "need d/2 + 1 <= e < d for an unbalanced non-extremal type");
    const HankelMatrix mat = hankel(d - e + 1, d);
    const int nvars = d - 1;
    const int k = mat.rows(); // minors are k x k, k <= cols
    std::vector<std::vector<int>> subsets;
    std::vector<int> acc;
    column_subsets(mat.cols(), k, 0, acc, subsets);
    std::vector<IntegerPolynomial> out;
    out.reserve(subsets.size());
    for (const std::vector<int>& cols : subsets) {
        std::vector<std::vector<IntegerPolynomial>> sub(
            static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i)
            for (int c : cols)
                sub[static_cast<std::size_t>(i - 1)].push_back(
                    IntegerPolynomial::variable(mat.var_index(i, c + 1),
                                                nvars));
        out.push_back(determinant(sub, nvars));
    }
    return out;
}

HankelPoint secant_point(int d, int s, const std::vector<Rational>& nodes,
                         const std::vector<Rational>& weights) {
    require(d >= 2, "need degree at least 2");
    require(s >= 0 && s <= d / 2, "secant index must lie in [0, d/2]");
    require(static_cast<int>(nodes.size()) == s &&
                static_cast<int>(weights.size()) == s,
            "need exactly s nodes and s weights");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        require(weights[i] != Rational(0), "weights must be nonzero");
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            require(nodes[i] != nodes[j], "nodes must be distinct");
    }
    HankelPoint pt;
    pt.d = d;
    pt.coords.assign(static_cast<std::size_t>(d - 1), Rational(0));
    for (int l = 0; l < s; ++l) {
        Rational power(1);
        for (int j = 0; j <= d - 2; ++j) {
            pt.coords[static_cast<std::size_t>(j)] +=
                weights[static_cast<std::size_t>(l)] * power;
            power *= nodes[static_cast<std::size_t>(l)];
        }
    }
    return pt;
}

} // namespace splitquot
