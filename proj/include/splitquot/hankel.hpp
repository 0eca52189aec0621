#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "splitquot/splitting.hpp"

namespace splitquot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

/*
 * Rank-two splitting loci inside Ext^1(O(d), O), an affine space with
 * coordinates (a_0, ..., a_{d-2}). For 1 <= k <= d-1 the direct image of
 * the universal extension twisted by -k-1 is presented by the k x (d-k)
 * Hankel matrix with entry (i, j) = a_{i+j-2}, so ranks of Hankel matrices
 * at a point read off its splitting type, and the maximal minors cut out
 * the closed strata (secant varieties of the rational normal curve).
 * Everything here is exact; ranks use fraction-free elimination.
 */

struct HankelMatrix {
    int k; // rows
    int d; // k + cols
    int rows() const { return k; }
    int cols() const { return d - k; }
    // 1-based; index into the coordinates (a_0, ..., a_{d-2}).
    int var_index(int i, int j) const { return i + j - 2; }
};

HankelMatrix hankel(int k, int d);

struct HankelPoint {
    int d;
    std::vector<Rational> coords; // length d - 1
};

// Exact rank of the Hankel matrix evaluated at the point.
int hankel_rank(const HankelMatrix& m, const HankelPoint& pt);

// The splitting type (e1, d - e1) at the point:
// e1 = max{ k in [0, d/2] : rank B_{k,d-k}(pt) = k }.
SplittingType splitting_from_point(const HankelPoint& pt);

/*
 * Sparse multivariate polynomial over the integers in the coordinates
 * a_0, ..., a_{nvars-1}. Terms are kept sorted by descending-lex exponent
 * vector with no zero coefficients, so printing is canonical.
 */
class IntegerPolynomial {
public:
    explicit IntegerPolynomial(int nvars);
    static IntegerPolynomial variable(int index, int nvars);
    static IntegerPolynomial constant(long long value, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    IntegerPolynomial operator+(const IntegerPolynomial& other) const;
    IntegerPolynomial operator-(const IntegerPolynomial& other) const;
    IntegerPolynomial operator*(const IntegerPolynomial& other) const;

    Rational evaluate(const std::vector<Rational>& values) const;

    // "c * a_i^p * a_j^q" terms joined by " + "; constants print bare.
    std::string to_string() const;

    friend bool operator==(const IntegerPolynomial&,
                           const IntegerPolynomial&) = default;

private:
    int nvars_;
    std::map<std::vector<int>, long long, std::greater<std::vector<int>>>
        terms_;
};

// All maximal minors of the (d-e+1) x (e-1) Hankel matrix, expanded over
// the integers and ordered by the column index sets. These generate the
// ideal of the stratum of types dominated by (d-e, e); valid for
// d/2 + 1 <= e < d.
std::vector<IntegerPolynomial> fitting_generators(int d, int e);

// Point sum_l weights[l] * (1, t_l, t_l^2, ..., t_l^{d-2}) on the cone over
// the s-th secant of the rational normal curve; for generic data its
// splitting type is (s, d-s).
HankelPoint secant_point(int d, int s, const std::vector<Rational>& nodes,
                         const std::vector<Rational>& weights);

} // namespace splitquot
