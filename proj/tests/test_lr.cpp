#include <doctest.h>

#include <algorithm>

#include "splitquot/lr.hpp"
#include "splitquot/precondition.hpp"
#include "support/oracles.hpp"

using namespace splitquot;

TEST_CASE("pinned Littlewood-Richardson values") {
    CHECK(lr_coefficient(Partition({1}), Partition({1, 1}),
                         Partition({2, 1})) == 1);
    // Tensoring with the trivial representation.
    for (const Partition& lam :
         {Partition(), Partition({3, 1}), Partition({2, 2, 1})})
        CHECK(lr_coefficient(lam, Partition(), lam) == 1);
    CHECK(lr_coefficient(Partition({2}), Partition({2, 1, 1, 1, 1, 1}),
                         Partition({2, 2, 1, 1, 1, 1, 1})) == 1);
    // Size or containment mismatch.
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
    CHECK(lr_coefficient(Partition({2}), Partition({1}),
                         Partition({1, 1, 1})) == 0);
}

TEST_CASE("LR symmetry and support for |nu| <= 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& nu : partitions_of(n, n, n)) {
            for (int a = 0; a <= n; ++a) {
                for (const Partition& lam : partitions_of(a, n, n)) {
                    for (const Partition& mu : partitions_of(n - a, n, n)) {
                        const long c = lr_coefficient(lam, mu, nu);
                        CHECK(c == lr_coefficient(mu, lam, nu));
                        if (c > 0) {
                            CHECK(nu.contains(lam));
                            CHECK(nu.contains(mu));
                            CHECK(nu.size() == lam.size() + mu.size());
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("dimension oracle: tensor products for dim <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (int a = 0; a <= 4; ++a) {
            for (const Partition& lam : partitions_of(a, n, a)) {
                for (int b = 0; b <= 4; ++b) {
                    for (const Partition& mu : partitions_of(b, n, b)) {
                        long long sum = 0;
                        for (const auto& [nu, c] : tensor_schur(lam, mu, n))
                            sum += c * oracles::dim_schur(nu, n);
                        CHECK(sum == oracles::dim_schur(lam, n) *
                                         oracles::dim_schur(mu, n));
                    }
                }
            }
        }
    }
}

TEST_CASE("tensor_schur pinned values") {
    const auto square = tensor_schur(Partition({1}), Partition({1}), 2);
    REQUIRE(square.size() == 2);
    CHECK(square[0].first == Partition({1, 1}));
    CHECK(square[0].second == 1);
    CHECK(square[1].first == Partition({2}));
    CHECK(square[1].second == 1);

    const auto truncated = tensor_schur(Partition({1}), Partition({1}), 1);
    REQUIRE(truncated.size() == 1);
    CHECK(truncated[0].first == Partition({2}));

    // Entrywise agreement with the coefficient computation.
    const Partition lam({2, 1, 1, 1, 1, 1});
    const Partition mu({2});
    const auto prod = tensor_schur(lam, mu, 7);
    bool saw_hook = false, saw_column = false;
    for (const auto& [nu, c] : prod) {
        CHECK(c == lr_coefficient(lam, mu, nu));
        saw_hook |= nu == Partition({4, 1, 1, 1, 1, 1});
        saw_column |= nu == Partition({2, 1, 1, 1, 1, 1, 1, 1});
    }
    CHECK(saw_hook);
    CHECK_FALSE(saw_column); // killed by the 7-row cap
    CHECK(std::any_of(prod.begin(), prod.end(), [](const auto& kv) {
        return kv.first == Partition({2, 2, 1, 1, 1, 1, 1});
    }));
}

TEST_CASE("schur_of_double pinned values") {
    const auto deg1 = schur_of_double(Partition({1}), 3);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0].first == PartitionPair{Partition(), Partition({1})});
    CHECK(deg1[1].first == PartitionPair{Partition({1}), Partition()});

    const auto rank1 = schur_of_double(Partition({1, 1}), 1);
    REQUIRE(rank1.size() == 1);
    CHECK(rank1[0].first == PartitionPair{Partition({1}), Partition({1})});
    CHECK(rank1[0].second == 1);

    // The six pairs pairing (2,2,1^5) against (4,1^5): three hook pairs
    // and their swaps, all with multiplicity one.
    const Partition mudag({2, 2, 1, 1, 1, 1, 1});
    const Partition nuprime({4, 1, 1, 1, 1, 1});
    const std::vector<PartitionPair> expected = {
        {Partition({2}), Partition({2, 1, 1, 1, 1, 1})},
        {Partition({2, 1}), Partition({2, 1, 1, 1, 1})},
        {Partition({2, 1, 1}), Partition({2, 1, 1, 1})},
        {Partition({2, 1, 1, 1}), Partition({2, 1, 1})},
        {Partition({2, 1, 1, 1, 1}), Partition({2, 1})},
        {Partition({2, 1, 1, 1, 1, 1}), Partition({2})},
    };
    std::vector<PartitionPair> contributing;
    for (const auto& [pair, c] : schur_of_double(mudag, 7)) {
        const long c2 = lr_coefficient(pair.first, pair.second, nuprime);
        if (c2 == 0)
            continue;
        contributing.push_back(pair);
        CHECK(c == 1);
        CHECK(c2 == 1);
    }
    CHECK(contributing == expected);
}

TEST_CASE("schur_of_double dimension identity") {
    // dim S_lambda(V (+) V) with dim V = w equals dim S_lambda(C^{2w}).
    for (int w = 1; w <= 3; ++w) {
        for (int n = 0; n <= 5; ++n) {
            for (const Partition& lam : partitions_of(n, 2 * w, n)) {
                long long sum = 0;
                for (const auto& [pair, c] : schur_of_double(lam, w))
                    sum += c * oracles::dim_schur(pair.first, w) *
                           oracles::dim_schur(pair.second, w);
                CHECK(sum == oracles::dim_schur(lam, 2 * w));
            }
        }
    }
}

TEST_CASE("cauchy_wedge pinned values and dimension identity") {
    const auto single = cauchy_wedge(1, 3, 2);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == PartitionPair{Partition({1}), Partition({1})});

    const auto two22 = cauchy_wedge(2, 2, 2);
    REQUIRE(two22.size() == 2);
    CHECK(two22[0] == PartitionPair{Partition({1, 1}), Partition({2})});
    CHECK(two22[1] == PartitionPair{Partition({2}), Partition({1, 1})});

    const auto truncated = cauchy_wedge(2, 1, 2);
    REQUIRE(truncated.size() == 1);
    CHECK(truncated[0] == PartitionPair{Partition({2}), Partition({1, 1})});

    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int n = 0; n <= 6; ++n) {
                long long sum = 0;
                for (const auto& [mudag, mu] : cauchy_wedge(n, a, b))
                    sum += oracles::dim_schur(mudag, a) *
                           oracles::dim_schur(mu, b);
                CHECK(sum == oracles::binomial(
                                 static_cast<long long>(a) * b, n));
            }
}

TEST_CASE("schur_complex_terms pinned values and degree conservation") {
    const auto t0 = schur_complex_terms(Partition({1}), 0);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].first == PartitionPair{Partition(), Partition({1})});
    const auto t1 = schur_complex_terms(Partition({1}), 1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].first == PartitionPair{Partition({1}), Partition()});

    const auto sym2_t1 = schur_complex_terms(Partition({2}), 1);
    REQUIRE(sym2_t1.size() == 1);
    CHECK(sym2_t1[0].first == PartitionPair{Partition({1}), Partition({1})});
    const auto sym2_t2 = schur_complex_terms(Partition({2}), 2);
    REQUIRE(sym2_t2.size() == 1);
    CHECK(sym2_t2[0].first == PartitionPair{Partition({1, 1}), Partition()});

    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n, n, n))
            for (int t = 0; t <= n; ++t)
                for (const auto& [pair, c] : schur_complex_terms(lam, t)) {
                    CHECK(c > 0);
                    CHECK(pair.first.size() + pair.second.size() ==
                          lam.size());
                    CHECK(pair.first.size() == t);
                }
    CHECK_THROWS_AS(schur_complex_terms(Partition({2}), 3),
                    precondition_error);
}

TEST_CASE("LR sandwich: union below, sum above") {
    // Whenever c^lambda_{g1,g2} > 0, the union of g1, g2 is dominated by
    // lambda and lambda is dominated by their entrywise sum.
    for (int total = 0; total <= 5; ++total) {
        for (int a = 0; a <= total; ++a) {
            for (const Partition& g1 : partitions_of(a, a, a)) {
                for (const Partition& g2 :
                     partitions_of(total - a, total, total)) {
                    for (const Partition& lam :
                         partitions_of(total, total, total)) {
                        if (lr_coefficient(g1, g2, lam) == 0)
                            continue;
                        CHECK(oracles::partition_dominates(
                            lam, oracles::partition_union(g1, g2)));
                        CHECK(oracles::partition_dominates(
                            oracles::partition_plus(g1, g2), lam));
                    }
                }
            }
        }
    }
}
