#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "symwalk/partition.hpp"

using namespace symwalk;

namespace {

// Independent count of partitions: parts-bounded DP, no shared code with the
// enumerator.
long partition_count_oracle(int n) {
    std::vector<std::vector<long>> dp(static_cast<std::size_t>(n) + 1,
                                      std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) dp[0][static_cast<std::size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            dp[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                dp[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)] +
                (m >= k ? dp[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)] : 0);
    return dp[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

std::multiset<int> hook_multiset(const Partition& lambda) {
    std::multiset<int> hooks;
    for (Box b : lambda.boxes()) hooks.insert(hook_length(lambda, b));
    return hooks;
}

}  // namespace

TEST_CASE("partition construction and validation") {
    CHECK(Partition().size() == 0);
    CHECK(Partition({3, 3, 1}).size() == 7);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("3,3,1") == Partition({3, 3, 1}));
    CHECK(Partition::parse("") == Partition());
}

TEST_CASE("partitions_of enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    const auto three = partitions_of(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == Partition({3}));
    CHECK(three[1] == Partition({2, 1}));
    CHECK(three[2] == Partition({1, 1, 1}));
    CHECK(partitions_of(10).size() == 42);
    for (int n = 0; n <= 25; ++n)
        CHECK(static_cast<long>(partitions_of(n).size()) == partition_count_oracle(n));
    // reverse-lexicographic and duplicate-free
    const auto nine = partitions_of(9);
    for (std::size_t i = 1; i < nine.size(); ++i) CHECK(nine[i - 1].parts() > nine[i].parts());
}

TEST_CASE("conjugation") {
    CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3, 3, 1}).conjugate() == Partition({3, 2, 2}));
    for (int n = 0; n <= 10; ++n)
        for (const Partition& lambda : partitions_of(n))
            CHECK(lambda.conjugate().conjugate() == lambda);
}

TEST_CASE("hook lengths pin the coordinate convention") {
    const Partition lambda({3, 3, 1});
    CHECK(hook_length(lambda, {1, 1}) == 5);
    CHECK(hook_length(lambda, {1, 2}) == 3);
    CHECK(hook_length(Partition({6}), {1, 1}) == 6);
    CHECK_THROWS_AS(hook_length(lambda, {3, 2}), std::invalid_argument);

    for (int n = 1; n <= 10; ++n) {
        for (const Partition& lambda_n : partitions_of(n)) {
            const Partition conj = lambda_n.conjugate();
            for (Box b : lambda_n.boxes())
                CHECK(hook_length(lambda_n, b) == hook_length(conj, {b.col, b.row}));
            CHECK(hook_multiset(lambda_n) == hook_multiset(conj));
        }
    }
}

TEST_CASE("hook products") {
    const Partition lambda({3, 3, 1});
    CHECK(hook_product(lambda, row_diagram(2)) == 15);
    CHECK(hook_product(lambda, {}) == 1);
    CHECK(hook_product(lambda, lambda.boxes()) == 240);
}

TEST_CASE("slicings cover the diagram exactly") {
    for (int n = 1; n <= 10; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            CHECK_NOTHROW(Slicing::stairs(lambda));
            CHECK_NOTHROW(Slicing::first_row(lambda));
            for (int depth : {1, 2, 3}) CHECK_NOTHROW(Slicing::triple(lambda, depth));
        }
    }
    CHECK_THROWS_AS(Slicing(Partition({2, 1}), SlicingKind::first_row,
                            {row_diagram(2), row_diagram(2)}),
                    std::invalid_argument);
}

TEST_CASE("sliced hook products") {
    const Partition lambda({3, 3, 1});
    // first-row slicing: hooks over the first row collapse to row hooks
    const Slicing rows = Slicing::first_row(lambda);
    CHECK(sliced_hook_product(lambda, rows, row_diagram(2)) == 3 * 2);
    CHECK(sliced_hook_product(lambda, rows, row_diagram(3)) == 3 * 2 * 1);

    const Partition big({14, 8, 6, 2, 2, 1});
    CHECK(sliced_hook_product(big, Slicing::stairs(big), big.first_row_boxes()) == factorial(14));

    // depth-1 triple slicing of (3,3,1): the deep slice is a free-standing row of 2
    const Slicing triple = Slicing::triple(lambda, 1);
    const BoxSet deep = triple_slices(lambda, 1).deep;
    CHECK(deep == BoxSet{{2, 2}, {2, 3}});
    CHECK(sliced_hook_product(lambda, triple, deep) == 2);
}

TEST_CASE("triple slices") {
    const TripleSlices row_only = triple_slices(Partition({6}), 1);
    CHECK(row_only.first_row.size() == 6);
    CHECK(row_only.shallow.empty());
    CHECK(row_only.deep.empty());

    const TripleSlices square = triple_slices(Partition({2, 2}), 1);
    CHECK(square.first_row == BoxSet{{1, 1}, {1, 2}});
    CHECK(square.shallow == BoxSet{{2, 1}});
    CHECK(square.deep == BoxSet{{2, 2}});

    const TripleSlices l331 = triple_slices(Partition({3, 3, 1}), 2);
    CHECK(l331.deep.empty());
    CHECK(l331.shallow.size() == 4);

    for (int n = 1; n <= 10; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int depth : {1, 2}) {
                const TripleSlices t = triple_slices(lambda, depth);
                CHECK(static_cast<int>(t.first_row.size() + t.shallow.size() + t.deep.size()) == n);
            }
        }
    }
}

TEST_CASE("deep partition matches the deep slice") {
    const Partition lambda({5, 4, 4, 2, 1});
    for (int depth : {1, 2, 3}) {
        const Partition deep = deep_partition(lambda, depth);
        CHECK(deep.size() == static_cast<int>(triple_slices(lambda, depth).deep.size()));
    }
    CHECK(deep_partition(lambda, 1) == Partition({3, 3, 1}));
}

TEST_CASE("u profile") {
    CHECK(u_profile(Partition({6})) == std::vector<int>({0, 0, 0, 0, 0, 0}));
    CHECK(u_profile(Partition({3, 3, 1})) == std::vector<int>({2, 1, 1}));
    CHECK(u_profile(Partition({7, 5, 4, 2, 1, 1}))[1] == 3);
    for (int n = 1; n <= 12; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            int total = 0;
            for (int u : u_profile(lambda)) total += u;
            CHECK(total == n - lambda.part(1));
        }
    }
}

TEST_CASE("frobenius coordinates") {
    CHECK(frobenius(Partition({6})) == std::vector<FrobeniusCoordinate>({{5, 0}}));
    CHECK(frobenius(Partition({2, 1})) == std::vector<FrobeniusCoordinate>({{1, 1}}));
    CHECK(frobenius(Partition({3, 3, 1})) == std::vector<FrobeniusCoordinate>({{2, 2}, {1, 0}}));
    for (int n = 1; n <= 12; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            int total = 0;
            for (const FrobeniusCoordinate& fc : frobenius(lambda)) total += fc.arm + fc.leg + 1;
            CHECK(total == n);
        }
    }
}

TEST_CASE("r_sym and subdiagrams") {
    CHECK(Partition({4, 2, 1}).r_sym() == 3);
    CHECK(Partition({2, 2, 2}).r_sym() == 3);  // column is the longer line
    const auto subs = subdiagrams_of(Partition({2, 2}));
    CHECK(subs.size() == 6);  // {}, (1), (2), (1,1), (2,1), (2,2)
    CHECK(subdiagrams_of(Partition({2, 2}), 2).size() == 2);
    for (const Partition& mu : subs) CHECK(Partition({2, 2}).contains(mu));
}

TEST_CASE("box set normalization") {
    const BoxSet raw{{2, 1}, {1, 2}, {1, 1}, {2, 1}};
    const BoxSet canon = normalized(raw);
    CHECK(canon == BoxSet{{1, 1}, {1, 2}, {2, 1}});
    CHECK(shifted(canon, 1, 1) == BoxSet{{2, 2}, {2, 3}, {3, 2}});
    CHECK(hook_length_in_set(canon, {1, 1}) == 3);
}
