#include <random>

#include "doctest.h"
#include "freejm/jm_tuple.hpp"
#include "freejm/permutation.hpp"
#include "freejm/verify.hpp"
#include "oracles.hpp"

using namespace freejm;

TEST_CASE("composition applies the rightmost factor first") {
    const Permutation a = Permutation::transposition(5, 1, 5);
    const Permutation b = Permutation::transposition(5, 2, 5);
    const Permutation product = a * b;
    CHECK(product.apply(2) == 1);
    CHECK(product.apply(5) == 2);
    CHECK(product.apply(1) == 5);
    CHECK(product * product.inverse() == Permutation(5));
    CHECK(Permutation(5) * product == product);
}

TEST_CASE("one-line notation round trip") {
    const Permutation s = Permutation::from_one_line("2,1,3");
    CHECK(s == Permutation::transposition(3, 1, 2));
    CHECK(s.one_line_str() == "2,1,3");
    CHECK_THROWS_AS(Permutation::from_one_line("2,2,3"), std::invalid_argument);
}

TEST_CASE("length agrees with brute-force minimal factorizations") {
    CHECK(Permutation(6).length() == 0);
    CHECK(Permutation::transposition(4, 2, 3).length() == 1);
    for (int q = 2; q <= 6; ++q) {
        std::vector<int> cycle(static_cast<size_t>(q));
        for (int i = 0; i < q; ++i) cycle[static_cast<size_t>(i)] = i + 1;
        const Permutation s = Permutation::from_cycles(q, {cycle});
        CHECK(s.length() == q - 1);
        CHECK(oracles::min_transposition_count(s) == q - 1);
    }
    // a couple of mixed shapes against the search oracle
    const Permutation mixed = Permutation::from_cycles(6, {{1, 4, 2}, {3, 6}});
    CHECK(mixed.length() == oracles::min_transposition_count(mixed));
}

TEST_CASE("length is invariant under conjugation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        std::vector<int> s_img(static_cast<size_t>(n)), g_img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) s_img[static_cast<size_t>(i)] = g_img[static_cast<size_t>(i)] = i + 1;
        std::shuffle(s_img.begin(), s_img.end(), rng);
        std::shuffle(g_img.begin(), g_img.end(), rng);
        const Permutation s = Permutation::from_images(s_img);
        const Permutation g = Permutation::from_images(g_img);
        CHECK(conjugate(s, g).length() == s.length());
    }
}

TEST_CASE("tuple products") {
    // a_2 = a_9 and a_4 = a_7; the product decomposes into
    // (19,1)(2,7,3)(4,6,5) together with fixed points
    const JmTuple t(9, {1, 2, 3, 4, 5, 6, 4, 7, 2});
    std::vector<std::vector<int>> cycles = {{19, 1}, {2, 7, 3}, {4, 6, 5}};
    for (int x : {8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18}) cycles.push_back({x});
    const CycleDecomposition expected(19, cycles);
    CHECK(CycleDecomposition::of(product_of_tuple(t)) == expected);
    CHECK(expected.str() == "(1,19)(2,7,3)(4,6,5)");

    CHECK(product_of_tuple(JmTuple(3, {5, 5})).is_identity());
    CHECK(product_of_tuple(JmTuple(1, {1})) == Permutation::transposition(3, 1, 3));
}

TEST_CASE("partition of a tuple") {
    CHECK(partition_of_tuple(JmTuple(9, {1, 2, 3, 4, 5, 6, 4, 7, 2})) ==
          SetPartition(9, {{1}, {2, 9}, {3}, {4, 7}, {5}, {6}, {8}}));
    CHECK(partition_of_tuple(JmTuple(2, {1, 2, 3, 4})) == SetPartition::singletons(4));
    CHECK(partition_of_tuple(JmTuple(2, {3, 3, 3})) == SetPartition(3, {{1, 2, 3}}));
}

TEST_CASE("representative tuples") {
    CHECK(representative_tuple(SetPartition(2, {{1, 2}}), Coloring::parse("XX"), 2) ==
          JmTuple(2, {1, 1}));
    CHECK(representative_tuple(SetPartition(2, {{1}, {2}}), Coloring::parse("XY"), 1) ==
          JmTuple(1, {1, 2}));
    CHECK(representative_tuple(SetPartition(4, {{1, 4}, {2, 3}}), Coloring::parse("XXXX"), 2) ==
          JmTuple(2, {1, 2, 2, 1}));
    CHECK_THROWS_AS(representative_tuple(SetPartition(2, {{1, 2}}), Coloring::parse("XY"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        representative_tuple(SetPartition::singletons(3), Coloring::parse("XXX"), 2),
        std::invalid_argument);
}

TEST_CASE("word matching") {
    CHECK(matches_word(JmTuple(2, {1, 3}), Coloring::parse("XY")));
    CHECK_FALSE(matches_word(JmTuple(2, {3, 1}), Coloring::parse("XY")));
    CHECK(matches_word(JmTuple(2, {}), Coloring()));
    CHECK_THROWS_AS(matches_word(JmTuple(2, {1}), Coloring::parse("XX")), std::invalid_argument);
}

TEST_CASE("cycle reading from the block structure") {
    const JmTuple example(9, {1, 2, 3, 4, 5, 6, 4, 7, 2});
    const SetPartition p = partition_of_tuple(example);
    CHECK(cycles_from_partition(p, example) == CycleDecomposition::of(product_of_tuple(example)));

    // non-crossing pair partition: the identity, everything fixed
    const SetPartition pairs(4, {{1, 4}, {2, 3}});
    const JmTuple pair_tuple = representative_tuple(pairs, Coloring::parse("XXXX"), 2);
    CHECK(cycles_from_partition(pairs, pair_tuple).to_permutation().is_identity());

    // one pair over one singleton: a single transposition of the alphas
    const SetPartition nested(3, {{1, 3}, {2}});
    const JmTuple nested_tuple = representative_tuple(nested, Coloring::parse("XXX"), 2);
    const CycleDecomposition read = cycles_from_partition(nested, nested_tuple);
    CHECK(read == CycleDecomposition::of(product_of_tuple(nested_tuple)));
    CHECK(read.str() == "(1,2)");

    CHECK_THROWS_AS(cycles_from_partition(SetPartition(3, {{1, 2, 3}}), JmTuple(2, {1, 1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(cycles_from_partition(pairs, JmTuple(2, {1, 1, 2, 2})),
                    std::invalid_argument);
}

TEST_CASE("length criterion examples") {
    const SetPartition nc_pairs(4, {{1, 2}, {3, 4}});
    const auto ok = length_criterion(nc_pairs,
                                     representative_tuple(nc_pairs, Coloring::parse("XXXX"), 2));
    CHECK(ok.inequality);
    CHECK(ok.in_nc12);

    const SetPartition crossing(4, {{1, 3}, {2, 4}});
    const auto bad = length_criterion(crossing, JmTuple(2, {1, 2, 1, 2}));
    CHECK_FALSE(bad.inequality);
    CHECK_FALSE(bad.in_nc12);

    const SetPartition lone(1, {{1}});
    const auto single = length_criterion(lone, JmTuple(1, {1}));
    CHECK(single.inequality);
    CHECK(single.in_nc12);
}

TEST_CASE("verification suites over the exhaustive ranges") {
    CHECK(verify::tuple_conjugacy(5, 4, false).ok);
    CHECK(verify::tuple_conjugacy(3, 2, true).ok);  // independent subgroup search
    CHECK(verify::unrepeated_factor_length(5, 3).ok);
    CHECK(verify::pair_partition_identity(8).ok);
    CHECK(verify::length_criterion_suite(6, 4).ok);
    CHECK(verify::cycle_reading(8).ok);
    CHECK(verify::tuple_count_formula(4, 4).ok);
}
