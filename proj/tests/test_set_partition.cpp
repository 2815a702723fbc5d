#include <algorithm>
#include <random>

#include "doctest.h"
#include "freejm/set_partition.hpp"
#include "oracles.hpp"

using namespace freejm;

namespace {

SetPartition sp(int m, std::vector<std::vector<int>> blocks) {
    return SetPartition(m, std::move(blocks));
}

// the drawing from the inner-block discussion: {1,5,6,8},{2,4},{3},{7,9}
const SetPartition kDrawing = sp(9, {{1, 5, 6, 8}, {2, 4}, {3}, {7, 9}});

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(enumerate_partitions(4, Family::All).size() == 15);
    CHECK(enumerate_partitions(4, Family::NC).size() == 14);
    CHECK(enumerate_partitions(0, Family::All).size() == 1);
    CHECK(enumerate_partitions(0, Family::All).front() == SetPartition());

    auto nc12 = enumerate_partitions(3, Family::NC12);
    REQUIRE(nc12.size() == 4);
    std::vector<SetPartition> expected = {sp(3, {{1}, {2}, {3}}), sp(3, {{1, 2}, {3}}),
                                          sp(3, {{1}, {2, 3}}), sp(3, {{1, 3}, {2}})};
    std::sort(nc12.begin(), nc12.end());
    std::sort(expected.begin(), expected.end());
    CHECK(nc12 == expected);
}

TEST_CASE("enumeration matches the classical counting sequences") {
    for (int m = 0; m <= 9; ++m) {
        CHECK(enumerate_partitions(m, Family::NC).size() ==
              static_cast<size_t>(oracles::catalan(m)));
        if (m <= 8) {
            CHECK(enumerate_partitions(m, Family::All).size() ==
                  static_cast<size_t>(oracles::bell(m)));
            CHECK(enumerate_partitions(m, Family::NC12).size() ==
                  static_cast<size_t>(oracles::motzkin(m)));
        }
        if (m % 2 == 0)
            CHECK(enumerate_partitions(m, Family::NC2).size() ==
                  static_cast<size_t>(oracles::catalan(m / 2)));
        else
            CHECK(enumerate_partitions(m, Family::NC2).empty());
    }
    CHECK(enumerate_partitions(10, Family::NC).size() ==
          static_cast<size_t>(oracles::catalan(10)));
}

TEST_CASE("non-crossing detection") {
    CHECK_FALSE(is_noncrossing(kDrawing));  // 6 < 7 < 8 < 9 interleaves
    CHECK(is_noncrossing(SetPartition::singletons(5)));
    CHECK(is_noncrossing(sp(4, {{1, 4}, {2, 3}})));
    CHECK_FALSE(is_noncrossing(sp(4, {{1, 3}, {2, 4}})));
}

TEST_CASE("inner block classification") {
    CHECK(inner_relation(kDrawing, {2, 4}, {1, 5, 6, 8}) == InnerRelation::DirectInner);
    CHECK(inner_relation(kDrawing, {3}, {1, 5, 6, 8}) == InnerRelation::IndirectInner);
    CHECK(inner_relation(kDrawing, {2, 4}, {7, 9}) == InnerRelation::NotInner);
    CHECK(inner_relation(kDrawing, {3}, {2, 4}) == InnerRelation::DirectInner);
    CHECK_THROWS_AS(inner_relation(kDrawing, {2, 4}, {2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(inner_relation(kDrawing, {2, 5}, {7, 9}), std::invalid_argument);
}

TEST_CASE("merge of direct inner singletons") {
    CHECK(merge_inner_singletons(sp(8, {{1, 8}, {2, 4}, {3}, {5}, {6}, {7}})) ==
          sp(8, {{1, 5, 6, 7, 8}, {2, 3, 4}}));
    const SetPartition pairs = sp(4, {{1, 2}, {3, 4}});
    CHECK(merge_inner_singletons(pairs) == pairs);
    CHECK(merge_inner_singletons(sp(3, {{1, 3}, {2}})) == sp(3, {{1, 2, 3}}));

    CHECK_THROWS_AS(merge_inner_singletons(sp(3, {{1}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(merge_inner_singletons(sp(3, {{1, 2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(merge_inner_singletons(sp(4, {{1, 3}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("split of block interiors") {
    CHECK(split_block_interiors(sp(3, {{1, 2, 3}})) == sp(3, {{1, 3}, {2}}));
    const SetPartition pairs = sp(4, {{1, 4}, {2, 3}});
    CHECK(split_block_interiors(pairs) == pairs);
    CHECK(split_block_interiors(sp(8, {{1, 5, 6, 7, 8}, {2, 3, 4}})) ==
          sp(8, {{1, 8}, {2, 4}, {3}, {5}, {6}, {7}}));

    CHECK_THROWS_AS(split_block_interiors(sp(3, {{1, 2}, {3}})), std::invalid_argument);
    CHECK_THROWS_AS(split_block_interiors(sp(4, {{1, 3}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("merge and split are mutually inverse bijections") {
    for (int m = 0; m <= 8; ++m) {
        const auto small = enumerate_partitions(m, Family::NC1Lt2);
        const auto big = enumerate_partitions(m, Family::NCGe2);
        CHECK(small.size() == big.size());
        for (const auto& p : small) {
            const SetPartition image = merge_inner_singletons(p);
            CHECK(in_family(image, Family::NCGe2));
            CHECK(split_block_interiors(image) == p);
        }
        for (const auto& p : big) CHECK(merge_inner_singletons(split_block_interiors(p)) == p);
    }
}

TEST_CASE("family chain") {
    for (int m = 0; m <= 8; ++m) {
        for_each_partition(m, Family::All, [](const SetPartition& p) {
            if (in_family(p, Family::NC1Lt2)) CHECK(in_family(p, Family::NC12));
            if (in_family(p, Family::NC12)) CHECK(in_family(p, Family::NC));
            if (in_family(p, Family::NC2)) CHECK(in_family(p, Family::NC12));
            if (in_family(p, Family::NCGe2)) CHECK(in_family(p, Family::NC));
        });
    }
}

TEST_CASE("coloring respect") {
    CHECK(respects_coloring(sp(4, {{1, 2}, {3, 4}}), Coloring::parse("XXYY")));
    CHECK(respects_coloring(sp(4, {{1, 3}, {2, 4}}), Coloring::parse("XYXY")));
    CHECK_FALSE(respects_coloring(sp(2, {{1, 2}}), Coloring::parse("XY")));
    CHECK_THROWS_AS(respects_coloring(sp(2, {{1, 2}}), Coloring::parse("XYX")),
                    std::invalid_argument);
}

TEST_CASE("colored enumeration equals filtered enumeration") {
    std::mt19937_64 rng(7);
    for (int m = 1; m <= 7; ++m) {
        std::vector<Color> labels(static_cast<size_t>(m));
        for (auto& c : labels) c = rng() % 2 ? Color::X : Color::Y;
        const Coloring coloring{std::move(labels)};
        for (Family f : {Family::All, Family::NC, Family::NCGe2}) {
            std::vector<SetPartition> filtered;
            for (const auto& p : enumerate_partitions(m, f))
                if (respects_coloring(p, coloring)) filtered.push_back(p);
            CHECK(enumerate_partitions(m, f, coloring) == filtered);
        }
    }
}

TEST_CASE("serialization round trip") {
    CHECK(kDrawing.str() == "[[1,5,6,8],[2,4],[3],[7,9]]");
    CHECK(SetPartition::parse("[[1,5,6,8],[2,4],[3],[7,9]]") == kDrawing);
    CHECK(SetPartition::parse("[]") == SetPartition());
    CHECK(Coloring::parse("XXYY").str() == "XXYY");
    CHECK_THROWS_AS(SetPartition::parse("[[1,3],[2,5]]"), std::invalid_argument);
}

TEST_CASE("invalid constructions are rejected") {
    CHECK_THROWS_AS(sp(3, {{1, 2}}), std::invalid_argument);          // misses 3
    CHECK_THROWS_AS(sp(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(sp(2, {{1, 2}, {}}), std::invalid_argument);      // empty block
    CHECK_THROWS_AS(Coloring::parse("XZ"), std::invalid_argument);
}
