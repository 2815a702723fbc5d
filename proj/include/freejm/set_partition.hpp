#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freejm {

enum class Color : std::uint8_t { X, Y };

inline char color_char(Color c) { return c == Color::X ? 'X' : 'Y'; }
inline Color other(Color c) { return c == Color::X ? Color::Y : Color::X; }

/// Word over {X, Y}; position i (1-based) carries the color of i.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> labels) : labels_(std::move(labels)) {}

    static Coloring parse(std::string_view word);
    static Coloring uniform(int m, Color c);

    int size() const { return static_cast<int>(labels_.size()); }
    Color at(int pos) const;
    int count(Color c) const;
    std::string str() const;

    bool operator==(const Coloring&) const = default;

private:
    std::vector<Color> labels_;
};

/// Partition of {1..m} into disjoint non-empty blocks.
///
/// Canonical form: every block is sorted increasingly and blocks are
/// ordered by their minimum element. Equality and ordering are structural
/// on that form.
class SetPartition {
public:
    SetPartition() = default;  // partition of the empty set
    SetPartition(int m, std::vector<std::vector<int>> blocks);

    /// Restricted growth string, 0-based labels: rgs[0] = 0 and
    /// rgs[i] <= 1 + max(rgs[0..i-1]).
    static SetPartition from_rgs(const std::vector<int>& rgs);
    static SetPartition singletons(int m);
    static SetPartition parse(std::string_view text);  // "[[1,5],[2],[3,4]]"

    int ground_size() const { return m_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int index) const { return blocks_.at(index); }
    int block_index_of(int element) const;
    int block_size_of(int element) const;

    std::string str() const;

    bool operator==(const SetPartition& rhs) const {
        return m_ == rhs.m_ && blocks_ == rhs.blocks_;
    }
    bool operator<(const SetPartition& rhs) const {
        if (m_ != rhs.m_) return m_ < rhs.m_;
        return blocks_ < rhs.blocks_;
    }

private:
    int m_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // element-1 -> block index
};

/// The partition families the enumerator can produce.
enum class Family {
    All,     // P(m), every partition
    NC,      // non-crossing
    NC2,     // non-crossing pair partitions
    NC12,    // non-crossing with blocks of size 1 or 2
    NC1Lt2,  // NC12 with every singleton nested inside some pair block
    NCGe2,   // non-crossing with no singleton blocks
};

std::optional<Family> family_from_token(std::string_view token);
std::string_view family_token(Family f);

bool is_noncrossing(const SetPartition& p);
bool in_family(const SetPartition& p, Family f);

enum class InnerRelation { NotInner, DirectInner, IndirectInner };

/// Classifies `inner` relative to `outer`: inner means `outer` has
/// elements on both sides of `inner`'s span, direct means no third block
/// sits strictly between the two. Defined by spans, so any partition is
/// accepted; the blocks must be distinct blocks of it.
InnerRelation inner_relation(const SetPartition& p, const std::vector<int>& inner,
                             const std::vector<int>& outer);
InnerRelation inner_relation_by_index(const SetPartition& p, int inner, int outer);

bool respects_coloring(const SetPartition& p, const Coloring& coloring);

/// Color shared by all elements of a block; the partition must respect
/// the coloring for this to be meaningful.
Color block_color(const SetPartition& p, const Coloring& coloring, int block_index);

/// Merges every pair block with its direct inner singletons. Bijection
/// from NC1Lt2(m) onto NCGe2(m); rejects input outside NC1Lt2(m).
SetPartition merge_inner_singletons(const SetPartition& p);

/// Inverse of merge_inner_singletons: keeps the extremes of every block
/// together and splits the interior into singletons. Rejects input
/// outside NCGe2(m).
SetPartition split_block_interiors(const SetPartition& p);

/// Visits every member of the family exactly once, in the lexicographic
/// order of restricted growth strings. With a coloring, only partitions
/// respecting it are visited.
void for_each_partition(int m, Family f, const std::function<void(const SetPartition&)>& visit);
void for_each_partition(int m, Family f, const std::optional<Coloring>& coloring,
                        const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> enumerate_partitions(
    int m, Family f, const std::optional<Coloring>& coloring = std::nullopt);

}  // namespace freejm
