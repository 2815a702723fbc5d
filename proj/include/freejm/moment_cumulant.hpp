#pragma once

#include <vector>

#include "freejm/rational.hpp"
#include "freejm/set_partition.hpp"

namespace freejm {

/// Truncated sequence m_1..m_K of exact rationals; m_0 = 1 is implicit.
class MomentSeq {
public:
    MomentSeq() = default;
    explicit MomentSeq(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    int order() const { return static_cast<int>(entries_.size()); }
    const Rational& at(int k) const;  // 1-based
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const MomentSeq&) const = default;

private:
    std::vector<Rational> entries_;
};

/// Truncated sequence C_1..C_K of exact rationals.
class CumulantSeq {
public:
    CumulantSeq() = default;
    explicit CumulantSeq(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    int order() const { return static_cast<int>(entries_.size()); }
    const Rational& at(int k) const;
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const CumulantSeq&) const = default;

private:
    std::vector<Rational> entries_;
};

enum class Transform { Free, Classical };

/// m_k = sum over NC(k) (Free) or P(k) (Classical) of the product of
/// C_{|b|} over blocks. Requires cumulants.order() >= order.
MomentSeq moments_from_cumulants(const CumulantSeq& cumulants, int order, Transform mode);

/// Exact inverse of moments_from_cumulants; the system is unitriangular,
/// so every truncation order is invertible.
CumulantSeq cumulants_from_moments(const MomentSeq& moments, int order, Transform mode);

/// Per-color cumulant data for a two-variable family.
struct TwoColorSpec {
    CumulantSeq x;
    CumulantSeq y;

    const CumulantSeq& of(Color c) const { return c == Color::X ? x : y; }
    int min_order() const { return std::min(x.order(), y.order()); }
};

/// Product over blocks of C^{color(b)}_{|b|}. Requires the partition to
/// respect the word.
Rational block_cumulant_product(const SetPartition& p, const Coloring& word,
                                const TwoColorSpec& spec);

/// Mixed moment of a free pair: sum of block_cumulant_product over all
/// non-crossing partitions respecting the word.
Rational mixed_moment_free_pair(const Coloring& word, const TwoColorSpec& spec);

/// Cumulants add under free convolution. Requires equal truncation orders.
CumulantSeq free_convolve(const CumulantSeq& a, const CumulantSeq& b);

}  // namespace freejm
