#pragma once

#include <vector>

#include "freejm/permutation.hpp"
#include "freejm/set_partition.hpp"

namespace freejm {

/// Tuple (a_1..a_m) of star transpositions a_i = (alpha_i, 2n+1) acting on
/// {1..2n+1}. Values 1..n are the X half, n+1..2n the Y half.
class JmTuple {
public:
    JmTuple(int n, std::vector<int> alphas);

    int half_size() const { return n_; }
    int ground_size() const { return 2 * n_ + 1; }
    int size() const { return static_cast<int>(alphas_.size()); }
    int alpha(int i) const;  // 1-based
    const std::vector<int>& alphas() const { return alphas_; }

    bool operator==(const JmTuple&) const = default;

private:
    int n_ = 0;
    std::vector<int> alphas_;
};

/// a_1 a_2 ... a_m with the rightmost factor acting first.
Permutation product_of_tuple(const JmTuple& t);

/// Positions i, j share a block iff alpha_i = alpha_j.
SetPartition partition_of_tuple(const JmTuple& t);

/// True iff alpha_i lies in the X half whenever word(i) = X and in the
/// Y half whenever word(i) = Y.
bool matches_word(const JmTuple& t, const Coloring& word);

/// Canonical tuple with partition_of_tuple = p and matches_word = true:
/// X blocks receive 1, 2, ... in order of block minima, Y blocks receive
/// n+1, n+2, ... Requires p to respect the word and at most n blocks of
/// each color.
JmTuple representative_tuple(const SetPartition& p, const Coloring& word, int n);

/// Reads the cycle decomposition of product_of_tuple(t) directly from the
/// block structure of p, without multiplying permutations. Requires
/// p in NC12 and partition_of_tuple(t) = p. Non-inner singletons feed the
/// cycle through 2n+1; each pair block with direct inner singletons
/// yields one more cycle.
CycleDecomposition cycles_from_partition(const SetPartition& p, const JmTuple& t);

struct LengthCriterion {
    bool inequality;  // 2|p| >= |product| + m
    bool in_nc12;     // p in NC12(m)
};

/// Evaluates both sides of the equivalence 2|p| >= |s| + m  <=>  p in
/// NC12(m). Requires partition_of_tuple(t) = p.
LengthCriterion length_criterion(const SetPartition& p, const JmTuple& t);

}  // namespace freejm
