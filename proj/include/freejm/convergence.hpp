#pragma once

#include <string>
#include <vector>

#include "freejm/moment_cumulant.hpp"
#include "freejm/phi.hpp"
#include "freejm/transition.hpp"

namespace freejm {

/// Sum over non-crossing partitions with blocks of size >= 2 respecting
/// the word, of the block cumulant products. Computed two ways on every
/// call (direct block enumeration, and enumeration of NC1Lt2 partitions
/// through the merge bijection and cycle reading), which must agree.
Rational limit_moment(const Coloring& word, const TwoColorSpec& spec);

/// The two routes individually (exposed for verification).
Rational limit_moment_blocks(const Coloring& word, const TwoColorSpec& spec);
Rational limit_moment_pairings(const Coloring& word, const TwoColorSpec& spec);

enum class DiagramFamily { Square, Staircase };

/// square: k rows of k (n = k^2); staircase: (k, k-1, ..., 1)
/// (n = k(k+1)/2).
YoungDiagram family_diagram(DiagramFamily family, int k);

/// One word at one size: the finite mixed moment against the
/// self-consistent target built from the transition cumulants at the same
/// n. Both sides carry the common n^{-m/2} scale, so the gap is exact.
struct ConvergenceRow {
    int k = 0;
    int n = 0;
    Coloring word;
    ScaledValue phi;
    ScaledValue limit;

    ScaledValue gap() const;
};

std::vector<ConvergenceRow> convergence_table(DiagramFamily family,
                                              const std::vector<Coloring>& words,
                                              const std::vector<int>& sizes,
                                              const Budget& budget = Budget::from_env());

/// CSV with header "n,word,phi,limit,gap". Negative digits render exact
/// values (p/q, with a sqrt(n) factor spelled out for odd words);
/// otherwise fixed-point decimals with that many places.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows, int decimal_digits = -1);

}  // namespace freejm
