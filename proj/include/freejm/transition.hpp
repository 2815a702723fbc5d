#pragma once

#include "freejm/moment_cumulant.hpp"
#include "freejm/phi.hpp"
#include "freejm/young_diagram.hpp"

namespace freejm {

/// Exact moments of the transition measure of a diagram with n boxes:
/// m_k is the normalized character of the k-th power of the star
/// transposition sum on {1..n+1}, restricted to permutations fixing n+1.
/// Evaluated by grouping tuples over set partitions; m_1 is always 0.
MomentSeq transition_moments(const YoungDiagram& diagram, int kmax,
                             const Budget& budget = Budget::from_env());

/// Free cumulants of the transition measure; C_1 is always 0 and C_2
/// equals the box count.
CumulantSeq transition_cumulants(const YoungDiagram& diagram, int kmax,
                                 const Budget& budget = Budget::from_env());

}  // namespace freejm
