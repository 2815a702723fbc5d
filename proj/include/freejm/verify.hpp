#pragma once

#include <string>
#include <vector>

namespace freejm::verify {

struct Result {
    bool ok = true;
    std::vector<std::string> lines;   // one summary line per checked slice
    std::string counterexample;       // first failure, serialized

    void fail(std::string what) {
        if (ok) counterexample = std::move(what);
        ok = false;
    }
};

/// Equal cardinalities of NC1Lt2(m) and NCGe2(m) and identity round trips
/// of the merge/split bijection, for every m <= max_m.
Result f_bijection(int max_m = 10);

/// Any two tuples with the same partition matching the same word have
/// products conjugate by a permutation preserving both halves and fixing
/// 2n+1. Verified constructively for all words and tuples; additionally
/// by exhaustive subgroup search when `search` is set (slower).
Result tuple_conjugacy(int max_m = 5, int max_n = 4, bool search = false);

/// Inserting an unrepeated star transposition into a product increases
/// the length by exactly one, for all tuples with m <= max_m, n <= max_n.
Result unrepeated_factor_length(int max_m = 6, int max_n = 4);

/// A pair partition's representative product is the identity iff the
/// partition is non-crossing; all even m <= max_m.
Result pair_partition_identity(int max_m = 8);

/// 2|p| >= |product| + m holds exactly for the NC12 members of P(m),
/// for all m <= max_m at the given n.
Result length_criterion_suite(int max_m = 6, int n = 4);

/// Cycle reading from the block structure agrees with the true cycle
/// decomposition of the product, for every NC12 partition, m <= max_m.
Result cycle_reading(int max_m = 8);

/// Brute-force tuple counts equal (n)_k (n)_l for every partition
/// respecting every word, m <= max_m, n <= max_n.
Result tuple_count_formula(int max_m = 4, int max_n = 5);

/// Naive and grouped evaluations agree for all words up to max_word_len
/// over the built-in diagram pairs (n = 1, 2, 3).
Result grouping(int max_word_len = 5);

/// Moment/cumulant round trips on random rational sequences, both the
/// free and the classical transform, plus the order-4 free/classical
/// split (2 vs 3) of the standardized sequence.
Result mc_roundtrip(int count = 100, int order = 8, unsigned seed = 20240901);

/// Colored moment identities on random rational specs: the sum over all
/// colorings equals the free-convolution moment, and with vanishing first
/// cumulants the mixed moment equals its restriction to blocks >= 2.
Result colored_moment_identities(int max_order = 6, unsigned seed = 20240902);

}  // namespace freejm::verify
