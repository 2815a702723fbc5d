#pragma once

#include <stdexcept>
#include <string>

#include "freejm/character.hpp"
#include "freejm/jm_tuple.hpp"
#include "freejm/moment_cumulant.hpp"
#include "freejm/permutation.hpp"
#include "freejm/rational.hpp"
#include "freejm/set_partition.hpp"
#include "freejm/young_diagram.hpp"

namespace freejm {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caps on the two evaluation strategies. FREEJM_BUDGET=N overrides both.
struct Budget {
    long long max_tuples = 1'000'000;    // word evaluation by full enumeration
    long long max_partitions = 115'975;  // Bell(10), grouped evaluation

    static Budget from_env();
};

/// The data defining the functional: two diagrams of size n, evaluated on
/// permutations of {1..2n+1}.
struct PhiContext {
    PhiContext(int n, YoungDiagram lambda1, YoungDiagram lambda2);

    int n;
    YoungDiagram lambda1;
    YoungDiagram lambda2;
};

/// Exact value of the form coeff * n^{-m/2}. For even m this is a plain
/// rational; for odd m the value carries a residual sqrt(n) and is
/// rendered exactly as "r*sqrt(n)" or as a decimal.
class ScaledValue {
public:
    ScaledValue() = default;  // zero of an empty word at n = 1
    ScaledValue(Rational coeff, int word_len, int n);

    const Rational& coeff() const { return coeff_; }
    int word_len() const { return word_len_; }
    int n() const { return n_; }

    bool exact_rational() const { return word_len_ % 2 == 0 || coeff_ == 0; }
    Rational rational() const;  // requires exact_rational()

    std::string str() const;
    std::string decimal(int digits) const;

    bool operator==(const ScaledValue&) const = default;

private:
    Rational coeff_;
    int word_len_ = 0;
    int n_ = 1;
};

/// 0 unless s fixes 2n+1 and maps {1..n} onto itself; otherwise the
/// product of the two normalized characters on the split halves.
Rational phi_of_permutation(const PhiContext& ctx, const Permutation& s);

/// n^{-m/2} * sum over all n^m tuples matching the word.
ScaledValue phi_word_naive(const PhiContext& ctx, const Coloring& word,
                           const Budget& budget = Budget::from_env());

/// Same value grouped by partitions: n^{-m/2} * sum over partitions
/// respecting the word of (n)_k (n)_l * phi(representative product).
ScaledValue phi_word_grouped(const PhiContext& ctx, const Coloring& word,
                             const Budget& budget = Budget::from_env());

/// (n)_k (n)_l where k and l count X and Y blocks. Requires the partition
/// to respect the word. Equals the number of tuples with this partition
/// matching the word.
Integer count_matching_tuples(const SetPartition& p, const Coloring& word, int n);

}  // namespace freejm
