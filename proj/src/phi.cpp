#include "freejm/phi.hpp"

#include <cstdlib>
#include <string>

namespace freejm {

Budget Budget::from_env() {
    Budget budget;
    if (const char* env = std::getenv("FREEJM_BUDGET")) {
        try {
            const long long cap = std::stoll(env);
            if (cap > 0) {
                budget.max_tuples = cap;
                budget.max_partitions = cap;
            }
        } catch (const std::exception&) {
            // ignore malformed overrides, keep defaults
        }
    }
    return budget;
}

PhiContext::PhiContext(int n_in, YoungDiagram l1, YoungDiagram l2)
    : n(n_in), lambda1(std::move(l1)), lambda2(std::move(l2)) {
    if (n < 1) throw std::invalid_argument("PhiContext: n must be >= 1");
    if (lambda1.size() != n || lambda2.size() != n)
        throw std::invalid_argument("PhiContext: diagrams must have n boxes");
}

ScaledValue::ScaledValue(Rational coeff, int word_len, int n)
    : coeff_(std::move(coeff)), word_len_(word_len), n_(n) {
    if (n < 1) throw std::invalid_argument("ScaledValue: n must be >= 1");
    if (word_len < 0) throw std::invalid_argument("ScaledValue: negative word length");
    coeff_.canonicalize();
}

Rational ScaledValue::rational() const {
    if (!exact_rational())
        throw std::logic_error("ScaledValue::rational: value carries sqrt(n)");
    if (coeff_ == 0) return Rational(0);
    Rational out = coeff_ / Rational(integer_pow(n_, static_cast<unsigned>(word_len_ / 2)));
    out.canonicalize();
    return out;
}

std::string ScaledValue::str() const {
    if (exact_rational()) return rational_str(rational());
    // coeff * n^{-m/2} = (coeff / n^{(m+1)/2}) * sqrt(n)
    Rational r = coeff_ / Rational(integer_pow(n_, static_cast<unsigned>((word_len_ + 1) / 2)));
    r.canonicalize();
    return rational_str(r) + "*sqrt(" + std::to_string(n_) + ")";
}

std::string ScaledValue::decimal(int digits) const {
    if (exact_rational()) return decimal_str(rational(), digits);
    Rational r = coeff_ / Rational(integer_pow(n_, static_cast<unsigned>((word_len_ + 1) / 2)));
    return decimal_str_sqrt(r, n_, digits);
}

Rational phi_of_permutation(const PhiContext& ctx, const Permutation& s) {
    const int n = ctx.n;
    const int ground = 2 * n + 1;
    if (s.degree() != ground)
        throw std::invalid_argument("phi_of_permutation: permutation degree must be 2n+1");
    if (s.apply(ground) != ground) return Rational(0);
    for (int i = 1; i <= n; ++i)
        if (s.apply(i) > n) return Rational(0);
    std::vector<int> first(static_cast<size_t>(n)), second(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) first[static_cast<size_t>(i - 1)] = s.apply(i);
    for (int i = 1; i <= n; ++i) second[static_cast<size_t>(i - 1)] = s.apply(n + i) - n;
    const Rational c1 =
        normalized_character(ctx.lambda1, CycleType::of(Permutation::from_images(first)));
    const Rational c2 =
        normalized_character(ctx.lambda2, CycleType::of(Permutation::from_images(second)));
    Rational out = c1 * c2;
    out.canonicalize();
    return out;
}

ScaledValue phi_word_naive(const PhiContext& ctx, const Coloring& word, const Budget& budget) {
    const int m = word.size();
    if (m < 1) throw std::invalid_argument("phi_word_naive: word must be non-empty");
    const int n = ctx.n;
    Integer tuple_count = integer_pow(n, static_cast<unsigned>(m));
    if (tuple_count > Integer(static_cast<long>(budget.max_tuples)))
        throw BudgetError("phi_word_naive: " + tuple_count.get_str() + " tuples exceed budget " +
                          std::to_string(budget.max_tuples));
    // odometer over the per-position ranges
    std::vector<int> low(static_cast<size_t>(m)), high(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const bool is_x = word.at(i) == Color::X;
        low[static_cast<size_t>(i - 1)] = is_x ? 1 : n + 1;
        high[static_cast<size_t>(i - 1)] = is_x ? n : 2 * n;
    }
    std::vector<int> alphas = low;
    Rational total(0);
    for (;;) {
        total += phi_of_permutation(ctx, star_transposition_product(2 * n + 1, alphas));
        int i = m - 1;
        while (i >= 0 && alphas[static_cast<size_t>(i)] == high[static_cast<size_t>(i)]) {
            alphas[static_cast<size_t>(i)] = low[static_cast<size_t>(i)];
            --i;
        }
        if (i < 0) break;
        ++alphas[static_cast<size_t>(i)];
    }
    return ScaledValue(total, m, n);
}

ScaledValue phi_word_grouped(const PhiContext& ctx, const Coloring& word, const Budget& budget) {
    const int m = word.size();
    if (m < 1) throw std::invalid_argument("phi_word_grouped: word must be non-empty");
    const int n = ctx.n;
    Rational total(0);
    long long visited = 0;
    for_each_partition(m, Family::All, word, [&](const SetPartition& p) {
        if (++visited > budget.max_partitions)
            throw BudgetError("phi_word_grouped: partition budget exceeded at " +
                              std::to_string(budget.max_partitions));
        int x_blocks = 0;
        for (int b = 0; b < p.block_count(); ++b)
            if (block_color(p, word, b) == Color::X) ++x_blocks;
        const int y_blocks = p.block_count() - x_blocks;
        if (x_blocks > n || y_blocks > n) return;  // weight (n)_k (n)_l vanishes
        const Integer weight =
            descending_factorial(n, x_blocks) * descending_factorial(n, y_blocks);
        const Rational phi_pi =
            phi_of_permutation(ctx, product_of_tuple(representative_tuple(p, word, n)));
        total += Rational(weight) * phi_pi;
    });
    total.canonicalize();
    return ScaledValue(total, m, n);
}

Integer count_matching_tuples(const SetPartition& p, const Coloring& word, int n) {
    if (!respects_coloring(p, word))
        throw std::invalid_argument("count_matching_tuples: partition does not respect the word");
    int x_blocks = 0;
    for (int b = 0; b < p.block_count(); ++b)
        if (block_color(p, word, b) == Color::X) ++x_blocks;
    return descending_factorial(n, x_blocks) *
           descending_factorial(n, p.block_count() - x_blocks);
}

}  // namespace freejm
