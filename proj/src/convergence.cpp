#include "freejm/convergence.hpp"

#include <stdexcept>

namespace freejm {

Rational limit_moment_blocks(const Coloring& word, const TwoColorSpec& spec) {
    Rational total(0);
    for_each_partition(word.size(), Family::NCGe2, word, [&](const SetPartition& p) {
        total += block_cumulant_product(p, word, spec);
    });
    total.canonicalize();
    return total;
}

Rational limit_moment_pairings(const Coloring& word, const TwoColorSpec& spec) {
    // Walk NC1Lt2 instead: each pair block with its l direct inner
    // singletons becomes one cycle of length l+1, contributing a cumulant
    // of order l+2 in the color of the pair.
    Rational total(0);
    for_each_partition(word.size(), Family::NC1Lt2, [&](const SetPartition& p) {
        const SetPartition merged = merge_inner_singletons(p);
        if (!respects_coloring(merged, word)) return;
        Rational prod(1);
        for (const auto& b : p.blocks()) {
            if (b.size() != 2) continue;
            int inner = 0;
            for (const auto& other_blk : p.blocks())
                if (other_blk.size() == 1 && b.front() < other_blk.front() &&
                    other_blk.front() < b.back() &&
                    inner_relation(p, other_blk, b) == InnerRelation::DirectInner)
                    ++inner;
            prod *= spec.of(word.at(b.front())).at(inner + 2);
        }
        total += prod;
    });
    total.canonicalize();
    return total;
}

Rational limit_moment(const Coloring& word, const TwoColorSpec& spec) {
    if (spec.min_order() < word.size())
        throw std::invalid_argument("limit_moment: truncation order insufficient");
    const Rational via_blocks = limit_moment_blocks(word, spec);
    const Rational via_pairings = limit_moment_pairings(word, spec);
    if (via_blocks != via_pairings)
        throw std::logic_error("limit_moment: the two evaluation routes disagree");
    return via_blocks;
}

YoungDiagram family_diagram(DiagramFamily family, int k) {
    if (k < 1) throw std::invalid_argument("family_diagram: size parameter must be >= 1");
    std::vector<int> rows;
    if (family == DiagramFamily::Square) {
        rows.assign(static_cast<size_t>(k), k);
    } else {
        for (int r = k; r >= 1; --r) rows.push_back(r);
    }
    return YoungDiagram(std::move(rows));
}

ScaledValue ConvergenceRow::gap() const {
    return ScaledValue(abs(phi.coeff() - limit.coeff()), word.size(), n);
}

std::vector<ConvergenceRow> convergence_table(DiagramFamily family,
                                              const std::vector<Coloring>& words,
                                              const std::vector<int>& sizes,
                                              const Budget& budget) {
    int max_len = 0;
    for (const auto& w : words) max_len = std::max(max_len, w.size());
    std::vector<ConvergenceRow> rows;
    for (int k : sizes) {
        const YoungDiagram diagram = family_diagram(family, k);
        const int n = diagram.size();
        const PhiContext ctx(n, diagram, diagram);
        TwoColorSpec spec;
        if (max_len > 0) {
            const CumulantSeq cumulants = transition_cumulants(diagram, max_len, budget);
            spec = TwoColorSpec{cumulants, cumulants};
        }
        for (const auto& word : words) {
            ConvergenceRow row;
            row.k = k;
            row.n = n;
            row.word = word;
            row.phi = phi_word_grouped(ctx, word, budget);
            row.limit = ScaledValue(limit_moment(word, spec), word.size(), n);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows, int decimal_digits) {
    std::string out = "n,word,phi,limit,gap\n";
    for (const auto& row : rows) {
        const ScaledValue gap = row.gap();
        out += std::to_string(row.n);
        out += ',';
        out += row.word.str();
        out += ',';
        if (decimal_digits < 0) {
            out += row.phi.str();
            out += ',';
            out += row.limit.str();
            out += ',';
            out += gap.str();
        } else {
            out += row.phi.decimal(decimal_digits);
            out += ',';
            out += row.limit.decimal(decimal_digits);
            out += ',';
            out += gap.decimal(decimal_digits);
        }
        out += '\n';
    }
    return out;
}

}  // namespace freejm
