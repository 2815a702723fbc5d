#include "freejm/jm_tuple.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace freejm {

JmTuple::JmTuple(int n, std::vector<int> alphas) : n_(n), alphas_(std::move(alphas)) {
    if (n < 0) throw std::invalid_argument("JmTuple: negative n");
    for (int a : alphas_)
        if (a < 1 || a > 2 * n) throw std::invalid_argument("JmTuple: alpha out of {1..2n}");
}

int JmTuple::alpha(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("JmTuple::alpha: index out of range");
    return alphas_[static_cast<size_t>(i - 1)];
}

Permutation product_of_tuple(const JmTuple& t) {
    return star_transposition_product(t.ground_size(), t.alphas());
}

SetPartition partition_of_tuple(const JmTuple& t) {
    std::vector<int> rgs(static_cast<size_t>(t.size()));
    std::map<int, int> label_of;
    for (int i = 1; i <= t.size(); ++i) {
        auto it = label_of.try_emplace(t.alpha(i), static_cast<int>(label_of.size())).first;
        rgs[static_cast<size_t>(i - 1)] = it->second;
    }
    return SetPartition::from_rgs(rgs);
}

bool matches_word(const JmTuple& t, const Coloring& word) {
    if (word.size() != t.size()) throw std::invalid_argument("matches_word: length mismatch");
    const int n = t.half_size();
    for (int i = 1; i <= t.size(); ++i) {
        const bool in_x_half = t.alpha(i) <= n;
        if (in_x_half != (word.at(i) == Color::X)) return false;
    }
    return true;
}

JmTuple representative_tuple(const SetPartition& p, const Coloring& word, int n) {
    if (!respects_coloring(p, word))
        throw std::invalid_argument("representative_tuple: partition does not respect the word");
    int x_blocks = 0;
    for (int b = 0; b < p.block_count(); ++b)
        if (block_color(p, word, b) == Color::X) ++x_blocks;
    if (x_blocks > n || p.block_count() - x_blocks > n)
        throw std::invalid_argument("representative_tuple: more blocks of a color than n");
    std::vector<int> alphas(static_cast<size_t>(p.ground_size()));
    int next_x = 0, next_y = 0;
    for (int b = 0; b < p.block_count(); ++b) {
        const int value = (block_color(p, word, b) == Color::X) ? ++next_x : n + ++next_y;
        for (int x : p.block(b)) alphas[static_cast<size_t>(x - 1)] = value;
    }
    return JmTuple(n, std::move(alphas));
}

CycleDecomposition cycles_from_partition(const SetPartition& p, const JmTuple& t) {
    if (!in_family(p, Family::NC12))
        throw std::invalid_argument("cycles_from_partition: partition not in NC12");
    if (!(partition_of_tuple(t) == p))
        throw std::invalid_argument("cycles_from_partition: tuple does not match partition");
    const int ground = t.ground_size();

    std::vector<std::pair<int, int>> pair_spans;  // (min, max) per pair block
    for (const auto& b : p.blocks())
        if (b.size() == 2) pair_spans.emplace_back(b.front(), b.back());

    // innermost pair block spanning s, or -1
    auto direct_owner = [&pair_spans](int s) {
        int best = -1;
        for (size_t i = 0; i < pair_spans.size(); ++i) {
            if (pair_spans[i].first < s && s < pair_spans[i].second) {
                if (best < 0 || pair_spans[i].first > pair_spans[static_cast<size_t>(best)].first)
                    best = static_cast<int>(i);
            }
        }
        return best;
    };

    std::vector<std::vector<int>> inner_of(pair_spans.size());  // singleton positions per pair
    std::vector<int> outer_singletons;
    for (const auto& b : p.blocks()) {
        if (b.size() != 1) continue;
        const int owner = direct_owner(b.front());
        if (owner < 0)
            outer_singletons.push_back(b.front());
        else
            inner_of[static_cast<size_t>(owner)].push_back(b.front());
    }

    std::vector<std::vector<int>> cycles;
    std::vector<char> placed(static_cast<size_t>(ground), 0);
    auto emit = [&](std::vector<int> cyc) {
        for (int x : cyc) placed[static_cast<size_t>(x - 1)] = 1;
        cycles.push_back(std::move(cyc));
    };

    if (!outer_singletons.empty()) {
        std::vector<int> cyc{ground};
        for (auto it = outer_singletons.rbegin(); it != outer_singletons.rend(); ++it)
            cyc.push_back(t.alpha(*it));
        emit(std::move(cyc));
    }
    for (size_t i = 0; i < pair_spans.size(); ++i) {
        if (inner_of[i].empty()) continue;
        std::vector<int> cyc{t.alpha(pair_spans[i].first)};
        for (auto it = inner_of[i].rbegin(); it != inner_of[i].rend(); ++it)
            cyc.push_back(t.alpha(*it));
        emit(std::move(cyc));
    }
    for (int x = 1; x <= ground; ++x)
        if (!placed[static_cast<size_t>(x - 1)]) cycles.push_back({x});
    return CycleDecomposition(ground, std::move(cycles));
}

LengthCriterion length_criterion(const SetPartition& p, const JmTuple& t) {
    if (!(partition_of_tuple(t) == p))
        throw std::invalid_argument("length_criterion: tuple does not match partition");
    const int m = p.ground_size();
    const int len = product_of_tuple(t).length();
    return LengthCriterion{2 * p.block_count() >= len + m, in_family(p, Family::NC12)};
}

}  // namespace freejm
