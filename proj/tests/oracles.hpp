#pragma once

// Test-only oracles, deliberately independent of the library's own
// evaluation paths.

#include <map>
#include <queue>
#include <vector>

#include "freejm/character.hpp"
#include "freejm/moment_cumulant.hpp"
#include "freejm/permutation.hpp"
#include "freejm/rational.hpp"
#include "freejm/young_diagram.hpp"

namespace oracles {

inline long catalan(int k) {
    std::vector<long> c{1};
    for (int n = 0; n < k; ++n) {
        long next = 0;
        for (int i = 0; i <= n; ++i) next += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - i)];
        c.push_back(next);
    }
    return c[static_cast<size_t>(k)];
}

inline long bell(int k) {
    // Bell triangle
    std::vector<std::vector<long>> rows{{1}};
    for (int n = 1; n <= k; ++n) {
        std::vector<long> row{rows.back().back()};
        for (size_t i = 0; i < rows.back().size(); ++i)
            row.push_back(row.back() + rows.back()[i]);
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(k)].front();
}

inline long motzkin(int k) {
    std::vector<long> m{1};
    for (int n = 0; n < k; ++n) {
        long next = m[static_cast<size_t>(n)];
        for (int i = 0; i + 1 <= n; ++i)
            next += m[static_cast<size_t>(i)] * m[static_cast<size_t>(n - 1 - i)];
        m.push_back(next);
    }
    return m[static_cast<size_t>(k)];
}

/// Distance from the identity in the Cayley graph generated by all
/// transpositions: breadth-first search, no cycle counting involved.
inline int min_transposition_count(const freejm::Permutation& target) {
    using freejm::Permutation;
    const int n = target.degree();
    std::map<std::string, int> dist;
    std::queue<Permutation> queue;
    const Permutation id(n);
    dist[id.one_line_str()] = 0;
    queue.push(id);
    while (!queue.empty()) {
        const Permutation current = queue.front();
        queue.pop();
        const int d = dist[current.one_line_str()];
        if (current == target) return d;
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                const Permutation next = current * Permutation::transposition(n, a, b);
                auto [it, inserted] = dist.emplace(next.one_line_str(), d + 1);
                if (inserted) queue.push(next);
            }
        }
    }
    return -1;
}

/// Transition measure through addable corners: the atom at the content of
/// each addable box carries weight dim(diagram + box) / ((n+1) dim).
inline freejm::MomentSeq corner_transition_moments(const freejm::YoungDiagram& diagram, int kmax) {
    using freejm::Integer;
    using freejm::Rational;
    const auto& rows = diagram.rows();
    const int n = diagram.size();
    const int height = diagram.row_count();
    std::vector<std::pair<long, Rational>> atoms;  // (content, weight)
    for (int i = 0; i <= height; ++i) {
        const bool addable = (i == height) || (i == 0) || (rows[static_cast<size_t>(i - 1)] >
                                                           rows[static_cast<size_t>(i)]);
        if (!addable) continue;
        std::vector<int> grown = rows;
        long content;
        if (i == height) {
            grown.push_back(1);
            content = -height;
        } else {
            content = rows[static_cast<size_t>(i)] - i;
            ++grown[static_cast<size_t>(i)];
        }
        Rational weight(freejm::dimension(freejm::YoungDiagram(grown)),
                        Integer(n + 1) * freejm::dimension(diagram));
        weight.canonicalize();
        atoms.emplace_back(content, weight);
    }
    std::vector<Rational> moments;
    for (int k = 1; k <= kmax; ++k) {
        Rational total(0);
        for (const auto& [content, weight] : atoms) {
            Rational power(1);
            for (int i = 0; i < k; ++i) power *= content;
            total += weight * power;
        }
        total.canonicalize();
        moments.push_back(total);
    }
    return freejm::MomentSeq(std::move(moments));
}

}  // namespace oracles
