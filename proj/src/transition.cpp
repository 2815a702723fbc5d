#include "freejm/transition.hpp"

#include "freejm/character.hpp"
#include "freejm/permutation.hpp"

namespace freejm {

MomentSeq transition_moments(const YoungDiagram& diagram, int kmax, const Budget& budget) {
    if (kmax < 0) throw std::invalid_argument("transition_moments: negative order");
    const int n = diagram.size();
    const int ground = n + 1;
    std::vector<Rational> moments;
    moments.reserve(static_cast<size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        Rational total(0);
        long long visited = 0;  // each moment is one grouped sum
        for_each_partition(k, Family::All, [&](const SetPartition& p) {
            if (++visited > budget.max_partitions)
                throw BudgetError("transition_moments: partition budget exceeded at " +
                                  std::to_string(budget.max_partitions));
            if (p.block_count() > n) return;  // weight (n)_|p| vanishes
            std::vector<int> alphas(static_cast<size_t>(k));
            for (int b = 0; b < p.block_count(); ++b)
                for (int x : p.block(b)) alphas[static_cast<size_t>(x - 1)] = b + 1;
            const Permutation s = star_transposition_product(ground, alphas);
            if (s.apply(ground) != ground) return;
            std::vector<int> restricted(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i) restricted[static_cast<size_t>(i - 1)] = s.apply(i);
            const Rational tr = normalized_character(
                diagram, CycleType::of(Permutation::from_images(restricted)));
            total += Rational(descending_factorial(n, p.block_count())) * tr;
        });
        total.canonicalize();
        moments.push_back(total);
    }
    return MomentSeq(std::move(moments));
}

CumulantSeq transition_cumulants(const YoungDiagram& diagram, int kmax, const Budget& budget) {
    return cumulants_from_moments(transition_moments(diagram, kmax, budget), kmax,
                                  Transform::Free);
}

}  // namespace freejm
