#include "freejm/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "freejm/character.hpp"
#include "freejm/convergence.hpp"
#include "freejm/jm_tuple.hpp"
#include "freejm/moment_cumulant.hpp"
#include "freejm/phi.hpp"
#include "freejm/rational.hpp"
#include "freejm/set_partition.hpp"

namespace freejm::verify {

namespace {

std::string tuple_str(const JmTuple& t) {
    std::string out = "(";
    for (int i = 1; i <= t.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(t.alpha(i));
    }
    out += ")";
    return out;
}

Coloring word_from_bits(int m, unsigned bits) {
    std::vector<Color> labels(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        labels[static_cast<size_t>(i)] = (bits >> i) & 1u ? Color::Y : Color::X;
    return Coloring(std::move(labels));
}

// odometer over alphas with per-position ranges; returns false when done
bool advance(std::vector<int>& alphas, const std::vector<int>& low, const std::vector<int>& high) {
    int i = static_cast<int>(alphas.size()) - 1;
    while (i >= 0 && alphas[static_cast<size_t>(i)] == high[static_cast<size_t>(i)]) {
        alphas[static_cast<size_t>(i)] = low[static_cast<size_t>(i)];
        --i;
    }
    if (i < 0) return false;
    ++alphas[static_cast<size_t>(i)];
    return true;
}

std::vector<Permutation> half_preserving_subgroup(int n) {
    // all permutations fixing {1..n}, {n+1..2n} setwise and 2n+1 pointwise
    std::vector<int> base(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i + 1;
    std::vector<std::vector<int>> halves;
    std::vector<int> perm = base;
    do {
        halves.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Permutation> out;
    out.reserve(halves.size() * halves.size());
    for (const auto& g1 : halves) {
        for (const auto& g2 : halves) {
            std::vector<int> img(static_cast<size_t>(2 * n + 1));
            for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = g1[static_cast<size_t>(i)];
            for (int i = 0; i < n; ++i)
                img[static_cast<size_t>(n + i)] = n + g2[static_cast<size_t>(i)];
            img[static_cast<size_t>(2 * n)] = 2 * n + 1;
            out.push_back(Permutation::from_images(std::move(img)));
        }
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 13) - 6;
    const long den = static_cast<long>(rng() % 6) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

CumulantSeq random_cumulants(std::mt19937_64& rng, int order, bool zero_first) {
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(order));
    for (int k = 1; k <= order; ++k)
        entries.push_back(k == 1 && zero_first ? Rational(0) : random_rational(rng));
    return CumulantSeq(std::move(entries));
}

}  // namespace

Result f_bijection(int max_m) {
    Result result;
    for (int m = 0; m <= max_m && result.ok; ++m) {
        const auto small = enumerate_partitions(m, Family::NC1Lt2);
        const auto big = enumerate_partitions(m, Family::NCGe2);
        if (small.size() != big.size()) {
            result.fail("m=" + std::to_string(m) + ": |NC1Lt2|=" + std::to_string(small.size()) +
                        " != |NCGe2|=" + std::to_string(big.size()));
            break;
        }
        std::vector<SetPartition> images;
        for (const auto& p : small) {
            const SetPartition merged = merge_inner_singletons(p);
            if (!in_family(merged, Family::NCGe2) || !(split_block_interiors(merged) == p)) {
                result.fail("m=" + std::to_string(m) + ": round trip failed at " + p.str());
                break;
            }
            images.push_back(merged);
        }
        if (!result.ok) break;
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            result.fail("m=" + std::to_string(m) + ": merge map is not injective");
            break;
        }
        for (const auto& p : big) {
            if (!(merge_inner_singletons(split_block_interiors(p)) == p)) {
                result.fail("m=" + std::to_string(m) + ": inverse round trip failed at " + p.str());
                break;
            }
        }
        result.lines.push_back("m=" + std::to_string(m) + ": |NC1Lt2|=|NCGe2|=" +
                               std::to_string(small.size()) + ", round trips ok");
    }
    return result;
}

Result tuple_conjugacy(int max_m, int max_n, bool search) {
    Result result;
    for (int n = 1; n <= max_n && result.ok; ++n) {
        std::vector<Permutation> subgroup;
        if (search) subgroup = half_preserving_subgroup(n);
        long long checked = 0;
        for (int m = 1; m <= max_m && result.ok; ++m) {
            for (unsigned bits = 0; bits < (1u << m) && result.ok; ++bits) {
                const Coloring word = word_from_bits(m, bits);
                std::vector<int> low(static_cast<size_t>(m)), high(static_cast<size_t>(m));
                for (int i = 1; i <= m; ++i) {
                    const bool is_x = word.at(i) == Color::X;
                    low[static_cast<size_t>(i - 1)] = is_x ? 1 : n + 1;
                    high[static_cast<size_t>(i - 1)] = is_x ? n : 2 * n;
                }
                std::map<SetPartition, JmTuple> reference;
                std::vector<int> alphas = low;
                do {
                    const JmTuple t(n, alphas);
                    const SetPartition p = partition_of_tuple(t);
                    auto it = reference.find(p);
                    if (it == reference.end()) {
                        reference.emplace(p, t);
                        continue;
                    }
                    const JmTuple& ref = it->second;
                    const Permutation prod_ref = product_of_tuple(ref);
                    const Permutation prod_cur = product_of_tuple(t);
                    ++checked;
                    // constructive conjugator: map the reference alphas to
                    // the current ones block by block, extend color-preservingly
                    std::vector<int> img(static_cast<size_t>(2 * n + 1), 0);
                    std::vector<char> used(static_cast<size_t>(2 * n + 1), 0);
                    for (int b = 0; b < p.block_count(); ++b) {
                        const int from = ref.alpha(p.block(b).front());
                        const int to = t.alpha(p.block(b).front());
                        img[static_cast<size_t>(from - 1)] = to;
                        used[static_cast<size_t>(to - 1)] = 1;
                    }
                    for (int half = 0; half < 2; ++half) {
                        const int base = half * n;
                        std::vector<int> free_targets;
                        for (int v = base + 1; v <= base + n; ++v)
                            if (!used[static_cast<size_t>(v - 1)]) free_targets.push_back(v);
                        size_t next = 0;
                        for (int v = base + 1; v <= base + n; ++v)
                            if (img[static_cast<size_t>(v - 1)] == 0) img[static_cast<size_t>(v - 1)] = free_targets[next++];
                    }
                    img[static_cast<size_t>(2 * n)] = 2 * n + 1;
                    const Permutation gamma = Permutation::from_images(std::move(img));
                    if (!(conjugate(prod_ref, gamma) == prod_cur)) {
                        result.fail("n=" + std::to_string(n) + " word=" + word.str() +
                                    " tuples " + tuple_str(ref) + " vs " + tuple_str(t) +
                                    ": constructed conjugator fails");
                        break;
                    }
                    if (search) {
                        bool found = false;
                        for (const Permutation& g : subgroup) {
                            if (conjugate(prod_ref, g) == prod_cur) {
                                found = true;
                                break;
                            }
                        }
                        if (!found) {
                            result.fail("n=" + std::to_string(n) + " word=" + word.str() +
                                        " tuples " + tuple_str(ref) + " vs " + tuple_str(t) +
                                        ": no conjugator in the subgroup");
                            break;
                        }
                    }
                } while (result.ok && advance(alphas, low, high));
            }
        }
        if (result.ok)
            result.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(checked) +
                                   " tuple pairs conjugate" + (search ? " (search)" : ""));
    }
    return result;
}

Result unrepeated_factor_length(int max_m, int max_n) {
    Result result;
    for (int n = 1; n <= max_n && result.ok; ++n) {
        long long checked = 0;
        for (int m = 1; m <= max_m && result.ok; ++m) {
            std::vector<int> low(static_cast<size_t>(m), 1), high(static_cast<size_t>(m), 2 * n);
            std::vector<int> alphas = low;
            do {
                for (int k = 0; k < m; ++k) {
                    bool repeated = false;
                    for (int i = 0; i < m; ++i)
                        if (i != k && alphas[static_cast<size_t>(i)] == alphas[static_cast<size_t>(k)]) {
                            repeated = true;
                            break;
                        }
                    if (repeated) continue;
                    std::vector<int> without;
                    without.reserve(static_cast<size_t>(m - 1));
                    for (int i = 0; i < m; ++i)
                        if (i != k) without.push_back(alphas[static_cast<size_t>(i)]);
                    const int with_len = star_transposition_product(2 * n + 1, alphas).length();
                    const int without_len = star_transposition_product(2 * n + 1, without).length();
                    ++checked;
                    if (with_len != without_len + 1) {
                        result.fail("n=" + std::to_string(n) + " tuple " +
                                    tuple_str(JmTuple(n, alphas)) + " position " +
                                    std::to_string(k + 1) + ": lengths " + std::to_string(with_len) +
                                    " vs " + std::to_string(without_len) + "+1");
                        break;
                    }
                }
            } while (result.ok && advance(alphas, low, high));
        }
        if (result.ok)
            result.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(checked) +
                                   " unrepeated insertions add one to the length");
    }
    return result;
}

Result pair_partition_identity(int max_m) {
    Result result;
    for (int m = 2; m <= max_m && result.ok; m += 2) {
        const int n = m / 2;
        long long pairs = 0, identities = 0;
        for_each_partition(m, Family::All, [&](const SetPartition& p) {
            if (!result.ok) return;
            for (const auto& b : p.blocks())
                if (b.size() != 2) return;
            ++pairs;
            const JmTuple t = representative_tuple(p, Coloring::uniform(m, Color::X), n);
            const bool is_identity = product_of_tuple(t).is_identity();
            const bool noncrossing = in_family(p, Family::NC2);
            if (is_identity != noncrossing)
                result.fail("m=" + std::to_string(m) + " " + p.str() + ": identity=" +
                            (is_identity ? "yes" : "no") + " noncrossing=" +
                            (noncrossing ? "yes" : "no"));
            if (is_identity) ++identities;
        });
        if (result.ok)
            result.lines.push_back("m=" + std::to_string(m) + ": " + std::to_string(pairs) +
                                   " pair partitions, " + std::to_string(identities) +
                                   " identity products = |NC2|");
    }
    return result;
}

Result length_criterion_suite(int max_m, int n) {
    Result result;
    for (int m = 1; m <= max_m && result.ok; ++m) {
        long long total = 0, in_family_count = 0;
        for_each_partition(m, Family::All, [&](const SetPartition& p) {
            if (!result.ok) return;
            if (p.block_count() > 2 * n) return;  // no tuple over {1..2n} induces p
            std::vector<int> alphas(static_cast<size_t>(m));
            for (int b = 0; b < p.block_count(); ++b)
                for (int x : p.block(b)) alphas[static_cast<size_t>(x - 1)] = b + 1;
            const LengthCriterion check = length_criterion(p, JmTuple(n, alphas));
            ++total;
            if (check.inequality != check.in_nc12)
                result.fail("m=" + std::to_string(m) + " " + p.str() + ": inequality=" +
                            (check.inequality ? "yes" : "no") + " nc12=" +
                            (check.in_nc12 ? "yes" : "no"));
            if (check.in_nc12) ++in_family_count;
        });
        if (result.ok)
            result.lines.push_back("m=" + std::to_string(m) + ": " + std::to_string(total) +
                                   " partitions, equivalence holds (" +
                                   std::to_string(in_family_count) + " in NC12)");
    }
    return result;
}

Result cycle_reading(int max_m) {
    Result result;
    for (int m = 1; m <= max_m && result.ok; ++m) {
        const int n = m;  // plenty of alpha room: at most m blocks
        long long count = 0;
        for_each_partition(m, Family::NC12, [&](const SetPartition& p) {
            if (!result.ok) return;
            std::vector<int> alphas(static_cast<size_t>(m));
            for (int b = 0; b < p.block_count(); ++b)
                for (int x : p.block(b)) alphas[static_cast<size_t>(x - 1)] = b + 1;
            const JmTuple t(n, alphas);
            ++count;
            if (!(cycles_from_partition(p, t) == CycleDecomposition::of(product_of_tuple(t))))
                result.fail("m=" + std::to_string(m) + " " + p.str() +
                            ": block cycle reading disagrees with the product");
        });
        if (result.ok)
            result.lines.push_back("m=" + std::to_string(m) + ": " + std::to_string(count) +
                                   " NC12 partitions read correctly");
    }
    return result;
}

Result tuple_count_formula(int max_m, int max_n) {
    Result result;
    for (int n = 1; n <= max_n && result.ok; ++n) {
        long long checked = 0;
        for (int m = 1; m <= max_m && result.ok; ++m) {
            for (unsigned bits = 0; bits < (1u << m) && result.ok; ++bits) {
                const Coloring word = word_from_bits(m, bits);
                std::map<SetPartition, long long> counts;
                std::vector<int> low(static_cast<size_t>(m)), high(static_cast<size_t>(m));
                for (int i = 1; i <= m; ++i) {
                    const bool is_x = word.at(i) == Color::X;
                    low[static_cast<size_t>(i - 1)] = is_x ? 1 : n + 1;
                    high[static_cast<size_t>(i - 1)] = is_x ? n : 2 * n;
                }
                std::vector<int> alphas = low;
                do {
                    ++counts[partition_of_tuple(JmTuple(n, alphas))];
                } while (advance(alphas, low, high));
                for_each_partition(m, Family::All, word, [&](const SetPartition& p) {
                    if (!result.ok) return;
                    auto it = counts.find(p);
                    const Integer actual(static_cast<long>(it == counts.end() ? 0 : it->second));
                    const Integer expected = count_matching_tuples(p, word, n);
                    ++checked;
                    if (actual != expected)
                        result.fail("n=" + std::to_string(n) + " word=" + word.str() + " " +
                                    p.str() + ": " + actual.get_str() + " tuples vs formula " +
                                    expected.get_str());
                });
            }
        }
        if (result.ok)
            result.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(checked) +
                                   " partition counts match (n)_k (n)_l");
    }
    return result;
}

Result grouping(int max_word_len) {
    Result result;
    const std::vector<PhiContext> contexts = {
        PhiContext(1, YoungDiagram({1}), YoungDiagram({1})),
        PhiContext(2, YoungDiagram({2}), YoungDiagram({1, 1})),
        PhiContext(3, YoungDiagram({2, 1}), YoungDiagram({3})),
    };
    for (const auto& ctx : contexts) {
        long long words = 0;
        for (int m = 1; m <= max_word_len && result.ok; ++m) {
            for (unsigned bits = 0; bits < (1u << m) && result.ok; ++bits) {
                const Coloring word = word_from_bits(m, bits);
                const ScaledValue naive = phi_word_naive(ctx, word);
                const ScaledValue grouped = phi_word_grouped(ctx, word);
                ++words;
                if (!(naive == grouped))
                    result.fail("n=" + std::to_string(ctx.n) + " lambda1=" + ctx.lambda1.str() +
                                " lambda2=" + ctx.lambda2.str() + " word=" + word.str() +
                                ": naive " + naive.str() + " != grouped " + grouped.str());
            }
        }
        if (!result.ok) break;
        result.lines.push_back("n=" + std::to_string(ctx.n) + " (" + ctx.lambda1.str() + ")x(" +
                               ctx.lambda2.str() + "): naive = grouped on " +
                               std::to_string(words) + " words");
    }
    return result;
}

Result mc_roundtrip(int count, int order, unsigned seed) {
    Result result;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < count && result.ok; ++trial) {
        const CumulantSeq cumulants = random_cumulants(rng, order, false);
        for (Transform mode : {Transform::Free, Transform::Classical}) {
            const MomentSeq moments = moments_from_cumulants(cumulants, order, mode);
            if (!(cumulants_from_moments(moments, order, mode) == cumulants)) {
                result.fail("trial " + std::to_string(trial) + ": cumulant round trip failed");
                break;
            }
            if (!(moments_from_cumulants(cumulants_from_moments(moments, order, mode), order,
                                         mode) == moments)) {
                result.fail("trial " + std::to_string(trial) + ": moment round trip failed");
                break;
            }
        }
    }
    if (result.ok) {
        std::vector<Rational> std_entries(8, Rational(0));
        std_entries[1] = 1;  // variance one, everything else zero
        const CumulantSeq standardized(std_entries);
        const Rational m4_free = moments_from_cumulants(standardized, 4, Transform::Free).at(4);
        const Rational m4_classical =
            moments_from_cumulants(standardized, 4, Transform::Classical).at(4);
        if (m4_free != 2 || m4_classical != 3)
            result.fail("standardized m4: free " + rational_str(m4_free) + " classical " +
                        rational_str(m4_classical) + ", expected 2 and 3");
        else
            result.lines.push_back(std::to_string(count) + " round trips at order " +
                                   std::to_string(order) + " exact; standardized m4 = 2 vs 3");
    }
    return result;
}

Result colored_moment_identities(int max_order, unsigned seed) {
    Result result;
    std::mt19937_64 rng(seed);
    const int trials = 12;
    long long identities = 0;
    for (int trial = 0; trial < trials && result.ok; ++trial) {
        const bool zero_first = trial % 2 == 0;
        const TwoColorSpec spec{random_cumulants(rng, max_order, zero_first),
                                random_cumulants(rng, max_order, zero_first)};
        const CumulantSeq convolved = free_convolve(spec.x, spec.y);
        const MomentSeq sum_moments = moments_from_cumulants(convolved, max_order, Transform::Free);
        for (int k = 1; k <= max_order && result.ok; ++k) {
            Rational total(0);
            for (unsigned bits = 0; bits < (1u << k); ++bits) {
                const Coloring word = word_from_bits(k, bits);
                const Rational mixed = mixed_moment_free_pair(word, spec);
                total += mixed;
                if (zero_first) {
                    // singleton blocks vanish: restriction to blocks >= 2
                    const Rational restricted = limit_moment(word, spec);
                    if (mixed != restricted) {
                        result.fail("trial " + std::to_string(trial) + " word " + word.str() +
                                    ": mixed " + rational_str(mixed) + " != restricted " +
                                    rational_str(restricted));
                        break;
                    }
                }
                ++identities;
            }
            if (result.ok && total != sum_moments.at(k))
                result.fail("trial " + std::to_string(trial) + " order " + std::to_string(k) +
                            ": coloring sum " + rational_str(total) + " != convolution moment " +
                            rational_str(sum_moments.at(k)));
        }
    }
    if (result.ok)
        result.lines.push_back(std::to_string(trials) + " random specs, " +
                               std::to_string(identities) +
                               " colored identities exact up to order " +
                               std::to_string(max_order));
    return result;
}

}  // namespace freejm::verify
