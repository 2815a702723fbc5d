#include "freejm/moment_cumulant.hpp"

#include <stdexcept>

namespace freejm {

const Rational& MomentSeq::at(int k) const {
    if (k < 1 || k > order()) throw std::out_of_range("MomentSeq::at: order insufficient");
    return entries_[static_cast<size_t>(k - 1)];
}

const Rational& CumulantSeq::at(int k) const {
    if (k < 1 || k > order()) throw std::out_of_range("CumulantSeq::at: order insufficient");
    return entries_[static_cast<size_t>(k - 1)];
}

namespace {

Family transform_family(Transform mode) {
    return mode == Transform::Free ? Family::NC : Family::All;
}

Rational partition_weight(const SetPartition& p, const std::vector<Rational>& c) {
    Rational prod(1);
    for (const auto& b : p.blocks()) prod *= c[b.size() - 1];
    prod.canonicalize();
    return prod;
}

}  // namespace

MomentSeq moments_from_cumulants(const CumulantSeq& cumulants, int order, Transform mode) {
    if (order < 0) throw std::invalid_argument("moments_from_cumulants: negative order");
    if (cumulants.order() < order)
        throw std::invalid_argument("moments_from_cumulants: truncation order insufficient");
    std::vector<Rational> moments;
    moments.reserve(static_cast<size_t>(order));
    for (int k = 1; k <= order; ++k) {
        Rational total(0);
        for_each_partition(k, transform_family(mode), [&](const SetPartition& p) {
            total += partition_weight(p, cumulants.entries());
        });
        total.canonicalize();
        moments.push_back(total);
    }
    return MomentSeq(std::move(moments));
}

CumulantSeq cumulants_from_moments(const MomentSeq& moments, int order, Transform mode) {
    if (order < 0) throw std::invalid_argument("cumulants_from_moments: negative order");
    if (moments.order() < order)
        throw std::invalid_argument("cumulants_from_moments: truncation order insufficient");
    std::vector<Rational> cumulants;
    cumulants.reserve(static_cast<size_t>(order));
    for (int k = 1; k <= order; ++k) {
        // C_k = m_k - sum over partitions with >= 2 blocks; those only use
        // cumulants of order < k, already computed.
        Rational lower(0);
        for_each_partition(k, transform_family(mode), [&](const SetPartition& p) {
            if (p.block_count() >= 2) lower += partition_weight(p, cumulants);
        });
        Rational ck = moments.at(k) - lower;
        ck.canonicalize();
        cumulants.push_back(ck);
    }
    return CumulantSeq(std::move(cumulants));
}

Rational block_cumulant_product(const SetPartition& p, const Coloring& word,
                                const TwoColorSpec& spec) {
    if (!respects_coloring(p, word))
        throw std::invalid_argument("block_cumulant_product: partition does not respect the word");
    Rational prod(1);
    for (int b = 0; b < p.block_count(); ++b)
        prod *= spec.of(block_color(p, word, b)).at(static_cast<int>(p.block(b).size()));
    prod.canonicalize();
    return prod;
}

Rational mixed_moment_free_pair(const Coloring& word, const TwoColorSpec& spec) {
    if (spec.min_order() < word.size())
        throw std::invalid_argument("mixed_moment_free_pair: truncation order insufficient");
    Rational total(0);
    for_each_partition(word.size(), Family::NC, word, [&](const SetPartition& p) {
        total += block_cumulant_product(p, word, spec);
    });
    total.canonicalize();
    return total;
}

CumulantSeq free_convolve(const CumulantSeq& a, const CumulantSeq& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("free_convolve: truncation order mismatch");
    std::vector<Rational> sum;
    sum.reserve(static_cast<size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k) {
        Rational s = a.at(k) + b.at(k);
        s.canonicalize();
        sum.push_back(s);
    }
    return CumulantSeq(std::move(sum));
}

}  // namespace freejm
