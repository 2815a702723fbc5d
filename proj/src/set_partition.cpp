#include "freejm/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace freejm {

Coloring Coloring::parse(std::string_view word) {
    std::vector<Color> labels;
    labels.reserve(word.size());
    for (char c : word) {
        switch (c) {
            case 'X': case 'x': labels.push_back(Color::X); break;
            case 'Y': case 'y': labels.push_back(Color::Y); break;
            default:
                throw std::invalid_argument("Coloring::parse: letters must be X or Y");
        }
    }
    return Coloring(std::move(labels));
}

Coloring Coloring::uniform(int m, Color c) {
    if (m < 0) throw std::invalid_argument("Coloring::uniform: negative length");
    return Coloring(std::vector<Color>(static_cast<size_t>(m), c));
}

Color Coloring::at(int pos) const {
    if (pos < 1 || pos > size()) throw std::out_of_range("Coloring::at: position out of range");
    return labels_[static_cast<size_t>(pos - 1)];
}

int Coloring::count(Color c) const {
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), c));
}

std::string Coloring::str() const {
    std::string out;
    out.reserve(labels_.size());
    for (Color c : labels_) out += color_char(c);
    return out;
}

SetPartition::SetPartition(int m, std::vector<std::vector<int>> blocks) : m_(m) {
    if (m < 0) throw std::invalid_argument("SetPartition: negative ground size");
    std::vector<int> seen(static_cast<size_t>(m), 0);
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > m) throw std::invalid_argument("SetPartition: element out of range");
            if (seen[static_cast<size_t>(x - 1)]++)
                throw std::invalid_argument("SetPartition: repeated element");
        }
    }
    for (int s : seen)
        if (!s) throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
    block_of_.assign(static_cast<size_t>(m), -1);
    for (int i = 0; i < block_count(); ++i)
        for (int x : blocks_[static_cast<size_t>(i)]) block_of_[static_cast<size_t>(x - 1)] = i;
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    SetPartition p;
    const int m = static_cast<int>(rgs.size());
    p.m_ = m;
    int top = -1;
    p.block_of_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int label = rgs[static_cast<size_t>(i)];
        if (label < 0 || label > top + 1)
            throw std::invalid_argument("SetPartition::from_rgs: not a restricted growth string");
        if (label == top + 1) {
            ++top;
            p.blocks_.emplace_back();
        }
        p.blocks_[static_cast<size_t>(label)].push_back(i + 1);
        p.block_of_[static_cast<size_t>(i)] = label;
    }
    return p;
}

SetPartition SetPartition::singletons(int m) {
    return from_rgs([m] {
        std::vector<int> rgs(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) rgs[static_cast<size_t>(i)] = i;
        return rgs;
    }());
}

SetPartition SetPartition::parse(std::string_view text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("SetPartition::parse: expected '" + std::string(1, c) + "'");
        ++pos;
    };
    auto peek = [&](char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    };
    auto number = [&] {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("SetPartition::parse: expected number");
        return std::stoi(std::string(text.substr(start, pos - start)));
    };

    expect('[');
    std::vector<std::vector<int>> blocks;
    int total = 0;
    if (!peek(']')) {
        do {
            expect('[');
            std::vector<int> block;
            if (!peek(']')) {
                do {
                    block.push_back(number());
                } while (peek(',') && (expect(','), true));
            }
            expect(']');
            total += static_cast<int>(block.size());
            blocks.push_back(std::move(block));
        } while (peek(',') && (expect(','), true));
    }
    expect(']');
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("SetPartition::parse: trailing input");
    return SetPartition(total, std::move(blocks));
}

int SetPartition::block_index_of(int element) const {
    if (element < 1 || element > m_)
        throw std::out_of_range("SetPartition::block_index_of: element out of range");
    return block_of_[static_cast<size_t>(element - 1)];
}

int SetPartition::block_size_of(int element) const {
    return static_cast<int>(blocks_[static_cast<size_t>(block_index_of(element))].size());
}

std::string SetPartition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(blocks_[i][j]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

std::optional<Family> family_from_token(std::string_view token) {
    if (token == "all") return Family::All;
    if (token == "nc") return Family::NC;
    if (token == "nc2") return Family::NC2;
    if (token == "nc12") return Family::NC12;
    if (token == "nc1lt2") return Family::NC1Lt2;
    if (token == "ncge2") return Family::NCGe2;
    return std::nullopt;
}

std::string_view family_token(Family f) {
    switch (f) {
        case Family::All: return "all";
        case Family::NC: return "nc";
        case Family::NC2: return "nc2";
        case Family::NC12: return "nc12";
        case Family::NC1Lt2: return "nc1lt2";
        case Family::NCGe2: return "ncge2";
    }
    return "?";
}

bool is_noncrossing(const SetPartition& p) {
    // Scan with a stack of open blocks: at every element other than its
    // block's first, the block must be on top of the stack.
    const int m = p.ground_size();
    std::vector<int> stack;
    stack.reserve(static_cast<size_t>(m));
    for (int x = 1; x <= m; ++x) {
        const int b = p.block_index_of(x);
        const auto& blk = p.block(b);
        if (blk.front() == x) {
            stack.push_back(b);
        } else if (stack.empty() || stack.back() != b) {
            return false;
        }
        if (blk.back() == x) stack.pop_back();
    }
    return true;
}

namespace {

bool every_singleton_nested(const SetPartition& p) {
    for (const auto& b : p.blocks()) {
        if (b.size() != 1) continue;
        const int s = b.front();
        bool nested = false;
        for (const auto& outer : p.blocks()) {
            if (outer.size() == 2 && outer.front() < s && s < outer.back()) {
                nested = true;
                break;
            }
        }
        if (!nested) return false;
    }
    return true;
}

}  // namespace

bool in_family(const SetPartition& p, Family f) {
    switch (f) {
        case Family::All:
            return true;
        case Family::NC:
            return is_noncrossing(p);
        case Family::NC2:
            for (const auto& b : p.blocks())
                if (b.size() != 2) return false;
            return is_noncrossing(p);
        case Family::NC12:
            for (const auto& b : p.blocks())
                if (b.size() > 2) return false;
            return is_noncrossing(p);
        case Family::NC1Lt2:
            return in_family(p, Family::NC12) && every_singleton_nested(p);
        case Family::NCGe2:
            for (const auto& b : p.blocks())
                if (b.size() < 2) return false;
            return is_noncrossing(p);
    }
    return false;
}

namespace {

// b nested strictly inside outer's span
bool spans(const std::vector<int>& outer, const std::vector<int>& b) {
    return outer.front() < b.front() && b.back() < outer.back();
}

}  // namespace

InnerRelation inner_relation_by_index(const SetPartition& p, int inner, int outer) {
    if (inner < 0 || inner >= p.block_count() || outer < 0 || outer >= p.block_count())
        throw std::invalid_argument("inner_relation: no such block");
    if (inner == outer) throw std::invalid_argument("inner_relation: blocks must be distinct");
    const auto& b = p.block(inner);
    const auto& outer_blk = p.block(outer);
    if (!spans(outer_blk, b)) return InnerRelation::NotInner;
    for (int mid = 0; mid < p.block_count(); ++mid) {
        if (mid == inner || mid == outer) continue;
        const auto& between = p.block(mid);
        if (spans(outer_blk, between) && spans(between, b)) return InnerRelation::IndirectInner;
    }
    return InnerRelation::DirectInner;
}

InnerRelation inner_relation(const SetPartition& p, const std::vector<int>& inner,
                             const std::vector<int>& outer) {
    auto find = [&p](const std::vector<int>& blk) {
        std::vector<int> sorted = blk;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < p.block_count(); ++i)
            if (p.block(i) == sorted) return i;
        throw std::invalid_argument("inner_relation: not a block of the partition");
    };
    return inner_relation_by_index(p, find(inner), find(outer));
}

bool respects_coloring(const SetPartition& p, const Coloring& coloring) {
    if (coloring.size() != p.ground_size())
        throw std::invalid_argument("respects_coloring: size mismatch");
    for (const auto& b : p.blocks()) {
        const Color c = coloring.at(b.front());
        for (int x : b)
            if (coloring.at(x) != c) return false;
    }
    return true;
}

Color block_color(const SetPartition& p, const Coloring& coloring, int block_index) {
    return coloring.at(p.block(block_index).front());
}

SetPartition merge_inner_singletons(const SetPartition& p) {
    if (!in_family(p, Family::NC1Lt2))
        throw std::invalid_argument("merge_inner_singletons: partition not in NC1Lt2");
    std::vector<std::vector<int>> merged;
    std::vector<int> owner_of;  // pair-block position -> index into merged
    std::vector<std::pair<int, int>> pair_spans;
    for (const auto& b : p.blocks()) {
        if (b.size() == 2) {
            pair_spans.emplace_back(b.front(), b.back());
            merged.push_back(b);
        }
    }
    for (const auto& b : p.blocks()) {
        if (b.size() != 1) continue;
        const int s = b.front();
        // direct inner: the innermost pair block spanning s
        int best = -1;
        for (size_t i = 0; i < pair_spans.size(); ++i) {
            if (pair_spans[i].first < s && s < pair_spans[i].second) {
                if (best < 0 || pair_spans[i].first > pair_spans[static_cast<size_t>(best)].first)
                    best = static_cast<int>(i);
            }
        }
        merged[static_cast<size_t>(best)].push_back(s);
    }
    return SetPartition(p.ground_size(), std::move(merged));
}

SetPartition split_block_interiors(const SetPartition& p) {
    if (!in_family(p, Family::NCGe2))
        throw std::invalid_argument("split_block_interiors: partition not in NCGe2");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        blocks.push_back({b.front(), b.back()});
        for (size_t i = 1; i + 1 < b.size(); ++i) blocks.push_back({b[i]});
    }
    return SetPartition(p.ground_size(), std::move(blocks));
}

void for_each_partition(int m, Family f, const std::function<void(const SetPartition&)>& visit) {
    for_each_partition(m, f, std::nullopt, visit);
}

void for_each_partition(int m, Family f, const std::optional<Coloring>& coloring,
                        const std::function<void(const SetPartition&)>& visit) {
    if (m < 0) throw std::invalid_argument("for_each_partition: negative ground size");
    if (coloring && coloring->size() != m)
        throw std::invalid_argument("for_each_partition: coloring size mismatch");
    if (m == 0) {
        visit(SetPartition());
        return;
    }
    std::vector<int> rgs(static_cast<size_t>(m), 0);
    for (;;) {
        SetPartition p = SetPartition::from_rgs(rgs);
        if (in_family(p, f) && (!coloring || respects_coloring(p, *coloring))) visit(p);
        int i = m - 1;
        for (; i >= 1; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<size_t>(j)]);
            if (rgs[static_cast<size_t>(i)] <= prefix_max) {
                ++rgs[static_cast<size_t>(i)];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) return;
    }
}

std::vector<SetPartition> enumerate_partitions(int m, Family f,
                                               const std::optional<Coloring>& coloring) {
    std::vector<SetPartition> out;
    for_each_partition(m, f, coloring, [&out](const SetPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace freejm
