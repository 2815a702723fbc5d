#include "freejm/young_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace freejm {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw std::invalid_argument("YoungDiagram: rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
    }
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
    std::vector<int> rows;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        rows.push_back(std::stoi(std::string(text.substr(pos, next - pos))));
        pos = next + 1;
    }
    return YoungDiagram(std::move(rows));
}

std::vector<int> YoungDiagram::column_lengths() const {
    std::vector<int> cols(rows_.empty() ? 0 : static_cast<size_t>(rows_.front()), 0);
    for (int r : rows_)
        for (int j = 0; j < r; ++j) ++cols[static_cast<size_t>(j)];
    return cols;
}

std::string YoungDiagram::str() const {
    std::string out;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    return out;
}

namespace {

void diagrams_rec(int remaining, int cap, std::vector<int>& acc,
                  std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int first = std::min(remaining, cap); first >= 1; --first) {
        acc.push_back(first);
        diagrams_rec(remaining - first, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> all_diagrams(int n) {
    if (n < 0) throw std::invalid_argument("all_diagrams: negative size");
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    diagrams_rec(n, n, acc, out);
    return out;
}

CycleType::CycleType(int degree, std::vector<int> parts)
    : degree_(degree), parts_(std::move(parts)) {
    if (degree < 0) throw std::invalid_argument("CycleType: negative degree");
    int sum = 0;
    for (int p : parts_) {
        if (p < 2) throw std::invalid_argument("CycleType: parts must be >= 2");
        sum += p;
    }
    if (sum > degree) throw std::invalid_argument("CycleType: parts exceed the degree");
    std::sort(parts_.rbegin(), parts_.rend());
}

CycleType CycleType::single_cycle(int degree, int length) {
    return CycleType(degree, {length});
}

CycleType CycleType::of(const Permutation& s) {
    return CycleType(s.degree(), s.cycle_type_parts());
}

CycleType CycleType::parse(std::string_view text) {
    size_t colon = text.find(':');
    const int degree = std::stoi(std::string(text.substr(0, colon)));
    std::vector<int> parts;
    if (colon != std::string_view::npos) {
        size_t pos = colon + 1;
        while (pos < text.size()) {
            size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            parts.push_back(std::stoi(std::string(text.substr(pos, next - pos))));
            pos = next + 1;
        }
    }
    return CycleType(degree, std::move(parts));
}

std::vector<int> CycleType::parts_with_fixed_points() const {
    std::vector<int> full = parts_;
    const int moved = std::accumulate(parts_.begin(), parts_.end(), 0);
    full.insert(full.end(), static_cast<size_t>(degree_ - moved), 1);
    return full;
}

int CycleType::length() const {
    int len = 0;
    for (int p : parts_) len += p - 1;
    return len;
}

std::string CycleType::str() const {
    std::string out = std::to_string(degree_) + ":";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

}  // namespace freejm
