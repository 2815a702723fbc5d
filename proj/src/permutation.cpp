#include "freejm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace freejm {

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
    images_.resize(static_cast<size_t>(degree));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]++)
            throw std::invalid_argument("Permutation::from_images: not a bijection");
    }
    Permutation p(0);
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_one_line(std::string_view text) {
    std::vector<int> images;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        images.push_back(std::stoi(std::string(text.substr(pos, next - pos))));
        pos = next + 1;
    }
    return from_images(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    if (a < 1 || a > degree || b < 1 || b > degree || a == b)
        throw std::invalid_argument("Permutation::transposition: bad points");
    Permutation p(degree);
    std::swap(p.images_[static_cast<size_t>(a - 1)], p.images_[static_cast<size_t>(b - 1)]);
    return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<char> used(static_cast<size_t>(degree), 0);
    for (const auto& cyc : cycles) {
        for (int x : cyc) {
            if (x < 1 || x > degree || used[static_cast<size_t>(x - 1)]++)
                throw std::invalid_argument("Permutation::from_cycles: bad cycle");
        }
        for (size_t i = 0; i < cyc.size(); ++i)
            p.images_[static_cast<size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
    }
    return p;
}

int Permutation::apply(int x) const {
    if (x < 1 || x > degree()) throw std::out_of_range("Permutation::apply: out of range");
    return images_[static_cast<size_t>(x - 1)];
}

Permutation Permutation::inverse() const {
    Permutation p(degree());
    for (int i = 1; i <= degree(); ++i) p.images_[static_cast<size_t>(apply(i) - 1)] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::vector<int> Permutation::support() const {
    std::vector<int> out;
    for (int i = 1; i <= degree(); ++i)
        if (apply(i) != i) out.push_back(i);
    return out;
}

int Permutation::length() const {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i - 1)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<size_t>(j - 1)]; j = apply(j))
            seen[static_cast<size_t>(j - 1)] = 1;
    }
    return n - cycles;
}

std::vector<int> Permutation::cycle_type_parts() const {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i - 1)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j - 1)]; j = apply(j)) {
            seen[static_cast<size_t>(j - 1)] = 1;
            ++len;
        }
        if (len >= 2) parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::string Permutation::one_line_str() const {
    std::string out;
    for (int i = 1; i <= degree(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(apply(i));
    }
    return out;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree())
        throw std::invalid_argument("Permutation product: degree mismatch");
    Permutation out(s.degree());
    for (int i = 1; i <= s.degree(); ++i)
        out.images_[static_cast<size_t>(i - 1)] = s.apply(t.apply(i));
    return out;
}

Permutation conjugate(const Permutation& s, const Permutation& g) {
    return g * s * g.inverse();
}

Permutation star_transposition_product(int ground, const std::vector<int>& alphas) {
    if (ground < 1) throw std::invalid_argument("star_transposition_product: bad ground");
    std::vector<int> img(static_cast<size_t>(ground)), inv(static_cast<size_t>(ground));
    std::iota(img.begin(), img.end(), 1);
    std::iota(inv.begin(), inv.end(), 1);
    // left-multiply by (a, ground), rightmost factor first
    for (auto it = alphas.rbegin(); it != alphas.rend(); ++it) {
        const int a = *it;
        if (a < 1 || a >= ground)
            throw std::invalid_argument("star_transposition_product: alpha out of range");
        const int xa = inv[static_cast<size_t>(a - 1)];
        const int xb = inv[static_cast<size_t>(ground - 1)];
        img[static_cast<size_t>(xa - 1)] = ground;
        img[static_cast<size_t>(xb - 1)] = a;
        inv[static_cast<size_t>(a - 1)] = xb;
        inv[static_cast<size_t>(ground - 1)] = xa;
    }
    return Permutation::from_images(std::move(img));
}

CycleDecomposition::CycleDecomposition(int degree, std::vector<std::vector<int>> cycles)
    : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("CycleDecomposition: negative degree");
    std::vector<char> seen(static_cast<size_t>(degree), 0);
    for (auto& cyc : cycles) {
        if (cyc.empty()) throw std::invalid_argument("CycleDecomposition: empty cycle");
        for (int x : cyc) {
            if (x < 1 || x > degree || seen[static_cast<size_t>(x - 1)]++)
                throw std::invalid_argument("CycleDecomposition: cycles must partition {1..N}");
        }
        auto min_it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), min_it, cyc.end());
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("CycleDecomposition: cycles must cover {1..N}");
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    cycles_ = std::move(cycles);
}

CycleDecomposition CycleDecomposition::of(const Permutation& s) {
    const int n = s.degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i - 1)]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[static_cast<size_t>(j - 1)]; j = s.apply(j)) {
            seen[static_cast<size_t>(j - 1)] = 1;
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
    }
    return CycleDecomposition(n, std::move(cycles));
}

std::vector<std::vector<int>> CycleDecomposition::nontrivial_cycles() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : cycles_)
        if (c.size() >= 2) out.push_back(c);
    return out;
}

Permutation CycleDecomposition::to_permutation() const {
    return Permutation::from_cycles(degree_, cycles_);
}

std::string CycleDecomposition::str() const {
    std::string out;
    for (const auto& c : cycles_) {
        if (c.size() < 2) continue;
        out += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace freejm
