#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace freejm {

/// Bijection of {1..N}. Products compose with the rightmost factor acting
/// first: (s*t)(x) = s(t(x)).
class Permutation {
public:
    explicit Permutation(int degree);  // identity
    static Permutation from_images(std::vector<int> images);
    static Permutation from_one_line(std::string_view text);  // "2,1,3"
    static Permutation transposition(int degree, int a, int b);
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const;
    int operator()(int x) const { return apply(x); }

    Permutation inverse() const;
    bool is_identity() const;
    std::vector<int> support() const;

    /// Minimal number of transpositions: degree minus the cycle count.
    int length() const;

    /// Nontrivial cycle lengths, weakly decreasing.
    std::vector<int> cycle_type_parts() const;

    std::string one_line_str() const;

    bool operator==(const Permutation&) const = default;

    friend Permutation operator*(const Permutation& s, const Permutation& t);

private:
    std::vector<int> images_;  // 1-based images, images_[i-1] = s(i)
};

Permutation conjugate(const Permutation& s, const Permutation& g);  // g s g^-1

/// Product (a_1, g)(a_2, g)...(a_m, g) of transpositions through the
/// common point g = ground; rightmost factor acts first.
Permutation star_transposition_product(int ground, const std::vector<int>& alphas);

/// Cycle decomposition with fixed points materialized as singleton
/// cycles, so equality is structural. Canonical form: every cycle is
/// rotated to start at its minimum element and cycles are sorted by that
/// minimum. Display omits fixed points.
class CycleDecomposition {
public:
    CycleDecomposition(int degree, std::vector<std::vector<int>> cycles);
    static CycleDecomposition of(const Permutation& s);

    int degree() const { return degree_; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    std::vector<std::vector<int>> nontrivial_cycles() const;

    Permutation to_permutation() const;
    std::string str() const;  // "(1,19)(2,7,3)(4,6,5)"; identity prints "()"

    bool operator==(const CycleDecomposition&) const = default;

private:
    int degree_ = 0;
    std::vector<std::vector<int>> cycles_;
};

}  // namespace freejm
