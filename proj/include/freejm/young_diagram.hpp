#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "freejm/permutation.hpp"

namespace freejm {

/// Weakly decreasing positive row lengths; the empty diagram is allowed.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);
    static YoungDiagram parse(std::string_view text);  // "3,2,1"

    int size() const { return size_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    std::vector<int> column_lengths() const;

    std::string str() const;

    bool operator==(const YoungDiagram& rhs) const { return rows_ == rhs.rows_; }
    bool operator<(const YoungDiagram& rhs) const { return rows_ < rhs.rows_; }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

/// Every diagram with n boxes, in a fixed deterministic order.
std::vector<YoungDiagram> all_diagrams(int n);

/// Conjugacy class of a symmetric group of the given degree: cycle
/// lengths >= 2, fixed points implied.
class CycleType {
public:
    explicit CycleType(int degree, std::vector<int> parts = {});
    static CycleType identity(int degree) { return CycleType(degree); }
    static CycleType single_cycle(int degree, int length);
    static CycleType of(const Permutation& s);
    static CycleType parse(std::string_view text);  // "N:3,2"; "N:" or "N" is the identity

    int degree() const { return degree_; }
    const std::vector<int>& parts() const { return parts_; }  // weakly decreasing
    std::vector<int> parts_with_fixed_points() const;

    /// Minimal transposition count of any member: sum of (part - 1).
    int length() const;

    std::string str() const;

    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& rhs) const {
        if (degree_ != rhs.degree_) return degree_ < rhs.degree_;
        return parts_ < rhs.parts_;
    }

private:
    int degree_ = 0;
    std::vector<int> parts_;
};

}  // namespace freejm
