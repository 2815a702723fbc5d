#include "freejm/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace freejm {

Integer dimension(const YoungDiagram& diagram) {
    const auto& rows = diagram.rows();
    const auto cols = diagram.column_lengths();
    Integer hooks = 1;
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j)
            hooks *= (rows[i] - j) + (cols[static_cast<size_t>(j)] - static_cast<int>(i)) - 1;
    Integer fact = 1;
    for (int k = 2; k <= diagram.size(); ++k) fact *= k;
    return fact / hooks;
}

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

std::map<MemoKey, Integer>& memo_table() {
    static std::map<MemoKey, Integer> table;
    return table;
}

std::mutex& memo_mutex() {
    static std::mutex mu;
    return mu;
}

// rows and parts weakly decreasing, parts a full partition of |rows|
// (fixed points included as 1s)
Integer mn_recursive(const std::vector<int>& rows, const std::vector<int>& parts) {
    if (rows.empty()) return 1;
    const MemoKey key{rows, parts};
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo_table().find(key);
        if (it != memo_table().end()) return it->second;
    }
    const int strip = parts.front();
    const std::vector<int> rest(parts.begin() + 1, parts.end());
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> beta(static_cast<size_t>(nrows));
    for (int i = 0; i < nrows; ++i)
        beta[static_cast<size_t>(i)] = rows[static_cast<size_t>(i)] + (nrows - 1 - i);
    Integer total = 0;
    for (int i = 0; i < nrows; ++i) {
        const int b = beta[static_cast<size_t>(i)];
        if (b < strip) continue;
        const int target = b - strip;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossings = 0;
        for (int bp : beta)
            if (target < bp && bp < b) ++crossings;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = target;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nrows_vec;
        const int len = static_cast<int>(nbeta.size());
        for (int j = 0; j < len; ++j) {
            const int row = nbeta[static_cast<size_t>(j)] - (len - 1 - j);
            if (row > 0) nrows_vec.push_back(row);
        }
        const Integer sub = mn_recursive(nrows_vec, rest);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        memo_table().emplace(key, total);
    }
    return total;
}

}  // namespace

Integer character_value(const YoungDiagram& diagram, const CycleType& type) {
    if (type.degree() != diagram.size())
        throw std::invalid_argument("character_value: degree does not match diagram size");
    return mn_recursive(diagram.rows(), type.parts_with_fixed_points());
}

Rational normalized_character(const YoungDiagram& diagram, const CycleType& type) {
    Rational out(character_value(diagram, type), dimension(diagram));
    out.canonicalize();
    return out;
}

bool is_balanced(const YoungDiagram& diagram, const Rational& c) {
    if (c <= 0) throw std::invalid_argument("is_balanced: constant must be positive");
    const Rational cap = c * c * diagram.size();  // row <= c sqrt(n)  <=>  row^2 <= c^2 n
    const Rational rows_sq(static_cast<long>(diagram.row_count()) *
                           static_cast<long>(diagram.row_count()));
    if (rows_sq > cap) return false;
    for (int r : diagram.rows())
        if (Rational(static_cast<long>(r) * static_cast<long>(r)) > cap) return false;
    return true;
}

Rational CharacterBound::scaled() const {
    if (has_sqrt) throw std::logic_error("CharacterBound::scaled: value carries sqrt(n)");
    return coeff;
}

std::string CharacterBound::scaled_str() const {
    if (!has_sqrt) return rational_str(coeff);
    return rational_str(coeff) + "*sqrt(" + std::to_string(n) + ")";
}

std::string CharacterBound::scaled_decimal(int digits) const {
    return has_sqrt ? decimal_str_sqrt(coeff, n, digits) : decimal_str(coeff, digits);
}

CharacterBound character_bound_report(const YoungDiagram& diagram, const CycleType& type) {
    CharacterBound out;
    out.value = abs(normalized_character(diagram, type));
    out.n = diagram.size();
    const int len = type.length();
    out.has_sqrt = (len % 2 != 0);
    Integer pow = 1;
    for (int i = 0; i < len / 2; ++i) pow *= out.n;
    out.coeff = out.value * Rational(pow);
    out.coeff.canonicalize();
    return out;
}

}  // namespace freejm
