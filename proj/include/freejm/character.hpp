#pragma once

#include <string>

#include "freejm/rational.hpp"
#include "freejm/young_diagram.hpp"

namespace freejm {

/// Number of standard tableaux (hook length formula). The empty diagram
/// has dimension 1.
Integer dimension(const YoungDiagram& diagram);

/// Murnaghan-Nakayama character value, exact. Ribbons are removed for the
/// largest remaining cycle part first; results are memoized on
/// (diagram, remaining type) behind a mutex, so concurrent evaluation is
/// safe. Requires type.degree() == diagram.size().
Integer character_value(const YoungDiagram& diagram, const CycleType& type);

/// character_value / dimension, always in [-1, 1].
Rational normalized_character(const YoungDiagram& diagram, const CycleType& type);

/// True iff every row length and the row count are at most c * sqrt(n).
bool is_balanced(const YoungDiagram& diagram, const Rational& c);

/// |normalized character| together with its n^{len/2} rescaling. For odd
/// len the rescaled value carries a sqrt(n) factor and is only available
/// as a decimal.
struct CharacterBound {
    Rational value;   // |normalized character|
    Rational coeff;   // value * n^{floor(len/2)}
    bool has_sqrt;    // rescaled value = coeff * sqrt(n) when true
    long n;

    bool exact() const { return !has_sqrt; }
    Rational scaled() const;              // requires exact()
    std::string scaled_str() const;       // "p/q" or "p/q*sqrt(n)"
    std::string scaled_decimal(int digits) const;
};

CharacterBound character_bound_report(const YoungDiagram& diagram, const CycleType& type);

}  // namespace freejm
