#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freejm {

// All arithmetic in this library is exact. Integer and Rational are the
// only numeric types that appear in public interfaces; floating point is
// confined to the decimal formatting helpers below.
using Integer = mpz_class;
using Rational = mpq_class;

/// (n)_k = n(n-1)...(n-k+1); zero when k > n, one when k = 0.
Integer descending_factorial(long n, long k);

Integer integer_pow(long base, unsigned exp);

/// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without the denominator.
std::string rational_str(const Rational& value);

/// Fixed-point decimal with `digits` places, rounded half away from zero.
std::string decimal_str(const Rational& value, int digits);

/// Same for value * sqrt(radicand); radicand >= 0. Exact integer
/// square-root fixed-point arithmetic, no floating point involved.
std::string decimal_str_sqrt(const Rational& value, long radicand, int digits);

}  // namespace freejm
