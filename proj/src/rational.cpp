#include "freejm/rational.hpp"

#include <stdexcept>

namespace freejm {

Integer descending_factorial(long n, long k) {
    if (k < 0) throw std::invalid_argument("descending_factorial: negative k");
    Integer result = 1;
    for (long i = 0; i < k; ++i) result *= (n - i);
    return result;
}

Integer integer_pow(long base, unsigned exp) {
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return result;
}

Rational parse_rational(std::string_view text) {
    Rational value;
    if (value.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

std::string rational_str(const Rational& value) {
    return value.get_str();
}

namespace {

// round(num/den) with den > 0, half away from zero
Integer rounded_quotient(const Integer& num, const Integer& den) {
    Integer mag = abs(num);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), Integer(2 * mag + den).get_mpz_t(), Integer(2 * den).get_mpz_t());
    return num < 0 ? Integer(-q) : q;
}

std::string format_scaled(const Integer& scaled, int digits) {
    Integer mag = abs(scaled);
    Integer pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    Integer ip = mag / pow10;
    Integer fp = mag % pow10;
    std::string out;
    if (scaled < 0 && mag != 0) out += '-';
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += '.';
        out += std::string(static_cast<size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace

std::string decimal_str(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_str: negative digits");
    Integer pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    Integer scaled = rounded_quotient(value.get_num() * pow10, value.get_den());
    return format_scaled(scaled, digits);
}

std::string decimal_str_sqrt(const Rational& value, long radicand, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_str_sqrt: negative digits");
    if (radicand < 0) throw std::invalid_argument("decimal_str_sqrt: negative radicand");
    constexpr int kGuard = 12;
    Integer guard10 = 1;
    for (int i = 0; i < kGuard; ++i) guard10 *= 10;
    Integer pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    // sqrt(radicand) ~ s / 10^(digits + kGuard), so
    // value * sqrt(radicand) * 10^digits ~ num * s / (den * 10^kGuard)
    Integer shifted = Integer(radicand) * pow10 * pow10 * guard10 * guard10;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), shifted.get_mpz_t());
    Integer scaled = rounded_quotient(value.get_num() * s, value.get_den() * guard10);
    return format_scaled(scaled, digits);
}

}  // namespace freejm
