#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "torusmob/error.hpp"

namespace torusmob {

/// Exact arbitrary-precision rational. mpq_class keeps values in lowest
/// terms with positive denominator after every arithmetic operation, which
/// is exactly the canonical form the text format requires.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw error(errc::parse_error, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_val(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// "p/q" in lowest terms, or a plain integer when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_valid_rational_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    return digits > 0 && i == s.size();
}

inline Rational parse_rational(const std::string& s) {
    if (!is_valid_rational_text(s))
        throw error(errc::parse_error, "cannot parse rational '" + s + "'");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw error(errc::parse_error, "cannot parse rational '" + s + "'");
    if (q.get_den() == 0)
        throw error(errc::parse_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// Exact square root if the argument is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace torusmob
