#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kuc {

/// Exact arbitrary-precision rational. GMP keeps values canonical
/// (reduced, positive denominator) as long as they are constructed
/// canonically, which make_rational guarantees.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parse "a/b" or "a" into a canonical rational.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer rational_floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// 2^-bits as an exact rational.
inline Rational dyadic_eps(unsigned long bits) {
    return make_rational(Integer(1), integer_pow(Integer(2), bits));
}

/// Round-to-nearest decimal string with `digits` fractional digits.
/// Output is exact decimal text, suitable for JSON/CSV emission.
std::string to_decimal_string(const Rational& q, unsigned digits);

}  // namespace kuc
