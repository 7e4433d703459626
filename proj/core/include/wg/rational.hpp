#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wg {

/// Exact arbitrary-precision integer and rational scalars.
/// mpq_class keeps values canonical (positive denominator, gcd 1),
/// which is exactly the invariant we need everywhere.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p/q", with "/q" omitted for integers ("3", "-3/4").
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int double_factorial(unsigned n) {
    // (2n-1)!! convention handled by callers; this is plain n!!
    Int f;
    mpz_2fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int int_pow(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv) {
        if (b == 0) throw std::domain_error("0 to a negative power");
        b = 1 / b;
    }
    Rational r(1);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

}  // namespace wg
