#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cliffrad {

// Arbitrary-precision rational backing all exact arithmetic.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" in base 10.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonical "p/q" form (denominator always printed).
inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

inline Rational pow_rational(const Rational& base, int e) {
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("zero to a negative power");
        return 1 / pow_rational(base, -e);
    }
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Rational factorial_rational(long m) {
    if (m < 0) throw std::domain_error("factorial of negative integer");
    Rational r(1);
    for (long i = 2; i <= m; ++i) r *= i;
    return r;
}

// (nu)_m = nu (nu+1) ... (nu+m-1), with (nu)_0 = 1.
inline Rational pochhammer(const Rational& nu, long m) {
    Rational r(1);
    for (long i = 0; i < m; ++i) r *= nu + i;
    return r;
}

inline Rational binomial_rational(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    return factorial_rational(n) / (factorial_rational(k) * factorial_rational(n - k));
}

}  // namespace cliffrad
