#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "cliffrad/rational.hpp"

namespace cliffrad {

// Exact scalar of the form q * pi^(h/2) with q rational and h an integer.
// Multiplication and division are closed; addition is defined only between
// values with the same pi power (zero is compatible with everything and is
// kept canonically as q=0, h=0).
class ExactScalar {
  public:
    ExactScalar() : q_(0), h_(0) {}
    ExactScalar(long v) : q_(v), h_(0) {}  // NOLINT: implicit on purpose
    ExactScalar(const Rational& q) : q_(q), h_(0) {}
    ExactScalar(const Rational& q, int h) : q_(q), h_(h) { normalize(); }

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar pi_pow_half(int h) { return ExactScalar(Rational(1), h); }

    const Rational& q() const { return q_; }
    int h() const { return h_; }
    bool is_zero() const { return cliffrad::is_zero(q_); }
    bool is_rational() const { return h_ == 0; }

    ExactScalar operator-() const { return ExactScalar(-q_, h_); }

    ExactScalar& operator+=(const ExactScalar& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (h_ != o.h_)
            throw std::domain_error("ExactScalar addition with mismatched pi powers: h=" +
                                    std::to_string(h_) + " vs h=" + std::to_string(o.h_));
        q_ += o.q_;
        normalize();
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }
    ExactScalar& operator*=(const ExactScalar& o) {
        q_ *= o.q_;
        h_ += o.h_;
        normalize();
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.is_zero()) throw std::domain_error("ExactScalar division by zero");
        q_ /= o.q_;
        h_ -= o.h_;
        normalize();
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.q_ == b.q_ && (a.h_ == b.h_ || cliffrad::is_zero(a.q_));
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    double to_double() const { return q_.get_d() * std::pow(M_PI, h_ / 2.0); }

    // "p/q" when rational, "p/q*pi^(h/2)" otherwise.
    std::string to_string() const {
        std::string s = rational_to_string(q_);
        if (h_ != 0) s += "*pi^(" + std::to_string(h_) + "/2)";
        return s;
    }

    // Accepts the to_string() format as well as bare rationals.
    static ExactScalar parse(const std::string& s) {
        auto star = s.find('*');
        if (star == std::string::npos) return ExactScalar(parse_rational(s));
        const std::string head = s.substr(0, star), tail = s.substr(star + 1);
        const std::string prefix = "pi^(", suffix = "/2)";
        if (tail.size() <= prefix.size() + suffix.size() ||
            tail.compare(0, prefix.size(), prefix) != 0 ||
            tail.compare(tail.size() - suffix.size(), suffix.size(), suffix) != 0)
            throw std::invalid_argument("bad scalar literal: '" + s + "'");
        const std::string hs = tail.substr(prefix.size(), tail.size() - prefix.size() - suffix.size());
        return ExactScalar(parse_rational(head), std::stoi(hs));
    }

  private:
    void normalize() {
        if (cliffrad::is_zero(q_)) h_ = 0;
    }

    Rational q_;
    int h_;
};

inline bool is_zero(const ExactScalar& s) { return s.is_zero(); }
inline double to_double(const ExactScalar& s) { return s.to_double(); }

inline ExactScalar pow_exact(const ExactScalar& base, int e) {
    if (e < 0) return ExactScalar::one() / pow_exact(base, -e);
    ExactScalar acc = ExactScalar::one(), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Gamma(m/2), exact.  m may be any odd integer (negative included, via the
// downward recursion Gamma(z) = Gamma(z+1)/z) or a positive even integer.
inline ExactScalar gamma_half(long m) {
    if (m % 2 == 0) {
        if (m <= 0) throw std::domain_error("gamma_half: pole at non-positive integer argument");
        Rational q(1);
        for (long t = m - 2; t >= 2; t -= 2) q *= make_rational(t, 2);
        return ExactScalar(q, 0);
    }
    if (m >= 1) {
        Rational q(1);
        for (long t = m - 2; t >= 1; t -= 2) q *= make_rational(t, 2);
        return ExactScalar(q, 1);
    }
    Rational q(1);
    for (long t = m; t <= -1; t += 2) q /= make_rational(t, 2);
    return ExactScalar(q, 1);
}

// 1/Gamma(m/2) for any integer m; zero at the poles m = 0, -2, -4, ...
inline ExactScalar inv_gamma_half(long m) {
    if (m % 2 == 0 && m <= 0) return ExactScalar::zero();
    return ExactScalar::one() / gamma_half(m);
}

// Surface area of S^{n-1}: A_n = 2 pi^{n/2} / Gamma(n/2).
inline ExactScalar sphere_area(int n) {
    return ExactScalar(Rational(2), n) / gamma_half(n);
}

}  // namespace cliffrad
