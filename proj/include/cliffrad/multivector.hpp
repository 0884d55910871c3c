#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffrad/exact_scalar.hpp"
#include "cliffrad/rational.hpp"

namespace cliffrad {

inline constexpr int kMaxDim = 8;

inline int blade_grade(unsigned mask) { return std::popcount(mask); }

// Sign of the product e_A e_B for blades given as bitmasks (bit i-1 set means
// e_i is a factor), with e_i^2 = -1.  The resulting blade is A xor B.
inline int blade_sign_compute(unsigned a, unsigned b) {
    int swaps = 0;
    unsigned t = a >> 1;
    while (t != 0) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    int sign = (swaps % 2 == 0) ? 1 : -1;
    if (std::popcount(a & b) % 2 == 1) sign = -sign;  // shared factors square to -1
    return sign;
}

// Precomputed table over all 8-bit blade pairs; valid for every n <= 8.
inline int blade_sign(unsigned a, unsigned b) {
    static const std::vector<int8_t> table = [] {
        std::vector<int8_t> t(256 * 256);
        for (unsigned i = 0; i < 256; ++i)
            for (unsigned j = 0; j < 256; ++j)
                t[(i << 8) | j] = static_cast<int8_t>(blade_sign_compute(i, j));
        return t;
    }();
    return table[(a << 8) | b];
}

// Clifford conjugation sign on a blade of grade g: (-1)^{g(g+1)/2}.
inline int conjugation_sign(int grade) {
    return (grade * (grade + 1) / 2) % 2 == 0 ? 1 : -1;
}

// Element of the real Clifford algebra R_n, sparse over blade bitmasks.
// Scalar backend S is exchangeable (Rational, ExactScalar, double).
template <class S>
class Multivector {
  public:
    explicit Multivector(int n) : n_(check_dim(n)) {}

    static Multivector scalar(int n, const S& v) {
        Multivector m(n);
        m.set(0u, v);
        return m;
    }
    // e_i with 1-based index.
    static Multivector basis_vector(int n, int i) {
        if (i < 1 || i > n) throw std::out_of_range("basis vector index out of range");
        Multivector m(n);
        m.set(1u << (i - 1), S(1));
        return m;
    }
    static Multivector blade(int n, unsigned mask, const S& v) {
        Multivector m(n);
        m.set(mask, v);
        return m;
    }

    int n() const { return n_; }
    const std::map<unsigned, S>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    S coeff(unsigned mask) const {
        auto it = c_.find(mask);
        return it == c_.end() ? S(0) : it->second;
    }
    void set(unsigned mask, const S& v) {
        if (mask >= (1u << n_)) throw std::out_of_range("blade mask out of range");
        if (cliffrad::is_zero(v))
            c_.erase(mask);
        else
            c_[mask] = v;
    }
    void add(unsigned mask, const S& v) { set(mask, coeff(mask) + v); }

    Multivector operator-() const {
        Multivector r(n_);
        for (const auto& [m, v] : c_) r.c_[m] = -v;
        return r;
    }
    Multivector& operator+=(const Multivector& o) {
        check_same(o);
        for (const auto& [m, v] : o.c_) add(m, v);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        check_same(o);
        for (const auto& [m, v] : o.c_) add(m, -v);
        return *this;
    }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

    // Geometric product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.check_same(b);
        Multivector r(a.n_);
        for (const auto& [ma, va] : a.c_)
            for (const auto& [mb, vb] : b.c_) {
                S term = va * vb;
                if (blade_sign(ma, mb) < 0) term = -term;
                r.add(ma ^ mb, term);
            }
        return r;
    }

    Multivector scaled(const S& s) const {
        Multivector r(n_);
        if (cliffrad::is_zero(s)) return r;
        for (const auto& [m, v] : c_) r.set(m, v * s);
        return r;
    }

    Multivector grade_part(int g) const {
        Multivector r(n_);
        for (const auto& [m, v] : c_)
            if (blade_grade(m) == g) r.c_[m] = v;
        return r;
    }
    S scalar_part() const { return coeff(0u); }
    int max_grade() const {
        int g = 0;
        for (const auto& [m, v] : c_) g = std::max(g, blade_grade(m));
        return g;
    }

    // Sum of squared blade components; |m|^2 in the Frobenius sense.
    S norm_sq() const {
        S s(0);
        for (const auto& [m, v] : c_) s += v * v;
        return s;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << scalar_to_string(v) << ")";
            for (int i = 0; i < n_; ++i)
                if (m & (1u << i)) os << "e" << (i + 1);
        }
        return os.str();
    }

  private:
    static int check_dim(int n) {
        if (n < 1 || n > kMaxDim) throw std::out_of_range("Clifford dimension must be in [1,8]");
        return n;
    }
    void check_same(const Multivector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Clifford dimension mismatch");
    }
    static std::string scalar_to_string(const Rational& v) { return rational_to_string(v); }
    static std::string scalar_to_string(const ExactScalar& v) { return v.to_string(); }
    static std::string scalar_to_string(double v) { return std::to_string(v); }

    int n_;
    std::map<unsigned, S> c_;
};

// Clifford conjugation: grade-0 fixed, 1-vectors negated; anti-automorphism.
template <class S>
Multivector<S> conjugate(const Multivector<S>& a) {
    Multivector<S> r(a.n());
    for (const auto& [m, v] : a.coeffs()) {
        int g = blade_grade(m);
        r.set(m, conjugation_sign(g) > 0 ? v : S(0) - v);
    }
    return r;
}

// Paravector x = x0 + x_1 e_1 + ... + x_n e_n, identifying R^{n+1}.
template <class S>
struct Paravector {
    S x0;
    std::vector<S> xv;

    Paravector(const S& scalar_part, std::vector<S> vector_part)
        : x0(scalar_part), xv(std::move(vector_part)) {}
    explicit Paravector(int n) : x0(0), xv(static_cast<size_t>(n), S(0)) {}

    int n() const { return static_cast<int>(xv.size()); }

    Multivector<S> to_multivector() const {
        Multivector<S> m(n());
        m.set(0u, x0);
        for (int i = 0; i < n(); ++i) m.set(1u << i, xv[i]);
        return m;
    }

    // |x|^2 = x0^2 + |x_vec|^2; equals x * conjugate(x).
    S norm_sq() const {
        S s = x0 * x0;
        for (const auto& v : xv) s += v * v;
        return s;
    }
};

template <class S, class T, class F>
Multivector<T> map_scalars(const Multivector<S>& a, F&& f) {
    Multivector<T> r(a.n());
    for (const auto& [m, v] : a.coeffs()) r.set(m, f(v));
    return r;
}

inline Multivector<double> to_double_mv(const Multivector<ExactScalar>& a) {
    return map_scalars<ExactScalar, double>(a, [](const ExactScalar& v) { return v.to_double(); });
}
inline Multivector<double> to_double_mv(const Multivector<Rational>& a) {
    return map_scalars<Rational, double>(a, [](const Rational& v) { return v.get_d(); });
}

// Max blade component magnitude, for float-path tolerances.
inline double max_abs(const Multivector<double>& a) {
    double m = 0.0;
    for (const auto& [mask, v] : a.coeffs()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace cliffrad
