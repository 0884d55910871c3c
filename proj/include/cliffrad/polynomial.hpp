#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cliffrad/multivector.hpp"

namespace cliffrad {

// Variable domain of a polynomial: the vector variables (x_1..x_n) or the
// paravector variables (x_0..x_n).
enum class Arity { Vector, Paravector };

// Multivariate polynomial with Multivector coefficients, optionally divided
// by |x|^denom_pow (paravector arity only; |x|^2 = x0^2 + ... + xn^2).
// Terms map a monomial exponent vector to its Multivector coefficient.
template <class S>
class MvPolynomial {
  public:
    using Coeff = Multivector<S>;
    using Key = std::vector<int>;

    MvPolynomial(int n, Arity arity, int denom_pow = 0)
        : n_(n), arity_(arity), denom_(denom_pow) {
        if (denom_ < 0) throw std::invalid_argument("negative denominator power");
        if (denom_ > 0 && arity_ != Arity::Paravector)
            throw std::invalid_argument("rational forms require paravector arity");
    }

    int n() const { return n_; }
    Arity arity() const { return arity_; }
    int denom_pow() const { return denom_; }
    int num_vars() const { return arity_ == Arity::Vector ? n_ : n_ + 1; }
    const std::map<Key, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static MvPolynomial zero(int n, Arity a) { return MvPolynomial(n, a); }
    static MvPolynomial constant(int n, Arity a, const Coeff& c) {
        MvPolynomial p(n, a);
        p.add_term(Key(p.num_vars(), 0), c);
        return p;
    }
    static MvPolynomial constant_scalar(int n, Arity a, const S& v) {
        return constant(n, a, Coeff::scalar(n, v));
    }
    // Coordinate monomial: var is 0-based into the variable slots.
    static MvPolynomial coordinate(int n, Arity a, int var) {
        MvPolynomial p(n, a);
        Key k(p.num_vars(), 0);
        if (var < 0 || var >= p.num_vars()) throw std::out_of_range("variable index");
        k[var] = 1;
        p.add_term(k, Coeff::scalar(n, S(1)));
        return p;
    }
    static MvPolynomial x0(int n) { return coordinate(n, Arity::Paravector, 0); }
    // x_i, 1-based Clifford index, as a scalar-valued polynomial.
    static MvPolynomial xi(int n, Arity a, int i) {
        return coordinate(n, a, a == Arity::Vector ? i - 1 : i);
    }
    // The 1-vector variable: sum_i x_i e_i.
    static MvPolynomial vector_variable(int n, Arity a) {
        MvPolynomial p(n, a);
        for (int i = 1; i <= n; ++i) {
            Key k(p.num_vars(), 0);
            k[a == Arity::Vector ? i - 1 : i] = 1;
            p.add_term(k, Coeff::basis_vector(n, i));
        }
        return p;
    }
    // The paravector variable x = x0 + x_vec.
    static MvPolynomial paravector_variable(int n) {
        return x0(n) + vector_variable(n, Arity::Paravector);
    }
    // conjugate(x) = x0 - x_vec.
    static MvPolynomial conj_paravector_variable(int n) {
        return x0(n) - vector_variable(n, Arity::Paravector);
    }
    // |x|^2 resp. |x_vec|^2 as a scalar polynomial.
    static MvPolynomial norm_sq_poly(int n, Arity a) {
        MvPolynomial p(n, a);
        for (int v = 0; v < p.num_vars(); ++v) {
            Key k(p.num_vars(), 0);
            k[v] = 2;
            p.add_term(k, Coeff::scalar(n, S(1)));
        }
        return p;
    }

    void add_term(const Key& k, const Coeff& c) {
        if (static_cast<int>(k.size()) != num_vars())
            throw std::invalid_argument("monomial arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MvPolynomial operator-() const {
        MvPolynomial r(n_, arity_, denom_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    MvPolynomial& operator+=(const MvPolynomial& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    MvPolynomial& operator-=(const MvPolynomial& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend MvPolynomial operator+(MvPolynomial a, const MvPolynomial& b) { return a += b; }
    friend MvPolynomial operator-(MvPolynomial a, const MvPolynomial& b) { return a -= b; }

    friend MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b) {
        if (a.n_ != b.n_ || a.arity_ != b.arity_)
            throw std::invalid_argument("polynomial domain mismatch");
        MvPolynomial r(a.n_, a.arity_, a.denom_ + b.denom_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Key k(ka.size());
                for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
                r.add_term(k, ca * cb);
            }
        return r;
    }

    MvPolynomial scaled(const S& s) const {
        MvPolynomial r(n_, arity_, denom_);
        if (cliffrad::is_zero(s)) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(s));
        return r;
    }
    MvPolynomial left_mul(const Coeff& m) const {
        MvPolynomial r(n_, arity_, denom_);
        for (const auto& [k, c] : terms_) r.add_term(k, m * c);
        return r;
    }
    MvPolynomial right_mul(const Coeff& m) const {
        MvPolynomial r(n_, arity_, denom_);
        for (const auto& [k, c] : terms_) r.add_term(k, c * m);
        return r;
    }

    MvPolynomial pow(int e) const {
        if (e < 0) throw std::domain_error("negative polynomial power");
        MvPolynomial acc = constant_scalar(n_, arity_, S(1));
        for (int i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    // Partial derivative in variable slot `var` of the numerator only; use
    // dirac() for derivatives of rational forms.
    MvPolynomial derivative(int var) const {
        MvPolynomial r(n_, arity_, denom_);
        for (const auto& [k, c] : terms_) {
            if (k[var] == 0) continue;
            Key kk = k;
            kk[var] -= 1;
            r.add_term(kk, c.scaled(S(k[var])));
        }
        return r;
    }

    // Generalized Cauchy-Riemann / Dirac operator acting from the left:
    // paravector arity applies d_{x0} + sum_j e_j d_{x_j}, vector arity the
    // Dirac part only.  On N/|x|^d the quotient rule gives
    //   (D N * |x|^2 - d * x * N) / |x|^{d+2}.
    MvPolynomial dirac() const {
        MvPolynomial num(n_, arity_, 0);
        int base = (arity_ == Arity::Paravector) ? 1 : 0;
        if (arity_ == Arity::Paravector) num += derivative_num(0);
        for (int i = 1; i <= n_; ++i)
            num += derivative_num(base + i - 1).left_mul(Coeff::basis_vector(n_, i));
        if (denom_ == 0) return num;
        MvPolynomial res = num * norm_sq_poly(n_, arity_);
        res -= paravector_variable(n_).left_mul_into(*this).scaled(S(denom_));
        res.denom_ = denom_ + 2;
        return res;
    }

    // Componentwise Laplacian of the numerator (plain polynomials only).
    MvPolynomial laplacian() const {
        if (denom_ != 0) throw std::invalid_argument("laplacian of rational form");
        MvPolynomial r(n_, arity_, 0);
        for (int v = 0; v < num_vars(); ++v) r += derivative(v).derivative(v);
        return r;
    }

    // Total degree of the numerator; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_)
            d = std::max(d, std::accumulate(k.begin(), k.end(), 0));
        return d;
    }
    bool is_homogeneous(int* deg = nullptr) const {
        int d = -2;
        for (const auto& [k, c] : terms_) {
            int t = std::accumulate(k.begin(), k.end(), 0);
            if (d == -2)
                d = t;
            else if (d != t)
                return false;
        }
        if (deg) *deg = (d == -2 ? 0 : d);
        return true;
    }

    // Composition with the vector reflection x_vec -> -x_vec (x0 fixed):
    // negates every monomial of odd vector degree.
    MvPolynomial reflect_vector_arg() const {
        MvPolynomial r(n_, arity_, denom_);
        const size_t first = (arity_ == Arity::Paravector) ? 1 : 0;
        for (const auto& [k, c] : terms_) {
            int vdeg = 0;
            for (size_t i = first; i < k.size(); ++i) vdeg += k[i];
            r.terms_.emplace(k, vdeg % 2 == 0 ? c : -c);
        }
        return r;
    }

    // Restriction to x0 = 0, re-based onto the vector variables.
    MvPolynomial restrict_x0() const {
        if (arity_ != Arity::Paravector) throw std::invalid_argument("restrict_x0: vector arity");
        if (denom_ != 0) throw std::invalid_argument("restrict_x0: rational form");
        MvPolynomial r(n_, Arity::Vector, 0);
        for (const auto& [k, c] : terms_) {
            if (k[0] != 0) continue;
            r.add_term(Key(k.begin() + 1, k.end()), c);
        }
        return r;
    }
    // View a vector-arity polynomial inside the paravector domain.
    MvPolynomial to_paravector() const {
        if (arity_ == Arity::Paravector) return *this;
        MvPolynomial r(n_, Arity::Paravector, 0);
        for (const auto& [k, c] : terms_) {
            Key kk(n_ + 1, 0);
            std::copy(k.begin(), k.end(), kk.begin() + 1);
            r.add_term(kk, c);
        }
        return r;
    }

    // Reinterprets a plain polynomial as the numerator over |x|^d.
    MvPolynomial as_rational_form(int d) const {
        if (denom_ != 0) throw std::invalid_argument("as_rational_form: already a rational form");
        if (d > 0 && arity_ != Arity::Paravector)
            throw std::invalid_argument("rational forms require paravector arity");
        MvPolynomial r = *this;
        r.denom_ = d;
        return r;
    }

    // Rewrites N/|x|^denom as (N*|x|^{d-denom})/|x|^d; d-denom must be even.
    MvPolynomial with_denom(int d) const {
        if (d == denom_) return *this;
        if (d < denom_ || (d - denom_) % 2 != 0)
            throw std::invalid_argument("with_denom: incompatible denominator powers");
        MvPolynomial r = (*this) * norm_sq_poly(n_, arity_).pow((d - denom_) / 2);
        r.denom_ = d;
        return r;
    }

    // Evaluation.  Rational forms divide by |x|^denom, which for odd powers
    // needs a square root and is therefore restricted to floating scalars.
    Multivector<S> eval(const std::vector<S>& coords) const {
        if (static_cast<int>(coords.size()) != num_vars())
            throw std::invalid_argument("eval: coordinate count mismatch");
        Multivector<S> acc(n_);
        for (const auto& [k, c] : terms_) {
            S mono(1);
            for (size_t i = 0; i < coords.size(); ++i)
                for (int e = 0; e < k[i]; ++e) mono = mono * coords[i];
            acc += c.scaled(mono);
        }
        if (denom_ == 0) return acc;
        S nsq(0);
        for (const auto& v : coords) nsq += v * v;
        if (cliffrad::is_zero(nsq)) throw std::domain_error("eval: rational form at the origin");
        if (denom_ % 2 == 0) {
            S div(1);
            for (int i = 0; i < denom_ / 2; ++i) div = div * nsq;
            return acc.scaled(S(1) / div);
        }
        if constexpr (std::is_floating_point_v<S>) {
            return acc.scaled(S(1) / std::pow(nsq, denom_ / 2.0));
        } else {
            throw std::domain_error("eval: odd |x| power requires the float backend");
        }
    }

    friend bool operator==(const MvPolynomial& a, const MvPolynomial& b) {
        return a.n_ == b.n_ && a.arity_ == b.arity_ && a.denom_ == b.denom_ &&
               a.terms_ == b.terms_;
    }
    friend bool operator!=(const MvPolynomial& a, const MvPolynomial& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << "  +  ";
            first = false;
            os << "[" << c.to_string() << "]";
            for (size_t i = 0; i < k.size(); ++i)
                if (k[i] > 0) {
                    os << " x" << (arity_ == Arity::Vector ? i + 1 : i);
                    if (k[i] > 1) os << "^" << k[i];
                }
        }
        if (denom_ > 0) os << "  / |x|^" << denom_;
        return os.str();
    }

  private:
    MvPolynomial derivative_num(int var) const {
        MvPolynomial r(n_, arity_, 0);
        for (const auto& [k, c] : terms_) {
            if (k[var] == 0) continue;
            Key kk = k;
            kk[var] -= 1;
            r.add_term(kk, c.scaled(S(k[var])));
        }
        return r;
    }
    // this with every coefficient multiplied by m's value on the left,
    // where m is a degree-1 polynomial (used for x * N in the quotient rule).
    MvPolynomial left_mul_into(const MvPolynomial& rhs) const {
        MvPolynomial r(rhs.n_, rhs.arity_, 0);
        for (const auto& [km, cm] : terms_)
            for (const auto& [k, c] : rhs.terms_) {
                Key kk(k.size());
                for (size_t i = 0; i < kk.size(); ++i) kk[i] = km[i] + k[i];
                r.add_term(kk, cm * c);
            }
        return r;
    }
    void check_compatible(const MvPolynomial& o) const {
        if (n_ != o.n_ || arity_ != o.arity_ || denom_ != o.denom_)
            throw std::invalid_argument("polynomial form mismatch (dimension/arity/denominator)");
    }

    int n_;
    Arity arity_;
    int denom_;
    std::map<Key, Coeff> terms_;
};

template <class S, class T, class F>
MvPolynomial<T> map_poly_scalars(const MvPolynomial<S>& p, F&& f) {
    MvPolynomial<T> r(p.n(), p.arity(), p.denom_pow());
    for (const auto& [k, c] : p.terms()) r.add_term(k, map_scalars<S, T>(c, f));
    return r;
}

inline MvPolynomial<double> to_double_poly(const MvPolynomial<ExactScalar>& p) {
    return map_poly_scalars<ExactScalar, double>(
        p, [](const ExactScalar& v) { return v.to_double(); });
}

}  // namespace cliffrad
