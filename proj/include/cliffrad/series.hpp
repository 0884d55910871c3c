#pragma once

#include <functional>
#include <map>
#include <utility>

#include "cliffrad/polyspace.hpp"
#include "cliffrad/trigpoly.hpp"

namespace cliffrad {

enum class SeriesPart { Taylor, Laurent };

using SeriesKey = std::pair<int, int>;  // (j, k)
using SeriesTerms = std::map<SeriesKey, ExactPoly>;

namespace detail {

inline void check_series_poly(int n, int k, const ExactPoly& p) {
    if (p.n() != n) throw std::invalid_argument("series term: dimension mismatch");
    if (p.arity() != Arity::Vector || p.denom_pow() != 0)
        throw std::invalid_argument("series term: plain vector-arity polynomial required");
    int d = 0;
    if (!p.is_homogeneous(&d) || (!p.is_zero() && d != k))
        throw std::invalid_argument("series term: polynomial not k-homogeneous");
    if (!p.dirac().is_zero())
        throw std::invalid_argument("series term: polynomial not monogenic");
}

inline void add_to_terms(SeriesTerms& terms, SeriesKey key, const ExactPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(key, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace detail

// Finitely supported series of an entire (Taylor) or at-infinity (Laurent)
// monogenic function on R^{n+1}:
//   Taylor:  f(x) = sum X^(j)_k(x) P_{k,j}(x_vec)
//   Laurent: f(x) = conj(x)/|x|^{n+1} sum X^(j)_k(conj x) P_{k,j}(-x_vec)/|x|^{2(j+k)}
// The Laurent basis element is the Kelvin inversion
//   (conj(x)/|x|^{n+1}) g(x^{-1}),  x^{-1} = conj(x)/|x|^2,
// of the Taylor element g = X^(j)_k P_{k,j}; evaluating g at x^{-1} (rather
// than at x/|x|^2) is what keeps the element in the kernel of D.
struct MonogenicSeries {
    int n = 2;
    SeriesPart part = SeriesPart::Taylor;
    SeriesTerms terms;

    MonogenicSeries() = default;
    MonogenicSeries(int dim, SeriesPart pt) : n(dim), part(pt) {}

    void add_term(int j, int k, const ExactPoly& p) {
        if (j < 0 || k < 0) throw std::invalid_argument("monogenic series: indices must be >= 0");
        detail::check_series_poly(n, k, p);
        detail::add_to_terms(terms, {j, k}, p);
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const MonogenicSeries& a, const MonogenicSeries& b) {
        return a.n == b.n && a.part == b.part && a.terms == b.terms;
    }
};

// Finitely supported slice series
//   f(x0, p, omega) = sum_{j in Z, k >= 0} (x0 + omega p)^j omega^k P_{k,j}(omega);
// every term is even under (p, omega) -> (-p, -omega) by construction.
struct SliceSeries {
    int n = 2;
    SeriesTerms terms;

    SliceSeries() = default;
    explicit SliceSeries(int dim) : n(dim) {}

    void add_term(int j, int k, const ExactPoly& p) {
        if (k < 0) throw std::invalid_argument("slice series: k must be >= 0");
        detail::check_series_poly(n, k, p);
        detail::add_to_terms(terms, {j, k}, p);
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const SliceSeries& a, const SliceSeries& b) {
        return a.n == b.n && a.terms == b.terms;
    }
};

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

// (x0 + omega p)^j in the complex plane C_omega; pairs (a, b) mean a + omega b.
template <class S>
std::pair<S, S> plane_power(S a, S b, int j) {
    if (j < 0) {
        S den = a * a + b * b;
        if (cliffrad::is_zero(den)) throw std::domain_error("plane power at the excluded origin");
        a = a / den;
        b = S(0) - b / den;
        j = -j;
    }
    S ra(1), rb(0);
    for (int i = 0; i < j; ++i) {
        S na = ra * a - rb * b;
        S nb = ra * b + rb * a;
        ra = na;
        rb = nb;
    }
    return {ra, rb};
}

template <class S>
Multivector<S> omega_multivector(int n, const std::vector<S>& w) {
    Multivector<S> m(n);
    for (int i = 0; i < n; ++i) m.set(1u << i, w[i]);
    return m;
}

}  // namespace detail

// Pointwise value of a slice series at (x0, p, omega), |omega| = 1.
template <class S>
Multivector<S> slice_eval(const SliceSeries& f, const S& x0, const S& p,
                          const std::vector<S>& omega,
                          const std::function<MvPolynomial<S>(const ExactPoly&)>& lower) {
    if constexpr (!std::is_floating_point_v<S>) {
        S nsq(0);
        for (const auto& v : omega) nsq += v * v;
        if (!(nsq == S(1)))
            throw std::invalid_argument("slice_eval: omega must be a unit vector");
    }
    Multivector<S> acc(f.n);
    Multivector<S> omv = detail::omega_multivector(f.n, omega);
    for (const auto& [key, poly] : f.terms) {
        auto [a, b] = detail::plane_power(x0, p, key.first);
        Multivector<S> plane = Multivector<S>::scalar(f.n, a) + omv.scaled(b);
        Multivector<S> okp = Multivector<S>::scalar(f.n, S(1));
        for (int i = 0; i < key.second; ++i) okp = okp * omv;
        acc += plane * okp * lower(poly).eval(omega);
    }
    return acc;
}

inline Multivector<double> slice_eval(const SliceSeries& f, double x0, double p,
                                      const std::vector<double>& omega) {
    return slice_eval<double>(f, x0, p, omega,
                              [](const ExactPoly& q) { return to_double_poly(q); });
}
inline Multivector<ExactScalar> slice_eval_exact(const SliceSeries& f, const ExactScalar& x0,
                                                 const ExactScalar& p,
                                                 const std::vector<ExactScalar>& omega) {
    return slice_eval<ExactScalar>(f, x0, p, omega, [](const ExactPoly& q) { return q; });
}

// Assembled polynomial form of a Taylor series (paravector arity).
inline ExactPoly assemble_taylor(const MonogenicSeries& f) {
    if (f.part != SeriesPart::Taylor) throw std::invalid_argument("assemble_taylor: Taylor part required");
    ExactPoly acc(f.n, Arity::Paravector);
    for (const auto& [key, poly] : f.terms)
        acc += embedding_factor(key.first, key.second, f.n) * poly.to_paravector();
    return acc;
}

// Assembled rational form of a Laurent series over the common denominator
// |x|^{n+1+2 J_max}; the numerator parity always matches.
inline ExactPoly assemble_laurent(const MonogenicSeries& f) {
    if (f.part != SeriesPart::Laurent)
        throw std::invalid_argument("assemble_laurent: Laurent part required");
    if (f.terms.empty()) return ExactPoly(f.n, Arity::Paravector);
    int jmax = 0;
    for (const auto& [key, poly] : f.terms) jmax = std::max(jmax, key.first + key.second);
    const int denom = f.n + 1 + 2 * jmax;
    const ExactPoly conj_x = ExactPoly::conj_paravector_variable(f.n);
    ExactPoly acc(f.n, Arity::Paravector, denom);
    for (const auto& [key, poly] : f.terms) {
        ExactPoly num = conj_x * embedding_factor(key.first, key.second, f.n).reflect_vector_arg() *
                        poly.to_paravector().reflect_vector_arg();
        acc += num.as_rational_form(f.n + 1 + 2 * (key.first + key.second)).with_denom(denom);
    }
    return acc;
}

// Pointwise value of a monogenic series at the paravector x.  Laurent parts
// need |x| itself, so the exact backend supports them only when n is odd.
template <class S>
Multivector<S> monogenic_eval(const MonogenicSeries& f, const Paravector<S>& x,
                              const std::function<MvPolynomial<S>(const ExactPoly&)>& lower) {
    std::vector<S> para(x.xv.size() + 1);
    para[0] = x.x0;
    std::copy(x.xv.begin(), x.xv.end(), para.begin() + 1);
    std::vector<S> para_conj = para;  // Laurent factors take the reflected argument
    for (size_t i = 1; i < para_conj.size(); ++i) para_conj[i] = S(0) - para_conj[i];
    Multivector<S> acc(f.n);
    for (const auto& [key, poly] : f.terms) {
        const auto& arg = (f.part == SeriesPart::Laurent) ? para_conj : para;
        Multivector<S> val = lower(embedding_factor(key.first, key.second, f.n)).eval(arg) *
                             lower(poly.to_paravector()).eval(arg);
        if (f.part == SeriesPart::Laurent) {
            S nsq = x.norm_sq();
            if (cliffrad::is_zero(nsq))
                throw std::domain_error("monogenic_eval: Laurent part at the origin");
            S div(1);
            for (int i = 0; i < key.first + key.second; ++i) div = div * nsq;
            val = val.scaled(S(1) / div);
        }
        acc += val;
    }
    if (f.part == SeriesPart::Laurent) {
        Multivector<S> kernel = conjugate(x.to_multivector());
        S nsq = x.norm_sq();
        if constexpr (std::is_floating_point_v<S>) {
            acc = kernel.scaled(std::pow(nsq, -(f.n + 1) / 2.0)) * acc;
        } else {
            if ((f.n + 1) % 2 != 0)
                throw std::domain_error(
                    "monogenic_eval: exact Laurent evaluation needs odd n (even |x| power)");
            S div(1);
            for (int i = 0; i < (f.n + 1) / 2; ++i) div = div * nsq;
            acc = kernel.scaled(S(1) / div) * acc;
        }
    }
    return acc;
}

inline Multivector<double> monogenic_eval(const MonogenicSeries& f, const Paravector<double>& x) {
    return monogenic_eval<double>(f, x, [](const ExactPoly& q) { return to_double_poly(q); });
}
inline Multivector<ExactScalar> monogenic_eval_exact(const MonogenicSeries& f,
                                                     const Paravector<ExactScalar>& x) {
    return monogenic_eval<ExactScalar>(f, x, [](const ExactPoly& q) { return q; });
}

// ---------------------------------------------------------------------------
// Inversions, restriction, decompositions

// I_2: (x0 + omega p)^j -> (x0 + omega p)^{-(j+1)}; involutive on series.
inline SliceSeries invert_I2(const SliceSeries& f) {
    SliceSeries r(f.n);
    for (const auto& [key, poly] : f.terms) r.terms.emplace(SeriesKey{-(key.first + 1), key.second}, poly);
    return r;
}

// I_{n+1} exchanges Taylor and Laurent expansions term by term.
inline MonogenicSeries invert_In1(const MonogenicSeries& f) {
    MonogenicSeries r(f.n, f.part == SeriesPart::Taylor ? SeriesPart::Laurent : SeriesPart::Taylor);
    r.terms = f.terms;
    return r;
}

// Initial datum of a Taylor series: f|_{x0=0} = sum x_vec^j P_{k,j}.
inline ExactPoly restrict_x0(const MonogenicSeries& f) {
    if (f.part != SeriesPart::Taylor) throw std::invalid_argument("restrict_x0: Taylor part required");
    const ExactPoly xv = ExactPoly::vector_variable(f.n, Arity::Vector);
    ExactPoly acc(f.n, Arity::Vector);
    for (const auto& [key, poly] : f.terms) acc += xv.pow(key.first) * poly;
    return acc;
}

// Splits by the sign of j into the entire part (S_0) and the part at
// infinity (S_inf); the sum re-evaluates to the input.
inline std::pair<SliceSeries, SliceSeries> decompose_slice(const SliceSeries& f) {
    SliceSeries pos(f.n), neg(f.n);
    for (const auto& [key, poly] : f.terms)
        (key.first >= 0 ? pos : neg).terms.emplace(key, poly);
    return {pos, neg};
}

struct MembershipFlags {
    bool in_SM0 = true;     // support within { j >= k >= 0 }
    bool in_SMinf = true;   // support within { j < -k }
    bool in_kerS = true;    // support within { 0 <= j < k }
    bool in_I2kerS = true;  // support within { -k <= j < 0 }
};

inline MembershipFlags membership(const SliceSeries& f) {
    MembershipFlags m;
    for (const auto& [key, poly] : f.terms) {
        const int j = key.first, k = key.second;
        m.in_SM0 &= (j >= k);
        m.in_SMinf &= (j < -k);
        m.in_kerS &= (0 <= j && j < k);
        m.in_I2kerS &= (-k <= j && j < 0);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Cauchy coefficient extraction and harmonic projection

// Trigonometric form of a slice series on the circle of radius r in C_omega,
// with omega kept symbolic (a polynomial on the sphere): (x0 + omega p)^j at
// (r cos t, r sin t) is r^j (cos jt + omega sin jt).
inline TrigPoly slice_series_on_circle(const SliceSeries& f, const Rational& r) {
    TrigPoly F(f.n, Arity::Vector);
    const ExactPoly xv = ExactPoly::vector_variable(f.n, Arity::Vector);
    for (const auto& [key, poly] : f.terms) {
        const int j = key.first, k = key.second;
        ExactPoly g = xv.pow(k) * poly;
        ExactPoly gr = g.scaled(ExactScalar(pow_rational(r, j)));
        F.add_cos(std::abs(j), gr);
        ExactPoly og = xv * gr;
        if (j >= 0)
            F.add_sin(j, og);
        else
            F.add_sin(-j, -og);
    }
    return F;
}

// Exact Cauchy integrals C_j(omega) = (1/(2 pi r^j)) int (cos jt - omega
// sin jt) f dt computed through the aliasing formula for the equispaced
// trapezoid rule; exact for the trigonometric degrees present.
inline std::map<int, ExactPoly> extract_slice_coefficients_exact(const SliceSeries& f,
                                                                 const Rational& r, int j_min,
                                                                 int j_max, int nodes = 0) {
    if (!(r > 0)) throw std::domain_error("extract_slice_coefficients: radius must be positive");
    int fmax = 0;
    for (const auto& [key, poly] : f.terms) fmax = std::max(fmax, std::abs(key.first));
    const int jabs = std::max(std::abs(j_min), std::abs(j_max));
    if (nodes <= 0) nodes = 4 * (std::max(jabs, fmax) + 1);
    TrigPoly F = slice_series_on_circle(f, r);
    const ExactPoly xv = ExactPoly::vector_variable(f.n, Arity::Vector);
    std::map<int, ExactPoly> out;
    for (int j = j_min; j <= j_max; ++j) {
        TrigPoly kernelled = F.mul_cos(std::abs(j));
        TrigPoly sin_part = F.left_mul_poly(xv).mul_sin(std::abs(j));
        if (j >= 0)
            kernelled += sin_part.scaled(ExactScalar(-1));
        else
            kernelled += sin_part;
        ExactPoly cj = kernelled.trapezoid_mean(nodes).scaled(ExactScalar(pow_rational(r, -j)));
        if (!cj.is_zero()) out.emplace(j, cj);
    }
    return out;
}

// Floating-point variant over an arbitrary circle evaluator at fixed omega.
inline std::map<int, Multivector<double>> extract_slice_coefficients(
    const std::function<Multivector<double>(double x0, double p)>& eval,
    const std::vector<double>& omega, double r, int j_min, int j_max, int nodes = 0) {
    if (!(r > 0)) throw std::domain_error("extract_slice_coefficients: radius must be positive");
    const int n = static_cast<int>(omega.size());
    const int jabs = std::max(std::abs(j_min), std::abs(j_max));
    CircleQuadrature rule = circle_quadrature(jabs, nodes);
    Multivector<double> omv = detail::omega_multivector<double>(n, omega);
    std::vector<Multivector<double>> values;
    values.reserve(rule.angles.size());
    for (double t : rule.angles) values.push_back(eval(r * std::cos(t), r * std::sin(t)));
    std::map<int, Multivector<double>> out;
    for (int j = j_min; j <= j_max; ++j) {
        Multivector<double> acc(n);
        for (size_t i = 0; i < rule.angles.size(); ++i) {
            const double t = rule.angles[i];
            Multivector<double> kern =
                Multivector<double>::scalar(n, std::cos(j * t)) - omv.scaled(std::sin(j * t));
            acc += (kern * values[i]).scaled(rule.weight);
        }
        out.emplace(j, acc.scaled(std::pow(r, -j)));
    }
    return out;
}

// Harmonic components of a polynomial restricted to the sphere,
// C|_S = sum_k Y_k (Fischer-type decomposition against |x|^2 powers).
inline std::map<int, ExactPoly> project_harmonics(const ExactPoly& c) {
    return harmonic_decompose(c);
}

// ---------------------------------------------------------------------------
// Finite-difference slice monogenicity residual

struct SlicePoint {
    double x0 = 0;
    double p = 0;
    std::vector<double> omega;
};

// Max norm over samples of the central-difference estimate of
// (d_{x0} + omega d_p) f / 2.
inline double slice_monogenic_check(
    const std::function<Multivector<double>(double, double, const std::vector<double>&)>& f,
    const std::vector<SlicePoint>& samples, double h = 1e-5) {
    double worst = 0.0;
    for (const auto& s : samples) {
        const int n = static_cast<int>(s.omega.size());
        Multivector<double> dx0 =
            (f(s.x0 + h, s.p, s.omega) - f(s.x0 - h, s.p, s.omega)).scaled(0.5 / h);
        Multivector<double> dp =
            (f(s.x0, s.p + h, s.omega) - f(s.x0, s.p - h, s.omega)).scaled(0.5 / h);
        Multivector<double> omv = detail::omega_multivector<double>(n, s.omega);
        Multivector<double> resid = (dx0 + omv * dp).scaled(0.5);
        worst = std::max(worst, max_abs(resid));
    }
    return worst;
}

inline double slice_monogenic_check(const SliceSeries& f, const std::vector<SlicePoint>& samples,
                                    double h = 1e-5) {
    return slice_monogenic_check(
        [&](double x0, double p, const std::vector<double>& w) { return slice_eval(f, x0, p, w); },
        samples, h);
}

}  // namespace cliffrad
