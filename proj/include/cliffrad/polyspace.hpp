#pragma once

#include <map>
#include <mutex>
#include <random>
#include <tuple>
#include <vector>

#include "cliffrad/constants.hpp"
#include "cliffrad/gegenbauer.hpp"
#include "cliffrad/linalg.hpp"
#include "cliffrad/polynomial.hpp"
#include "cliffrad/quadrature.hpp"

namespace cliffrad {

using ExactPoly = MvPolynomial<ExactScalar>;

// k-homogeneous polynomial on R^n annihilated by the Dirac operator.
struct SphericalMonogenic {
    int k = 0;
    ExactPoly poly;

    SphericalMonogenic() : poly(1, Arity::Vector) {}
    SphericalMonogenic(int degree, ExactPoly p) : k(degree), poly(std::move(p)) {}

    static SphericalMonogenic checked(int degree, ExactPoly p) {
        int d = 0;
        if (!p.is_homogeneous(&d)) throw std::invalid_argument("spherical monogenic: not homogeneous");
        if (!p.is_zero() && d != degree)
            throw std::invalid_argument("spherical monogenic: wrong homogeneity degree");
        if (p.arity() != Arity::Vector)
            throw std::invalid_argument("spherical monogenic: vector arity required");
        if (!p.dirac().is_zero())
            throw std::invalid_argument("spherical monogenic: Dirac operator does not vanish");
        return SphericalMonogenic(degree, std::move(p));
    }
};

namespace detail {

// Fischer constant: dirac(x_vec^l P) = c(l, deg P) x_vec^{l-1} P for
// monogenic P; -l for even l, -(l-1+n+2 deg) for odd l.
inline Rational fischer_c(int l, int deg, int n) {
    if (l % 2 == 0) return Rational(-l);
    return Rational(-(l - 1 + n + 2 * deg));
}

}  // namespace detail

// Embedding factor X^(j)_k as a genuine polynomial in (x0, x_vec):
//   X^(j)_k = mu^j_k ( |x|^j C^nu_j(x0/|x|)
//             + (n+2k-1)/(n+2k+j-1) |x|^{j-1} C^{nu+1}_{j-1}(x0/|x|) x_vec )
// with nu = (n-1)/2 + k; Gegenbauer parity makes every |x| power even.
namespace detail {

inline ExactPoly embedding_factor_compute(int j, int k, int n) {
    const Rational nu = make_rational(n - 1, 2) + k;
    const ExactPoly nsq = ExactPoly::norm_sq_poly(n, Arity::Paravector);
    const ExactPoly x0 = ExactPoly::x0(n);

    ExactPoly acc(n, Arity::Paravector);
    GegenbauerPoly g1 = gegenbauer(nu, j);
    for (const auto& [e, c] : g1.coeffs)  // e = j - 2i, |x|^{2i} remains
        acc += (x0.pow(e) * nsq.pow((j - e) / 2)).scaled(ExactScalar(c));

    GegenbauerPoly g2 = gegenbauer(nu + 1, j - 1);
    const Rational ratio = Rational(n + 2 * k - 1) / Rational(n + 2 * k + j - 1);
    ExactPoly vec_part(n, Arity::Paravector);
    for (const auto& [e, c] : g2.coeffs)
        vec_part += (x0.pow(e) * nsq.pow((j - 1 - e) / 2)).scaled(ExactScalar(c));
    acc += (vec_part * ExactPoly::vector_variable(n, Arity::Paravector)).scaled(ExactScalar(ratio));

    return acc.scaled(ExactScalar(mu_const(j, k, n)));
}

}  // namespace detail

inline ExactPoly embedding_factor(int j, int k, int n) {
    if (j < 0 || k < 0) throw std::domain_error("embedding_factor: negative index");
    if (j == 0) return ExactPoly::constant_scalar(n, Arity::Paravector, ExactScalar::one());
    static std::map<std::tuple<int, int, int>, ExactPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({j, k, n});
    if (it == cache.end())
        it = cache.emplace(std::make_tuple(j, k, n), detail::embedding_factor_compute(j, k, n)).first;
    return it->second;
}

// Cauchy-Kovalevskaya extension of a polynomial initial datum:
//   CK(f0)(x0, x_vec) = sum_m x0^m/m! (-dirac)^m f0,
// a finite sum that is monogenic and restricts to f0 at x0 = 0.
inline ExactPoly ck_extend(const ExactPoly& f0) {
    if (f0.arity() != Arity::Vector) throw std::invalid_argument("ck_extend: vector arity required");
    if (f0.denom_pow() != 0) throw std::invalid_argument("ck_extend: polynomial input required");
    ExactPoly acc = f0.to_paravector();
    ExactPoly deriv = f0;
    Rational fact(1);
    const ExactPoly x0 = ExactPoly::x0(f0.n());
    for (int m = 1; !deriv.is_zero(); ++m) {
        deriv = -deriv.dirac();
        if (deriv.is_zero()) break;
        fact *= m;
        acc += (x0.pow(m) * deriv.to_paravector()).scaled(ExactScalar(1 / fact));
    }
    return acc;
}

// Fischer decomposition of a k-homogeneous polynomial on R^n:
//   f = sum_{j=0}^k x_vec^j P_{k-j,j},  P monogenic of degree k-j,
// solved by the triangular system obtained from repeated Dirac application.
inline std::vector<SphericalMonogenic> fischer_decompose(const ExactPoly& f) {
    if (f.arity() != Arity::Vector)
        throw std::invalid_argument("fischer_decompose: vector arity required");
    int k = 0;
    if (!f.is_homogeneous(&k))
        throw std::invalid_argument("fischer_decompose: input not homogeneous");
    const int n = f.n();
    if (f.is_zero()) return {SphericalMonogenic(0, ExactPoly::zero(n, Arity::Vector))};

    std::vector<ExactPoly> g;  // g[m] = dirac^m f
    g.reserve(k + 1);
    g.push_back(f);
    for (int m = 1; m <= k; ++m) g.push_back(g.back().dirac());

    // gamma(j, m) = prod_{i=0}^{m-1} c(j-i, k-j): the factor picked up by the
    // x_vec^j P_{k-j} summand after m Dirac applications.
    auto gamma = [&](int j, int m) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= detail::fischer_c(j - i, k - j, n);
        return r;
    };

    const ExactPoly xv = ExactPoly::vector_variable(n, Arity::Vector);
    std::vector<ExactPoly> q(k + 1, ExactPoly::zero(n, Arity::Vector));
    for (int j = k; j >= 0; --j) {
        ExactPoly rhs = g[j];
        for (int jp = j + 1; jp <= k; ++jp)
            rhs -= (xv.pow(jp - j) * q[jp]).scaled(ExactScalar(gamma(jp, j)));
        q[j] = rhs.scaled(ExactScalar(1 / gamma(j, j)));
    }

    std::vector<SphericalMonogenic> out;
    out.reserve(k + 1);
    for (int j = 0; j <= k; ++j) out.emplace_back(k - j, std::move(q[j]));
    return out;
}

// Splitting of a k-homogeneous harmonic into spherical monogenics,
//   Y = P_k + x_vec P_{k-1},  P_{k-1} = -dirac(Y)/(n+2k-2).
inline std::pair<SphericalMonogenic, SphericalMonogenic> harmonic_split(const ExactPoly& y) {
    if (y.arity() != Arity::Vector)
        throw std::invalid_argument("harmonic_split: vector arity required");
    int k = 0;
    if (!y.is_homogeneous(&k)) throw std::invalid_argument("harmonic_split: input not homogeneous");
    if (!y.laplacian().is_zero())
        throw std::invalid_argument("harmonic_split: input not harmonic");
    const int n = y.n();
    if (k == 0)
        return {SphericalMonogenic(0, y), SphericalMonogenic(0, ExactPoly::zero(n, Arity::Vector))};
    ExactPoly pkm1 = y.dirac().scaled(ExactScalar(Rational(-1) / Rational(n + 2 * k - 2)));
    ExactPoly pk = y - ExactPoly::vector_variable(n, Arity::Vector) * pkm1;
    return {SphericalMonogenic(k, std::move(pk)), SphericalMonogenic(k - 1, std::move(pkm1))};
}

namespace detail {

inline std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    // lexicographic enumeration by recursion
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (n > 0 && d >= 0) rec(rec, 0, d);
    return out;
}

// Flattens an exact polynomial (rational coefficients assumed) over the
// monomial list x blade slots.
inline RatVector flatten_poly(const ExactPoly& p,
                              const std::map<std::vector<int>, size_t>& mono_index, int n) {
    RatVector v(mono_index.size() << n, Rational(0));
    for (const auto& [k, c] : p.terms()) {
        auto it = mono_index.find(k);
        if (it == mono_index.end()) throw std::logic_error("flatten_poly: unexpected monomial");
        for (const auto& [mask, s] : c.coeffs()) {
            if (s.h() != 0) throw std::logic_error("flatten_poly: non-rational coefficient");
            v[(it->second << n) | mask] = s.q();
        }
    }
    return v;
}

}  // namespace detail

// Spanning, linearly independent (over R_n as a right module) set of
// k-homogeneous spherical monogenics: Fischer projections of the scalar
// monomial basis, deduplicated by exact rank.  The module dimension is
// C(n+k-1, k) - C(n+k-2, k-1).
inline std::vector<SphericalMonogenic> monogenic_basis(int k, int n) {
    static std::map<std::pair<int, int>, std::vector<SphericalMonogenic>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto found = cache.find({k, n});
    if (found != cache.end()) return found->second;

    std::vector<SphericalMonogenic> basis;
    if (k == 0) {
        basis.emplace_back(0, ExactPoly::constant_scalar(n, Arity::Vector, ExactScalar::one()));
    } else {
        auto monos = detail::monomials_of_degree(n, k);
        std::map<std::vector<int>, size_t> mono_index;
        for (size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = i;
        SpanTracker span;
        for (const auto& mono : monos) {
            ExactPoly f(n, Arity::Vector);
            f.add_term(mono, Multivector<ExactScalar>::scalar(n, ExactScalar::one()));
            ExactPoly proj = fischer_decompose(f)[0].poly;  // the monogenic top part
            if (proj.is_zero()) continue;
            if (!span.contains(detail::flatten_poly(proj, mono_index, n))) {
                basis.emplace_back(k, proj);
                // absorb the whole right R_n-orbit of the accepted element
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    ExactPoly pm = proj.right_mul(
                        Multivector<ExactScalar>::blade(n, mask, ExactScalar::one()));
                    span.add(detail::flatten_poly(pm, mono_index, n));
                }
            }
        }
    }
    cache[{k, n}] = basis;
    return basis;
}

namespace detail {

// Unique g with Delta(|x|^2 g) = rhs on homogeneous polynomials of the same
// degree as g; exact linear solve in monomial space, blade components share
// the matrix.
inline ExactPoly solve_delta_xsq(const ExactPoly& rhs, int deg) {
    const int n = rhs.n();
    auto monos = monomials_of_degree(n, deg);
    std::map<std::vector<int>, size_t> mono_index;
    for (size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = i;
    const size_t dim = monos.size();

    const ExactPoly nsq = ExactPoly::norm_sq_poly(n, Arity::Vector);
    RatMatrix a(dim, RatVector(dim, Rational(0)));
    for (size_t col = 0; col < dim; ++col) {
        ExactPoly g(n, Arity::Vector);
        g.add_term(monos[col], Multivector<ExactScalar>::scalar(n, ExactScalar::one()));
        ExactPoly img = (nsq * g).laplacian();
        for (const auto& [k, c] : img.terms())
            a[mono_index.at(k)][col] = c.scalar_part().q();
    }

    // Right-hand sides per blade; strip a common pi power if one is present.
    int h = 0;
    bool h_set = false;
    for (const auto& [k, c] : rhs.terms())
        for (const auto& [mask, s] : c.coeffs()) {
            if (!h_set) {
                h = s.h();
                h_set = true;
            } else if (s.h() != h) {
                throw std::invalid_argument("harmonic decomposition: mixed pi powers");
            }
        }
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
    RatMatrix b(dim, RatVector(masks.size(), Rational(0)));
    for (const auto& [k, c] : rhs.terms())
        for (const auto& [mask, s] : c.coeffs()) b[mono_index.at(k)][mask] = s.q();
    RatMatrix x = solve_exact(std::move(a), std::move(b));

    ExactPoly g(n, Arity::Vector);
    for (size_t row = 0; row < dim; ++row) {
        Multivector<ExactScalar> coeff(n);
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (!is_zero(x[row][mask])) coeff.set(mask, ExactScalar(x[row][mask], h));
        g.add_term(monos[row], coeff);
    }
    return g;
}

}  // namespace detail

// Decomposition of a (not necessarily homogeneous) polynomial on R^n as
// q = sum |x|^{2m} h_{m,d}, h harmonic; returns the harmonics collected by
// degree.  Restricting to the sphere gives q|_S = sum_k Y_k.
inline std::map<int, ExactPoly> harmonic_decompose(const ExactPoly& q) {
    if (q.arity() != Arity::Vector)
        throw std::invalid_argument("harmonic_decompose: vector arity required");
    if (q.denom_pow() != 0)
        throw std::invalid_argument("harmonic_decompose: polynomial input required");
    const int n = q.n();
    std::map<int, ExactPoly> out;
    auto add_harmonic = [&](int deg, const ExactPoly& h) {
        if (h.is_zero()) return;
        auto it = out.find(deg);
        if (it == out.end())
            out.emplace(deg, h);
        else {
            it->second += h;
            if (it->second.is_zero()) out.erase(it);
        }
    };

    // split into homogeneous parts
    std::map<int, ExactPoly> parts;
    for (const auto& [k, c] : q.terms()) {
        int d = 0;
        for (int e : k) d += e;
        parts.try_emplace(d, ExactPoly(n, Arity::Vector)).first->second.add_term(k, c);
    }
    const ExactPoly nsq = ExactPoly::norm_sq_poly(n, Arity::Vector);
    for (auto& [d, part] : parts) {
        ExactPoly cur = part;
        for (int deg = d; deg >= 0; deg -= 2) {
            if (cur.is_zero()) break;
            if (deg <= 1) {
                add_harmonic(deg, cur);
                break;
            }
            ExactPoly g = detail::solve_delta_xsq(cur.laplacian(), deg - 2);
            add_harmonic(deg, cur - nsq * g);
            cur = g;
        }
    }
    return out;
}

// Normalized L2(S^{n-1}) inner product (1/A_n) int conj(f) g domega via exact
// sphere moments; multivector-valued.
inline Multivector<ExactScalar> l2_inner(const ExactPoly& f, const ExactPoly& g) {
    if (f.arity() != Arity::Vector || g.arity() != Arity::Vector)
        throw std::invalid_argument("l2_inner: vector arity required");
    if (f.denom_pow() != 0 || g.denom_pow() != 0)
        throw std::invalid_argument("l2_inner: polynomial (non-rational-form) input required");
    const int n = f.n();
    ExactPoly conj_f(n, Arity::Vector);
    for (const auto& [k, c] : f.terms()) conj_f.add_term(k, conjugate(c));
    ExactPoly prod = conj_f * g;
    Multivector<ExactScalar> acc(n);
    for (const auto& [k, c] : prod.terms()) {
        ExactScalar mom = sphere_moment(k, n);
        if (mom.is_zero()) continue;
        acc += c.scaled(mom);
    }
    return acc;
}

// ||g||_{L2}^2 = scalar part of <g, g>.
inline ExactScalar l2_norm_sq(const ExactPoly& g) { return l2_inner(g, g).scalar_part(); }

// Lower estimate of sup_{S^{n-1}} |f| from a dense sample (quadrature nodes
// plus seeded random directions).
inline double sup_norm_estimate(const MvPolynomial<double>& f, int samples = 2048,
                                unsigned seed = 12345) {
    if (f.arity() != Arity::Vector)
        throw std::invalid_argument("sup_norm_estimate: vector arity required");
    const int n = f.n();
    double best = 0.0;
    auto eval_at = [&](const std::vector<double>& w) {
        Multivector<double> val = f.eval(w);
        double s = 0.0;
        for (const auto& [m, v] : val.coeffs()) s += v * v;
        best = std::max(best, std::sqrt(s));
    };
    SphereQuadrature q = build_sphere_quadrature(std::min(n, 5), 20);
    if (q.n == n)
        for (const auto& node : q.nodes) eval_at(node);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        std::vector<double> w(n);
        double norm = 0.0;
        for (auto& x : w) {
            x = gauss(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) continue;
        for (auto& x : w) x /= norm;
        eval_at(w);
    }
    return best;
}

}  // namespace cliffrad
