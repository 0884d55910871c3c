#pragma once

#include <functional>
#include <string>

#include "cliffrad/constants.hpp"
#include "cliffrad/series.hpp"

namespace cliffrad {

// ---------------------------------------------------------------------------
// Exact calculus on the slice domain R^2 x S^{n-1}

// Polynomial in (x0, p, omega_1..omega_n) with Multivector coefficients.
// All omega dependence sits in the scalar monomials; the Clifford content of
// omega powers is folded into the coefficients at construction time.  This is
// the exact-moment route for the dual Radon transform.
struct SliceDomainPoly {
    int n;
    std::map<std::vector<int>, Multivector<ExactScalar>> terms;  // [x0, p, w1..wn]

    explicit SliceDomainPoly(int dim) : n(dim) {}

    static SliceDomainPoly zero(int n) { return SliceDomainPoly(n); }
    static SliceDomainPoly constant(int n, const Multivector<ExactScalar>& c) {
        SliceDomainPoly r(n);
        r.add_term(std::vector<int>(n + 2, 0), c);
        return r;
    }
    static SliceDomainPoly scalar_one(int n) {
        return constant(n, Multivector<ExactScalar>::scalar(n, ExactScalar::one()));
    }
    static SliceDomainPoly monomial(int n, int slot) {
        SliceDomainPoly r(n);
        std::vector<int> key(n + 2, 0);
        key[slot] = 1;
        r.add_term(key, Multivector<ExactScalar>::scalar(n, ExactScalar::one()));
        return r;
    }
    static SliceDomainPoly var_x0(int n) { return monomial(n, 0); }
    static SliceDomainPoly var_p(int n) { return monomial(n, 1); }
    static SliceDomainPoly var_omega(int n, int i) { return monomial(n, 1 + i); }  // 1-based i
    // The 1-vector omega = sum omega_i e_i.
    static SliceDomainPoly omega_vector(int n) {
        SliceDomainPoly r(n);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> key(n + 2, 0);
            key[1 + i] = 1;
            r.add_term(key, Multivector<ExactScalar>::basis_vector(n, i));
        }
        return r;
    }

    void add_term(const std::vector<int>& key, const Multivector<ExactScalar>& c) {
        if (static_cast<int>(key.size()) != n + 2)
            throw std::invalid_argument("slice domain monomial arity mismatch");
        if (c.is_zero()) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    SliceDomainPoly operator-() const {
        SliceDomainPoly r(n);
        for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
        return r;
    }
    SliceDomainPoly& operator+=(const SliceDomainPoly& o) {
        for (const auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }
    SliceDomainPoly& operator-=(const SliceDomainPoly& o) {
        for (const auto& [k, c] : o.terms) add_term(k, -c);
        return *this;
    }
    friend SliceDomainPoly operator+(SliceDomainPoly a, const SliceDomainPoly& b) { return a += b; }
    friend SliceDomainPoly operator-(SliceDomainPoly a, const SliceDomainPoly& b) { return a -= b; }
    friend SliceDomainPoly operator*(const SliceDomainPoly& a, const SliceDomainPoly& b) {
        SliceDomainPoly r(a.n);
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms) {
                std::vector<int> k(ka.size());
                for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
                r.add_term(k, ca * cb);
            }
        return r;
    }
    SliceDomainPoly pow(int e) const {
        SliceDomainPoly acc = scalar_one(n);
        for (int i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }
    SliceDomainPoly scaled(const ExactScalar& s) const {
        SliceDomainPoly r(n);
        for (const auto& [k, c] : terms) r.add_term(k, c.scaled(s));
        return r;
    }

    SliceDomainPoly derivative(int slot) const {  // slot 0 = x0, 1 = p
        SliceDomainPoly r(n);
        for (const auto& [k, c] : terms) {
            if (k[slot] == 0) continue;
            std::vector<int> kk = k;
            kk[slot] -= 1;
            r.add_term(kk, c.scaled(ExactScalar(k[slot])));
        }
        return r;
    }

    Multivector<double> eval(double x0, double p, const std::vector<double>& w) const {
        Multivector<double> acc(n);
        for (const auto& [k, c] : terms) {
            double mono = std::pow(x0, k[0]) * std::pow(p, k[1]);
            for (int i = 0; i < n; ++i) mono *= std::pow(w[i], k[2 + i]);
            for (const auto& [mask, v] : c.coeffs()) acc.add(mask, v.to_double() * mono);
        }
        return acc;
    }

    // The slice basis function (x0 + omega p)^j omega^k P(omega), j >= 0.
    static SliceDomainPoly from_slice_term(int j, int k, const ExactPoly& p) {
        if (j < 0) throw std::invalid_argument("from_slice_term: negative power");
        const int n = p.n();
        SliceDomainPoly base = var_x0(n) + omega_vector(n) * var_p(n);
        SliceDomainPoly acc = base.pow(j) * omega_vector(n).pow(k);
        // P's x_vec monomials become omega monomials
        SliceDomainPoly pw(n);
        for (const auto& [key, c] : p.terms()) {
            std::vector<int> kk(n + 2, 0);
            for (int i = 0; i < n; ++i) kk[2 + i] = key[i];
            pw.add_term(kk, c);
        }
        return acc * pw;
    }

    // Exact dual Radon transform: substitutes p -> (x_vec, omega), averages
    // omega monomials by their sphere moments, and returns a polynomial in
    // (x0, x_vec).
    ExactPoly dual_radon_moment() const {
        ExactPoly out(n, Arity::Paravector);
        for (const auto& [key, c] : terms) {
            const int a0 = key[0], ap = key[1];
            // (x, omega)^ap = sum_{|d| = ap} ap!/d! x^d omega^d
            std::vector<int> delta(n, 0);
            auto rec = [&](auto&& self, int pos, int rem, const Rational& mult) -> void {
                if (pos == n - 1) {
                    delta[pos] = rem;
                    Rational coef = mult / factorial_rational(rem);
                    std::vector<int> wexp(n);
                    for (int i = 0; i < n; ++i) wexp[i] = key[2 + i] + delta[i];
                    ExactScalar mom = sphere_moment(wexp, n);
                    if (!mom.is_zero()) {
                        std::vector<int> xkey(n + 1, 0);
                        xkey[0] = a0;
                        for (int i = 0; i < n; ++i) xkey[1 + i] = delta[i];
                        out.add_term(xkey, c.scaled(mom * ExactScalar(coef)));
                    }
                    return;
                }
                for (int e = rem; e >= 0; --e) {
                    delta[pos] = e;
                    self(self, pos + 1, rem - e, mult / factorial_rational(e));
                }
            };
            rec(rec, 0, ap, factorial_rational(ap));
            (void)a0;
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Dual Radon transform S

// Exact symbolic action on a slice series supported on j >= 0: terms with
// j < k are annihilated, terms with j >= k land on the Taylor term
// (j-k, k) scaled by c_{k,j-k}.
inline MonogenicSeries dual_radon_symbolic(const SliceSeries& f) {
    MonogenicSeries out(f.n, SeriesPart::Taylor);
    for (const auto& [key, poly] : f.terms) {
        const int j = key.first, k = key.second;
        if (j < 0)
            throw std::invalid_argument(
                "dual_radon_symbolic: negative powers (S is defined on S_0 only)");
        if (j < k) continue;  // kernel of S
        out.add_term(j - k, k, poly.scaled(c_const(k, j - k, f.n)));
    }
    return out;
}

// Inverse of S restricted to SM_0: Taylor term (j,k) lifts to the slice term
// (j+k, k) scaled by 1/c_{k,j}.
inline SliceSeries dual_radon_inverse(const MonogenicSeries& g) {
    if (g.part != SeriesPart::Taylor)
        throw std::invalid_argument("dual_radon_inverse: Taylor series required");
    SliceSeries out(g.n);
    for (const auto& [key, poly] : g.terms) {
        const int j = key.first, k = key.second;
        out.add_term(j + k, k, poly.scaled(ExactScalar::one() / c_const(k, j, g.n)));
    }
    return out;
}

// S_0 = ker(S) + SM_0: splits by j < k versus j >= k.
inline std::pair<SliceSeries, SliceSeries> theoremA_decompose(const SliceSeries& f) {
    SliceSeries ker(f.n), sm0(f.n);
    for (const auto& [key, poly] : f.terms) {
        if (key.first < 0)
            throw std::invalid_argument("theoremA_decompose: S_0 support required (j >= 0)");
        (key.first < key.second ? ker : sm0).terms.emplace(key, poly);
    }
    return {ker, sm0};
}

// Quadrature evaluation of S[phi](x) = (1/A_n) int phi((x,omega), omega).
inline Multivector<double> dual_radon_numeric(
    const std::function<Multivector<double>(double, const std::vector<double>&)>& phi,
    const std::vector<double>& x, const SphereQuadrature& quad) {
    Multivector<double> acc(quad.n);
    for (size_t i = 0; i < quad.nodes.size(); ++i) {
        double p = 0.0;
        for (int d = 0; d < quad.n; ++d) p += x[d] * quad.nodes[i][d];
        Multivector<double> v = phi(p, quad.nodes[i]);
        for (const auto& [m, c] : v.coeffs()) acc.add(m, c * quad.weights[i]);
    }
    return acc;
}

struct DualHarmonicCheck {
    ExactScalar constant;   // B(alpha, k)
    bool exact_match = false;  // even alpha only
    double float_dev = 0.0;    // quadrature deviation (max abs over samples)
};

// Checks S[|p|^alpha P_k(p omega)] = B(alpha,k) |x|^alpha P_k(x): exact via
// sphere moments for even alpha, quadrature comparison for odd alpha.
inline DualHarmonicCheck dual_radon_harmonic(int alpha, const ExactPoly& p_k,
                                             const std::vector<std::vector<double>>& sample_x,
                                             int quad_order = 40) {
    int k = 0;
    if (!p_k.is_homogeneous(&k)) throw std::invalid_argument("dual_radon_harmonic: P_k not homogeneous");
    if (!p_k.laplacian().is_zero())
        throw std::invalid_argument("dual_radon_harmonic: P_k not harmonic");
    if (alpha <= -k - 1) throw std::domain_error("dual_radon_harmonic: alpha outside validity");
    const int n = p_k.n();
    DualHarmonicCheck out;
    out.constant = B_const(alpha, k, n);

    if (alpha % 2 == 0) {
        // |p|^alpha P_k(p omega) = p^{alpha+k} P_k(omega), a polynomial.
        SliceDomainPoly phi = SliceDomainPoly::var_p(n).pow(alpha + k);
        SliceDomainPoly pw(n);
        for (const auto& [key, c] : p_k.terms()) {
            std::vector<int> kk(n + 2, 0);
            for (int i = 0; i < n; ++i) kk[2 + i] = key[i];
            pw.add_term(kk, c);
        }
        ExactPoly lhs = (phi * pw).dual_radon_moment();
        ExactPoly rhs(n, Arity::Paravector);
        if (alpha >= 0) {
            rhs = (ExactPoly::norm_sq_poly(n, Arity::Vector).pow(alpha / 2) * p_k)
                      .to_paravector()
                      .scaled(out.constant);
        } else {
            // negative even alpha: compare |x|^{-alpha} S[phi] with B P_k
            lhs = ExactPoly::norm_sq_poly(n, Arity::Paravector).pow(-alpha / 2) * lhs;
            rhs = p_k.to_paravector().scaled(out.constant);
        }
        out.exact_match = (lhs == rhs);
        return out;
    }

    SphereQuadrature quad = build_sphere_quadrature(n, quad_order);
    MvPolynomial<double> pd = to_double_poly(p_k);
    const double bval = out.constant.to_double();
    for (const auto& x : sample_x) {
        double xnorm = 0.0;
        for (double v : x) xnorm += v * v;
        xnorm = std::sqrt(xnorm);
        auto phi = [&](double p, const std::vector<double>& w) {
            std::vector<double> pw(n);
            for (int i = 0; i < n; ++i) pw[i] = p * w[i];
            return pd.eval(pw).scaled(std::pow(std::abs(p), alpha));
        };
        Multivector<double> lhs = dual_radon_numeric(phi, x, quad);
        Multivector<double> rhs = pd.eval(x).scaled(bval * std::pow(xnorm, alpha));
        out.float_dev = std::max(out.float_dev, max_abs(lhs - rhs));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Radon transform R

// Exact symbolic action on a Laurent series: the term (J,k) maps to the
// slice term (-(J+1+k), k) scaled by d_{k,J}; the image lies in SM_inf.
inline SliceSeries radon_symbolic(const MonogenicSeries& f) {
    if (f.part != SeriesPart::Laurent)
        throw std::invalid_argument(
            "radon_symbolic: Laurent series required (R diverges on entire functions)");
    SliceSeries out(f.n);
    for (const auto& [key, poly] : f.terms) {
        const int J = key.first, k = key.second;
        out.add_term(-(J + 1 + k), k, poly.scaled(d_const(k, J, f.n)));
    }
    return out;
}

// Inverse of R: slice term (j,k) with j < -k pulls back to the Laurent term
// (-j-1-k, k) scaled by 1/d_{k,J}.
inline MonogenicSeries radon_inverse(const SliceSeries& f) {
    if (!membership(f).in_SMinf)
        throw std::invalid_argument("radon_inverse: support must satisfy j < -k (SM_inf)");
    MonogenicSeries out(f.n, SeriesPart::Laurent);
    for (const auto& [key, poly] : f.terms) {
        const int j = key.first, k = key.second;
        const int J = -j - 1 - k;
        out.add_term(J, k, poly.scaled(ExactScalar::one() / d_const(k, J, f.n)));
    }
    return out;
}

// Numeric Radon transform at (x0, p, omega), |omega| = 1: hyperplane integral
// of f(x0, .) over L(omega, p).
inline IntegrationResult radon_numeric(
    const std::function<Multivector<double>(double, const std::vector<double>&)>& f, double x0,
    double p, const std::vector<double>& omega, const HyperplaneOptions& opts = {}) {
    const int n = static_cast<int>(omega.size());
    auto g = [&](const std::vector<double>& xv) { return f(x0, xv); };
    return hyperplane_integrate(g, omega, p, n, opts);
}

// General (p, xi) version for non-unit xi, following the measure convention
// d(x, xi) ^ dsigma = dx: R[f](p, xi) = R[f](p/|xi|, xi/|xi|)/|xi|.
inline IntegrationResult radon_numeric_general(
    const std::function<Multivector<double>(double, const std::vector<double>&)>& f, double x0,
    double p, const std::vector<double>& xi, const HyperplaneOptions& opts = {}) {
    double norm = 0.0;
    for (double v : xi) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::invalid_argument("radon_numeric_general: xi must be nonzero");
    std::vector<double> omega(xi.size());
    for (size_t i = 0; i < xi.size(); ++i) omega[i] = xi[i] / norm;
    IntegrationResult r = radon_numeric(f, x0, p / norm, omega, opts);
    r.value = r.value.scaled(1.0 / norm);
    r.error /= norm;
    return r;
}

// Per-term record of a symbolic-versus-oracle comparison.
struct TransformReportEntry {
    int j = 0;
    int k = 0;
    std::string description;
    ExactScalar constant;
    int samples = 0;
    double max_rel_dev = 0.0;
};

struct TransformReport {
    std::vector<TransformReportEntry> entries;
    double max_rel_dev() const {
        double m = 0.0;
        for (const auto& e : entries) m = std::max(m, e.max_rel_dev);
        return m;
    }
};

// Checks R[P_k(x)/|x|^{alpha+n-1}] = A(alpha,k) P_k(p xi) |xi|^{alpha-2k-1} / |p|^alpha
// at p = 1, |xi| = 1 over sampled directions; returns the relative deviation
// against the exact constant.
inline TransformReportEntry radon_harmonic_check(int alpha, const ExactPoly& p_k,
                                                 const std::vector<std::vector<double>>& omegas,
                                                 const HyperplaneOptions& opts = {}) {
    int k = 0;
    if (!p_k.is_homogeneous(&k)) throw std::invalid_argument("radon_harmonic_check: not homogeneous");
    if (!p_k.laplacian().is_zero())
        throw std::invalid_argument("radon_harmonic_check: P_k not harmonic");
    if (alpha <= k) throw std::domain_error("radon_harmonic_check: alpha outside validity");
    const int n = p_k.n();
    MvPolynomial<double> pd = to_double_poly(p_k);
    TransformReportEntry entry;
    entry.j = alpha;
    entry.k = k;
    entry.description = "radon harmonic alpha=" + std::to_string(alpha) + " k=" + std::to_string(k);
    entry.constant = A_const(alpha, k, n);
    const double aval = entry.constant.to_double();
    for (const auto& w : omegas) {
        auto f = [&](double, const std::vector<double>& xv) {
            double nsq = 0.0;
            for (double v : xv) nsq += v * v;
            return pd.eval(xv).scaled(std::pow(nsq, -(alpha + n - 1) / 2.0));
        };
        Multivector<double> lhs = radon_numeric(f, 0.0, 1.0, w, opts).value;
        Multivector<double> rhs = pd.eval(w).scaled(aval);
        // absolute deviation when the constant sits in the zero locus
        double scale = std::max(max_abs(rhs), std::abs(aval));
        if (scale < 1e-10) scale = 1.0;
        entry.max_rel_dev = std::max(entry.max_rel_dev, max_abs(lhs - rhs) / scale);
        ++entry.samples;
    }
    return entry;
}

// ---------------------------------------------------------------------------
// Intertwining identities

// Exact polynomial check of the dual-side derivative identities
//   S[omega_j d_p phi] = d_{x_j} S[phi]   (j = 1..n)
//   S[d_{x0} phi]      = d_{x0} S[phi]
// Returns true when all hold exactly.
inline bool intertwine_dual_exact(const SliceDomainPoly& phi) {
    const int n = phi.n;
    ExactPoly s_phi = phi.dual_radon_moment();
    if (!(phi.derivative(0).dual_radon_moment() == s_phi.derivative(0))) return false;
    SliceDomainPoly dp = phi.derivative(1);
    for (int j = 1; j <= n; ++j) {
        SliceDomainPoly lhs = SliceDomainPoly::var_omega(n, j) * dp;
        if (!(lhs.dual_radon_moment() == s_phi.derivative(j))) return false;
    }
    return true;
}

// Exact check that D(S[phi]) equals S[(d_{x0} + omega d_p) phi] (twice the
// halved Cauchy-Riemann operator of Definition 2.2).
inline bool intertwine_dual_dirac_exact(const SliceDomainPoly& phi) {
    ExactPoly lhs = phi.dual_radon_moment().dirac();
    SliceDomainPoly rhs_arg = phi.derivative(0) +
                              SliceDomainPoly::omega_vector(phi.n) * phi.derivative(1);
    return lhs == rhs_arg.dual_radon_moment();
}

// Finite-difference residual of d_omega R[f] = 0 for f in M_inf, sampled at
// (x0, p, omega) triples.
inline double intertwine_radon_fd(const MonogenicSeries& f, const std::vector<SlicePoint>& samples,
                                  double h = 1e-4, const HyperplaneOptions& opts = {}) {
    if (f.part != SeriesPart::Laurent)
        throw std::invalid_argument("intertwine_radon_fd: Laurent series required");
    auto fx = [&](double x0, const std::vector<double>& xv) {
        Paravector<double> x(x0, xv);
        return monogenic_eval(f, x);
    };
    auto rf = [&](double x0, double p, const std::vector<double>& w) {
        return radon_numeric(fx, x0, p, w, opts).value;
    };
    return slice_monogenic_check(rf, samples, h);
}

// Finite-difference residual of d_p R[x_j f] = -d_{xi_j} R[f] (Lebesgue
// measure bookkeeping on non-unit xi included).
inline double intertwine_radon_derivative(
    const std::function<Multivector<double>(double, const std::vector<double>&)>& f, int j,
    double x0, double p, const std::vector<double>& xi, double h = 1e-4,
    const HyperplaneOptions& opts = {}) {
    auto xj_f = [&](double t, const std::vector<double>& xv) {
        return f(t, xv).scaled(xv[j - 1]);
    };
    Multivector<double> dp = (radon_numeric_general(xj_f, x0, p + h, xi, opts).value -
                              radon_numeric_general(xj_f, x0, p - h, xi, opts).value)
                                 .scaled(0.5 / h);
    std::vector<double> xip = xi, xim = xi;
    xip[j - 1] += h;
    xim[j - 1] -= h;
    Multivector<double> dxi = (radon_numeric_general(f, x0, p, xip, opts).value -
                               radon_numeric_general(f, x0, p, xim, opts).value)
                                  .scaled(0.5 / h);
    return max_abs(dp + dxi);
}

}  // namespace cliffrad
