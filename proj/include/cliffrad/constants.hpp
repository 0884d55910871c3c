#pragma once

#include <string>
#include <vector>

#include "cliffrad/exact_scalar.hpp"
#include "cliffrad/gegenbauer.hpp"
#include "cliffrad/rational.hpp"

namespace cliffrad {

// mu^j_k, the normalization of the embedding factor X^(j)_k:
//   mu^{2l}_k   = (-1)^l / C^{(n-1)/2+k}_{2l}(0)
//   mu^{2l+1}_k = (-1)^l (n+2k+2l)/(n+2k-1) / C^{(n+1)/2+k}_{2l}(0)
// with mu^0_k = 1 so that X^(0)_k = 1.
inline Rational mu_const(int j, int k, int n) {
    if (j < 0 || k < 0) throw std::domain_error("mu_const: negative index");
    if (j == 0) return Rational(1);
    if (j % 2 == 0) {
        int l = j / 2;
        Rational c0 = gegenbauer_at_zero(make_rational(n - 1, 2) + k, 2 * l);
        Rational v = 1 / c0;
        return (l % 2 == 0) ? v : -v;
    }
    int l = (j - 1) / 2;
    Rational c0 = gegenbauer_at_zero(make_rational(n + 1, 2) + k, 2 * l);
    Rational v = Rational(n + 2 * k + 2 * l) / Rational(n + 2 * k - 1) / c0;
    return (l % 2 == 0) ? v : -v;
}

// Dual Radon eigenvalue on harmonics:
//   B(alpha,k) = 2^{-(alpha+k)} Gamma(alpha+k+1) Gamma(n/2)
//                / (Gamma((alpha+2)/2) Gamma((alpha+2k+n)/2)),
// defined for integer alpha > -k-1; vanishes exactly for alpha in {-2,-4,...}.
inline ExactScalar B_const(int alpha, int k, int n) {
    if (k < 0) throw std::domain_error("B_const: negative k");
    if (alpha <= -k - 1) throw std::domain_error("B_const: alpha outside validity region");
    ExactScalar v = ExactScalar(pow_rational(Rational(1, 2), alpha + k));
    v *= gamma_half(2 * (alpha + k + 1));
    v *= gamma_half(n);
    v *= inv_gamma_half(alpha + 2);
    v *= inv_gamma_half(alpha + 2 * k + n);
    return v;
}

// Radon eigenvalue on harmonics:
//   A(alpha,k) = 2^{k-alpha+1} pi^{n/2} Gamma(alpha-k)
//                / (Gamma((alpha+n-1)/2) Gamma((alpha-2k+1)/2)),
// defined for integer alpha > k; vanishes exactly for alpha in {1,3,...,2k-1}.
inline ExactScalar A_const(int alpha, int k, int n) {
    if (k < 0) throw std::domain_error("A_const: negative k");
    if (alpha <= k) throw std::domain_error("A_const: alpha outside validity region");
    ExactScalar v(pow_rational(Rational(2), k - alpha + 1), n);
    v *= gamma_half(2 * (alpha - k));
    v *= inv_gamma_half(alpha + n - 1);
    v *= inv_gamma_half(alpha - 2 * k + 1);
    return v;
}

// Constant of the dual Radon transform on a slice basis term: the Taylor-side
// index j decomposes as j = 2j' + s, s in {0,1}, and
//   c_{k,j} = (-1)^k B(2j', k+s).
// Never zero since 2j' >= 0 avoids B's zero locus.
inline ExactScalar c_const(int k, int j, int n) {
    if (k < 0 || j < 0) throw std::domain_error("c_const: negative index");
    int s = j % 2;
    int jp = (j - s) / 2;
    ExactScalar v = B_const(2 * jp, k + s, n);
    return (k % 2 == 0) ? v : -v;
}

// Constant of the Radon transform on a Laurent basis term: the Laurent-side
// index J decomposes as J = 2j + s - 1 (J even -> s=1, J odd -> s=0), and
//   d_{k,J} = (-1)^{J+k} (-1)^{s+1} A(2j+2k+2s, k+s).
// The (-1)^{J+k} factor comes from the Laurent basis element taking its
// embedding factor and spherical monogenic at the reflected argument
// (the Kelvin inversion evaluates at x^{-1}, whose vector part is -x_vec).
// Never zero since 2j+2k+2s > k+s avoids A's zero locus.
inline ExactScalar d_const(int k, int J, int n) {
    if (k < 0 || J < 0) throw std::domain_error("d_const: negative index");
    int s = (J % 2 == 0) ? 1 : 0;
    int j = (J + 1 - s) / 2;
    ExactScalar v = A_const(2 * j + 2 * k + 2 * s, k + s, n);
    if (s == 0) v = -v;
    return ((J + k) % 2 == 0) ? v : -v;
}

// Grid witness for the Gamma-ratio bounds
//   C1 a1^{j+k} <= Gamma(j+k+1)/(Gamma(j+1)Gamma(k+1+m)) <= C2 a2^{j+k}
// over half-integers j,k,m <= grid_max, for chosen a1 in (0,1), a2 in (2,inf).
struct GammaRatioBoundsReport {
    Rational a1, a2;
    double c1 = 0.0, c2 = 0.0;          // best constants found on the grid
    double c1_j = 0, c1_k = 0, c1_m = 0;  // witnesses (half-integer values)
    double c2_j = 0, c2_k = 0, c2_m = 0;
    bool ok = false;  // finite positive constants exist on the grid
};

inline double gamma_ratio_value(int twoj, int twok, int twom) {
    ExactScalar num = gamma_half(twoj + twok + 2);
    ExactScalar den = gamma_half(twoj + 2) * gamma_half(twok + 2 + twom);
    return (num / den).to_double();
}

inline GammaRatioBoundsReport verify_gamma_ratio_bounds(int grid_max,
                                                        const Rational& a1 = make_rational(1, 2),
                                                        const Rational& a2 = Rational(3)) {
    if (grid_max < 1) throw std::domain_error("verify_gamma_ratio_bounds: grid_max < 1");
    if (!(a1 > 0 && a1 < 1)) throw std::domain_error("a1 must lie in (0,1)");
    if (!(a2 > 2)) throw std::domain_error("a2 must exceed 2");
    GammaRatioBoundsReport rep;
    rep.a1 = a1;
    rep.a2 = a2;
    const double a1d = a1.get_d(), a2d = a2.get_d();
    bool first = true;
    for (int twoj = 0; twoj <= 2 * grid_max; ++twoj)
        for (int twok = 0; twok <= 2 * grid_max; ++twok)
            for (int twom = 0; twom <= 2 * grid_max; ++twom) {
                const double ratio = gamma_ratio_value(twoj, twok, twom);
                const double jk = (twoj + twok) / 2.0;
                const double lo = ratio / std::pow(a1d, jk);
                const double hi = ratio / std::pow(a2d, jk);
                if (first || lo < rep.c1) {
                    rep.c1 = lo;
                    rep.c1_j = twoj / 2.0;
                    rep.c1_k = twok / 2.0;
                    rep.c1_m = twom / 2.0;
                }
                if (first || hi > rep.c2) {
                    rep.c2 = hi;
                    rep.c2_j = twoj / 2.0;
                    rep.c2_k = twok / 2.0;
                    rep.c2_m = twom / 2.0;
                }
                first = false;
            }
    rep.ok = rep.c1 > 0 && std::isfinite(rep.c2);
    return rep;
}

}  // namespace cliffrad
