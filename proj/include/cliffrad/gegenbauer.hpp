#pragma once

#include <map>
#include <stdexcept>

#include "cliffrad/rational.hpp"

namespace cliffrad {

// Gegenbauer polynomial C^nu_j in the monomial basis,
//   C^nu_j(z) = sum_{i=0}^{[j/2]} (-1)^i (nu)_{j-i} / (i! (j-2i)!) (2z)^{j-2i},
// so only monomials of the parity of j appear.
struct GegenbauerPoly {
    Rational nu;
    int j = 0;
    std::map<int, Rational> coeffs;  // exponent -> coefficient

    Rational coeff(int e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    Rational eval(const Rational& z) const {
        Rational s(0);
        for (const auto& [e, c] : coeffs) s += c * pow_rational(z, e);
        return s;
    }
};

inline GegenbauerPoly gegenbauer(const Rational& nu, int j) {
    if (j < 0) throw std::domain_error("gegenbauer: negative degree");
    GegenbauerPoly g;
    g.nu = nu;
    g.j = j;
    for (int i = 0; 2 * i <= j; ++i) {
        Rational c = pochhammer(nu, j - i) /
                     (factorial_rational(i) * factorial_rational(j - 2 * i));
        if (i % 2 == 1) c = -c;
        c *= pow_rational(Rational(2), j - 2 * i);
        if (!is_zero(c)) g.coeffs[j - 2 * i] = c;
    }
    return g;
}

// C^nu_{2l}(0) = (-1)^l (nu)_l / l!; zero at odd degree.
inline Rational gegenbauer_at_zero(const Rational& nu, int j) {
    if (j % 2 == 1) return Rational(0);
    int l = j / 2;
    Rational v = pochhammer(nu, l) / factorial_rational(l);
    return (l % 2 == 0) ? v : -v;
}

// C^nu_j(1) = (2nu)_j / j!.
inline Rational gegenbauer_at_one(const Rational& nu, int j) {
    return pochhammer(2 * nu, j) / factorial_rational(j);
}

}  // namespace cliffrad
