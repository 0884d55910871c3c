#pragma once

#include <cstdlib>
#include <map>

#include "cliffrad/polynomial.hpp"

namespace cliffrad {

using ExactPoly = MvPolynomial<ExactScalar>;

// Finite trigonometric polynomial F(t) = sum_m cos(mt) a_m + sin(mt) b_m with
// MvPolynomial coefficients (m >= 0; b_0 unused).  Products against cos(jt)
// and sin(jt) stay in the class, and the N-node trapezoid mean has the exact
// closed form sum_{N | m} a_m, which is what makes the Cauchy coefficient
// extraction exact.
struct TrigPoly {
    int n;
    Arity arity;
    std::map<int, ExactPoly> cosc;
    std::map<int, ExactPoly> sinc;

    explicit TrigPoly(int dim, Arity a = Arity::Vector) : n(dim), arity(a) {}

    void add_cos(int m, const ExactPoly& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = cosc.try_emplace(m, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) cosc.erase(it);
        }
    }
    void add_sin(int m, const ExactPoly& p) {
        if (m == 0 || p.is_zero()) return;
        auto [it, fresh] = sinc.try_emplace(m, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) sinc.erase(it);
        }
    }

    TrigPoly& operator+=(const TrigPoly& o) {
        for (const auto& [m, p] : o.cosc) add_cos(m, p);
        for (const auto& [m, p] : o.sinc) add_sin(m, p);
        return *this;
    }

    // Multiplication by cos(jt) / sin(jt) via product-to-sum identities; the
    // signed frequency m-j folds back with sin(-x) = -sin(x).
    TrigPoly mul_cos(int j) const {
        TrigPoly r(n, arity);
        const ExactScalar half(make_rational(1, 2));
        for (const auto& [m, p] : cosc) {
            ExactPoly hp = p.scaled(half);
            r.add_cos(m + j, hp);
            r.add_cos(std::abs(m - j), hp);
        }
        for (const auto& [m, p] : sinc) {
            ExactPoly hp = p.scaled(half);
            r.add_sin(m + j, hp);
            int d = m - j;
            if (d >= 0)
                r.add_sin(d, hp);
            else
                r.add_sin(-d, -hp);
        }
        return r;
    }
    TrigPoly mul_sin(int j) const {
        TrigPoly r(n, arity);
        const ExactScalar half(make_rational(1, 2));
        for (const auto& [m, p] : cosc) {
            // cos(mt) sin(jt) = (sin((m+j)t) - sin((m-j)t))/2
            ExactPoly hp = p.scaled(half);
            r.add_sin(m + j, hp);
            int d = m - j;
            if (d >= 0)
                r.add_sin(d, -hp);
            else
                r.add_sin(-d, hp);
        }
        for (const auto& [m, p] : sinc) {
            // sin(mt) sin(jt) = (cos((m-j)t) - cos((m+j)t))/2
            ExactPoly hp = p.scaled(half);
            r.add_cos(std::abs(m - j), hp);
            r.add_cos(m + j, -hp);
        }
        return r;
    }

    TrigPoly left_mul_poly(const ExactPoly& q) const {
        TrigPoly r(n, arity);
        for (const auto& [m, p] : cosc) r.add_cos(m, q * p);
        for (const auto& [m, p] : sinc) r.add_sin(m, q * p);
        return r;
    }

    TrigPoly scaled(const ExactScalar& s) const {
        TrigPoly r(n, arity);
        for (const auto& [m, p] : cosc) r.add_cos(m, p.scaled(s));
        for (const auto& [m, p] : sinc) r.add_sin(m, p.scaled(s));
        return r;
    }

    // Exact value of (1/N) sum_{i<N} F(2 pi i / N).
    ExactPoly trapezoid_mean(int nodes) const {
        ExactPoly acc(n, arity);
        for (const auto& [m, p] : cosc)
            if (m % nodes == 0) acc += p;
        return acc;
    }
};

}  // namespace cliffrad
