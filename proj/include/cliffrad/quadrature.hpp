#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "cliffrad/exact_scalar.hpp"
#include "cliffrad/multivector.hpp"

namespace cliffrad {

// Normalized sphere moment (1/A_n) int_{S^{n-1}} omega^a domega, exact.
// Zero whenever any exponent is odd; otherwise the Gamma-product value
//   Gamma(n/2) prod_i Gamma((a_i+1)/2) / (pi^{n/2} Gamma((|a|+n)/2)),
// which is always rational.
inline ExactScalar sphere_moment(const std::vector<int>& a, int n) {
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("sphere_moment: exponent count != n");
    int total = 0;
    for (int e : a) {
        if (e < 0) throw std::invalid_argument("sphere_moment: negative exponent");
        if (e % 2 == 1) return ExactScalar::zero();
        total += e;
    }
    ExactScalar v = gamma_half(n);
    for (int e : a) v *= gamma_half(e + 1);
    v *= ExactScalar::pi_pow_half(-n);
    v *= inv_gamma_half(total + n);
    if (v.h() != 0) throw std::logic_error("sphere_moment: expected rational value");
    return v;
}

// Quadrature rule on S^{n-1} with weights normalized to sum to 1 (the 1/A_n
// factor folded in).
struct SphereQuadrature {
    int n = 0;
    int exactness_order = 0;
    std::vector<std::vector<double>> nodes;
    std::vector<double> weights;

    Multivector<double> integrate_mv(
        const std::function<Multivector<double>(const std::vector<double>&)>& f) const {
        Multivector<double> acc(n);
        for (size_t i = 0; i < nodes.size(); ++i) {
            Multivector<double> v = f(nodes[i]);
            for (const auto& [m, c] : v.coeffs()) acc.add(m, c * weights[i]);
        }
        return acc;
    }
};

// Product Gauss rule: equiangular on S^1, Gauss-Jacobi polar factors above.
// Exact (up to rounding) for polynomials of degree <= order; n in {2,3,4,5}.
SphereQuadrature build_sphere_quadrature(int n, int order);

// Equispaced angles on [0, 2pi) for Cauchy integrals; node count is at least
// 4*(j_max+1), exact for trigonometric degree < count.
struct CircleQuadrature {
    std::vector<double> angles;
    double weight = 0.0;  // uniform, equals 1/count (mean normalization)
};
CircleQuadrature circle_quadrature(int j_max, int min_nodes = 0);

struct IntegrationResult {
    Multivector<double> value;
    double error = 0.0;
    IntegrationResult() : value(1) {}
    explicit IntegrationResult(int n) : value(n) {}
};

class NonconvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod 7/15 over multivector-valued integrands.
IntegrationResult integrate_adaptive(
    const std::function<Multivector<double>(double)>& f, double a, double b, int n_dim,
    double tol = 1e-10, int max_depth = 14);

struct HyperplaneOptions {
    double tol = 1e-10;
    int max_depth = 14;
    int angular_nodes = 64;   // n = 3 only
    double decay_probe = 1e3; // radius where integrand decay is probed
};

// Integral of f over the hyperplane {x in R^n : (x, omega) = p} against the
// Lebesgue measure, omega a unit vector; n in {2,3}.  Throws
// NonconvergenceError when the integrand fails the tail decay probe.
IntegrationResult hyperplane_integrate(
    const std::function<Multivector<double>(const std::vector<double>&)>& f,
    const std::vector<double>& omega, double p, int n,
    const HyperplaneOptions& opts = {});

// Orthonormal completion of a unit vector (rows 1..n-1 span its complement).
std::vector<std::vector<double>> orthonormal_complement(const std::vector<double>& omega);

}  // namespace cliffrad
