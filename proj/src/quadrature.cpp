#include "cliffrad/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>

namespace cliffrad {

namespace {

// Gauss-Jacobi nodes/weights for the weight (1-t^2)^alpha on [-1,1],
// symmetrized so antipodal node pairs cancel odd integrands cleanly.
void gegenbauer_rule(int count, double alpha, std::vector<double>& t, std::vector<double>& w) {
    gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(
        gsl_integration_fixed_gegenbauer, static_cast<size_t>(count), -1.0, 1.0, alpha, 0.0);
    if (ws == nullptr) throw std::runtime_error("gegenbauer_rule: allocation failed");
    const double* xs = gsl_integration_fixed_nodes(ws);
    const double* wss = gsl_integration_fixed_weights(ws);
    t.assign(xs, xs + count);
    w.assign(wss, wss + count);
    gsl_integration_fixed_free(ws);
    for (int i = 0, j = count - 1; i < j; ++i, --j) {
        double tm = 0.5 * (t[i] - t[j]);
        t[i] = tm;
        t[j] = -tm;
        double wm = 0.5 * (w[i] + w[j]);
        w[i] = wm;
        w[j] = wm;
    }
}

// Equiangular rule on S^1 with mirrored antipodal pairs.
SphereQuadrature circle_rule(int count) {
    if (count % 2 != 0) ++count;
    SphereQuadrature q;
    q.n = 2;
    q.exactness_order = count - 1;
    q.nodes.reserve(count);
    q.weights.assign(count, 1.0 / count);
    const int half = count / 2;
    for (int i = 0; i < half; ++i) {
        double th = 2.0 * M_PI * i / count;
        q.nodes.push_back({std::cos(th), std::sin(th)});
    }
    for (int i = 0; i < half; ++i) q.nodes.push_back({-q.nodes[i][0], -q.nodes[i][1]});
    return q;
}

}  // namespace

SphereQuadrature build_sphere_quadrature(int n, int order) {
    if (order < 1) throw std::invalid_argument("build_sphere_quadrature: order < 1");
    if (n < 2 || n > 5) throw std::invalid_argument("build_sphere_quadrature: n must be 2..5");
    if (n == 2) return circle_rule(std::max(4, order + 1));

    SphereQuadrature inner = build_sphere_quadrature(n - 1, order);
    std::vector<double> t, w;
    gegenbauer_rule(order / 2 + 1, (n - 3) / 2.0, t, w);

    SphereQuadrature q;
    q.n = n;
    q.exactness_order = order;
    for (size_t a = 0; a < t.size(); ++a) {
        const double s = std::sqrt(std::max(0.0, 1.0 - t[a] * t[a]));
        for (size_t b = 0; b < inner.nodes.size(); ++b) {
            std::vector<double> node(n);
            node[0] = t[a];
            for (int i = 1; i < n; ++i) node[i] = s * inner.nodes[b][i - 1];
            q.nodes.push_back(std::move(node));
            q.weights.push_back(w[a] * inner.weights[b]);
        }
    }
    double total = 0.0;
    for (double v : q.weights) total += v;
    for (double& v : q.weights) v /= total;
    return q;
}

CircleQuadrature circle_quadrature(int j_max, int min_nodes) {
    if (j_max < 0) throw std::invalid_argument("circle_quadrature: j_max < 0");
    int count = std::max(4 * (j_max + 1), std::max(min_nodes, 4));
    CircleQuadrature q;
    q.weight = 1.0 / count;
    q.angles.resize(count);
    for (int i = 0; i < count; ++i) q.angles[i] = 2.0 * M_PI * i / count;
    return q;
}

namespace {

// Gauss 7 / Kronrod 15 pair on [-1,1] (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    Multivector<double> value;
    double err;
    Segment() : value(1), err(0) {}
};

Segment gk15(const std::function<Multivector<double>(double)>& f, double a, double b, int n_dim) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Multivector<double> kronrod(n_dim), gauss(n_dim);
    for (int i = 0; i < 8; ++i) {
        Multivector<double> fv = f(c + h * kXgk[i]);
        if (i < 7) fv += f(c - h * kXgk[i]);
        for (const auto& [m, v] : fv.coeffs()) {
            kronrod.add(m, kWgk[i] * v);
            if (i % 2 == 1) gauss.add(m, kWg[i / 2] * v);
        }
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = kronrod.scaled(h);
    s.err = max_abs((kronrod - gauss).scaled(h));
    return s;
}

}  // namespace

IntegrationResult integrate_adaptive(const std::function<Multivector<double>(double)>& f,
                                     double a, double b, int n_dim, double tol, int max_depth) {
    struct Item {
        Segment seg;
        int depth;
    };
    const double span = b - a;
    std::vector<Item> stack{{gk15(f, a, b, n_dim), 0}};
    IntegrationResult res(n_dim);
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const double local_tol = tol * (it.seg.b - it.seg.a) / span;
        if (it.seg.err <= local_tol || it.depth >= max_depth) {
            res.value += it.seg.value;
            res.error += it.seg.err;
            continue;
        }
        const double mid = 0.5 * (it.seg.a + it.seg.b);
        stack.push_back({gk15(f, it.seg.a, mid, n_dim), it.depth + 1});
        stack.push_back({gk15(f, mid, it.seg.b, n_dim), it.depth + 1});
    }
    return res;
}

std::vector<std::vector<double>> orthonormal_complement(const std::vector<double>& omega) {
    const int n = static_cast<int>(omega.size());
    // Gram-Schmidt against the best-conditioned coordinate axes.
    std::vector<std::vector<double>> basis{omega};
    for (int axis = 0; axis < n && static_cast<int>(basis.size()) < n; ++axis) {
        std::vector<double> v(n, 0.0);
        v[axis] = 1.0;
        for (const auto& b : basis) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += v[i] * b[i];
            for (int i = 0; i < n; ++i) v[i] -= dot * b[i];
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-8) continue;
        for (double& x : v) x /= norm;
        basis.push_back(std::move(v));
    }
    if (static_cast<int>(basis.size()) != n)
        throw std::runtime_error("orthonormal_complement: degenerate direction");
    return {basis.begin() + 1, basis.end()};
}

namespace {

void check_tail_decay(const std::function<double(double)>& magnitude, double probe) {
    // The improper integrals converge only for decay strictly faster than
    // 1/r; probe a few dyadic radii and require clear decrease.
    double m1 = magnitude(probe), m2 = magnitude(2 * probe), m4 = magnitude(4 * probe);
    if (!(std::isfinite(m1) && std::isfinite(m2) && std::isfinite(m4)))
        throw NonconvergenceError("hyperplane_integrate: integrand not finite at tail probe");
    if (m1 == 0.0 && m2 == 0.0 && m4 == 0.0) return;
    // Doubling the radius must shrink the magnitude by more than 2, i.e.
    // decay strictly faster than 1/r.
    if (!(m2 * 2.05 <= m1 && m4 * 2.05 <= m2))
        throw NonconvergenceError("hyperplane_integrate: tail decay too slow (needs o(1/r))");
}

}  // namespace

IntegrationResult hyperplane_integrate(
    const std::function<Multivector<double>(const std::vector<double>&)>& f,
    const std::vector<double>& omega, double p, int n, const HyperplaneOptions& opts) {
    if (n != 2 && n != 3) throw std::invalid_argument("hyperplane_integrate: n must be 2 or 3");
    if (static_cast<int>(omega.size()) != n)
        throw std::invalid_argument("hyperplane_integrate: omega size != n");
    auto basis = orthonormal_complement(omega);

    if (n == 2) {
        const auto& u = basis[0];
        auto point = [&](double t) {
            return std::vector<double>{p * omega[0] + t * u[0], p * omega[1] + t * u[1]};
        };
        check_tail_decay([&](double r) { return std::max(max_abs(f(point(r))), max_abs(f(point(-r)))); },
                         opts.decay_probe);
        // t = tan(u) maps the line onto (-pi/2, pi/2).
        auto g = [&](double th) {
            const double t = std::tan(th);
            const double jac = 1.0 + t * t;
            return f(point(t)).scaled(jac);
        };
        return integrate_adaptive(g, -M_PI / 2, M_PI / 2, n, opts.tol, opts.max_depth);
    }

    const auto& u1 = basis[0];
    const auto& u2 = basis[1];
    const int m = opts.angular_nodes;
    auto point = [&](double r, double cs, double sn) {
        std::vector<double> x(3);
        for (int i = 0; i < 3; ++i) x[i] = p * omega[i] + r * (cs * u1[i] + sn * u2[i]);
        return x;
    };
    check_tail_decay(
        [&](double r) {
            double mx = 0.0;
            for (int i = 0; i < 4; ++i) {
                double th = M_PI * i / 2.0;
                mx = std::max(mx, r * max_abs(f(point(r, std::cos(th), std::sin(th)))));
            }
            return mx;
        },
        opts.decay_probe);
    std::vector<double> cs(m), sn(m);
    for (int i = 0; i < m; ++i) {
        cs[i] = std::cos(2.0 * M_PI * i / m);
        sn[i] = std::sin(2.0 * M_PI * i / m);
    }
    // Angular trapezoid inside, adaptive radial integral of r * mean outside;
    // r = tan(theta) maps [0, inf) onto [0, pi/2).
    auto radial = [&](double th) {
        const double r = std::tan(th);
        const double jac = 1.0 + r * r;
        Multivector<double> acc(3);
        for (int i = 0; i < m; ++i) acc += f(point(r, cs[i], sn[i]));
        return acc.scaled(r * jac * (2.0 * M_PI / m));
    };
    return integrate_adaptive(radial, 0.0, M_PI / 2, n, opts.tol, opts.max_depth);
}

}  // namespace cliffrad
