#include <random>
#include <vector>

#include "cliffrad/multivector.hpp"
#include "test_utils.hpp"

using namespace cliffrad;

namespace {

// Independent sign oracle: blades as index lists, bubble products into
// canonical order, cancel repeated units with e_i^2 = -1.
std::pair<int, unsigned> naive_blade_product(unsigned a, unsigned b, int n) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (a & (1u << i)) idx.push_back(i);
    for (int i = 0; i < n; ++i)
        if (b & (1u << i)) idx.push_back(i);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < idx.size(); ++i) {
            if (idx[i] > idx[i + 1]) {
                std::swap(idx[i], idx[i + 1]);
                sign = -sign;
                changed = true;
            } else if (idx[i] == idx[i + 1]) {
                idx.erase(idx.begin() + i, idx.begin() + i + 2);
                sign = -sign;  // e_i e_i = -1
                changed = true;
                break;
            }
        }
    }
    unsigned mask = 0;
    for (int i : idx) mask |= 1u << i;
    return {sign, mask};
}

using MvQ = Multivector<Rational>;

MvQ random_mv(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3), pick(0, 3);
    MvQ m(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (pick(rng) == 0) m.set(mask, make_rational(num(rng), den(rng)));
    return m;
}

}  // namespace

int main() {
    TestRunner test;

    // --- blade product against the brute-force oracle, all pairs, n <= 4
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (unsigned a = 0; a < (1u << n); ++a)
                for (unsigned b = 0; b < (1u << n); ++b) {
                    auto [sign, mask] = naive_blade_product(a, b, n);
                    if (sign != blade_sign(a, b) || mask != (a ^ b)) ok = false;
                }
        test.expect_true(ok, "blade product matches brute-force sign table (n <= 4)");
    }

    // --- defining relations e_i e_j + e_j e_i = -2 delta_ij for all n <= 8
    {
        bool ok = true;
        for (int n = 2; n <= 8; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    MvQ ei = MvQ::basis_vector(n, i), ej = MvQ::basis_vector(n, j);
                    MvQ anti = ei * ej + ej * ei;
                    MvQ want(n);
                    if (i == j) want.set(0u, Rational(-2));
                    if (!(anti == want)) ok = false;
                }
        test.expect_true(ok, "e_i e_j + e_j e_i = -2 delta_ij for all n <= 8");
    }

    // --- unit and distributivity examples
    {
        int n = 2;
        MvQ e1 = MvQ::basis_vector(n, 1), e2 = MvQ::basis_vector(n, 2);
        test.expect_true(e1 * e1 == MvQ::scalar(n, Rational(-1)), "e1*e1 = -1");
        std::mt19937_64 rng(7);
        MvQ m = random_mv(n, rng);
        test.expect_true(MvQ::scalar(n, Rational(1)) * m == m, "1*m = m");
        // (e1+e2)(e1-e2) = -e1e2 - e2e1 + e1e1... expands to -2 e1e2 offset by squares
        MvQ prod = (e1 + e2) * (e1 - e2);
        MvQ want(n);
        want.set(0b11u, Rational(-2));
        test.expect_true(prod == want, "(e1+e2)(e1-e2) = -2 e12");
    }

    // --- associativity on random triples (exact backend)
    {
        std::mt19937_64 rng(42);
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int trial = 0; trial < 50; ++trial) {
                MvQ a = random_mv(n, rng), b = random_mv(n, rng), c = random_mv(n, rng);
                if (!((a * b) * c == a * (b * c))) ok = false;
            }
        test.expect_true(ok, "geometric product associativity on random triples");
    }

    // --- conjugation
    {
        int n = 3;
        test.expect_true(conjugate(MvQ::scalar(n, Rational(1))) == MvQ::scalar(n, Rational(1)),
                         "conjugate(1) = 1");
        Paravector<Rational> x(make_rational(3, 2), {Rational(1), Rational(-2), Rational(5)});
        MvQ xm = x.to_multivector();
        MvQ xconj = conjugate(xm);
        MvQ want(n);
        want.set(0u, make_rational(3, 2));
        want.set(1u, Rational(-1));
        want.set(2u, Rational(2));
        want.set(4u, Rational(-5));
        test.expect_true(xconj == want, "conjugate(x0 + xv) = x0 - xv");

        // anti-automorphism on random pairs
        std::mt19937_64 rng(11);
        bool ok = true;
        for (int trial = 0; trial < 40; ++trial) {
            MvQ a = random_mv(n, rng), b = random_mv(n, rng);
            if (!(conjugate(a * b) == conjugate(b) * conjugate(a))) ok = false;
        }
        test.expect_true(ok, "conjugation is an anti-automorphism");
    }

    // --- paravector norm: x * conjugate(x) = |x|^2, grade 0 only
    {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
        bool ok = true;
        for (int n = 2; n <= 5; ++n)
            for (int trial = 0; trial < 30; ++trial) {
                Paravector<Rational> x(make_rational(num(rng), den(rng)), {});
                x.xv.resize(n);
                for (auto& v : x.xv) v = make_rational(num(rng), den(rng));
                MvQ prod = x.to_multivector() * conjugate(x.to_multivector());
                MvQ want = MvQ::scalar(n, x.norm_sq());
                if (!(prod == want)) ok = false;
            }
        test.expect_true(ok, "x * conjugate(x) = |x|^2 (scalar only)");
    }

    // --- dimension guards
    test.expect_throw<std::invalid_argument>(
        [] {
            MvQ a(2), b(3);
            (void)(a * b);
        },
        "dimension mismatch rejected");
    test.expect_throw<std::out_of_range>([] { MvQ a(9); }, "n > 8 rejected");

    test.summary();
    return test.all_passed() ? 0 : 1;
}
