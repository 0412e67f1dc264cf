#include "cliffleg/legendre.hpp"
#include "cliffleg/monogenics.hpp"
#include "cliffleg/radial.hpp"

#include <doctest.h>

#include <random>

using namespace cliffleg;

namespace {

ParityRadialForm even(int m, int k, RationalPoly p) { return {m, k, Parity::Even, std::move(p)}; }
ParityRadialForm odd(int m, int k, RationalPoly p) { return {m, k, Parity::Odd, std::move(p)}; }

ParityRadialForm random_form(int m, int k, std::mt19937& rng)
{
    std::uniform_int_distribution<int> c(-5, 5), deg(0, 4), par(0, 1);
    std::vector<Rational> v;
    for (int i = deg(rng); i >= 0; --i)
        v.push_back(make_rational(c(rng), 3));
    return {m, k, par(rng) ? Parity::Odd : Parity::Even, RationalPoly(std::move(v))};
}

} // namespace

TEST_CASE("dirac on radial forms")
{
    CHECK(dirac(even(2, 3, {1})).is_zero());
    CHECK(dirac(even(2, 3, {1})).parity == Parity::Odd);
    CHECK(dirac(odd(4, 0, {1})) == even(4, 0, {-4}));
    CHECK(dirac(even(3, 1, {0, 1})) == odd(3, 1, {2}));
    CHECK(dirac_power(even(2, 0, {0, 0, 1}), 2) == dirac(dirac(even(2, 0, {0, 0, 1}))));
}

TEST_CASE("dirac, euler and x agree with coordinate operators")
{
    for (int m : {2, 3})
        for (int k = 0; k <= 3; ++k) {
            const auto& y = basis_for(m, k)->elements.front().unscaled();
            for (int r = 0; r <= 3; ++r)
                for (Parity par : {Parity::Even, Parity::Odd}) {
                    const ParityRadialForm f{m, k, par, RationalPoly::monomial(Rational(1), r)};
                    const auto p = form_to_polynomial(f, y);
                    CHECK(dirac_on_polynomial(p) == form_to_polynomial(dirac(f), y));
                    CHECK(euler_on_polynomial(p) == form_to_polynomial(euler(f), y));
                    CHECK(MultivectorPolynomial::vector_variable(m) * p == form_to_polynomial(mul_x(f), y));
                }
        }
}

TEST_CASE("euler and x")
{
    CHECK(euler(even(2, 3, {1})) == even(2, 3, {3}));
    CHECK(euler(odd(2, 3, {1})) == odd(2, 3, {4}));
    CHECK(euler(even(2, 2, {0, 0, 1})) == even(2, 2, {0, 0, 6}));
    CHECK(mul_x(even(3, 1, {1})) == odd(3, 1, {1}));
    CHECK(mul_x(odd(3, 1, {1})) == even(3, 1, {0, -1}));
    std::mt19937 rng(1);
    for (int s = 0; s < 20; ++s) {
        const auto f = random_form(3, 2, rng);
        CHECK(mul_x(mul_x(f)) == RationalPoly{0, -1} * f);
    }
}

TEST_CASE("operator identities on random forms")
{
    std::mt19937 rng(2);
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int s = 0; s < 4; ++s) {
                const auto f = random_form(m, k, rng);
                // d x + x d = -m - 2E
                CHECK((dirac(mul_x(f)) + mul_x(dirac(f)) + f * Rational(m) + euler(f) * Rational(2)).is_zero());
                // d E = d + E d
                CHECK(dirac(euler(f)) == dirac(f) + euler(dirac(f)));
            }
}

TEST_CASE("forms refuse to mix")
{
    auto a = even(2, 0, {1});
    CHECK_THROWS(a += odd(2, 0, {1}));
    CHECK_THROWS(a += even(3, 0, {1}));
    CHECK_NOTHROW(a += odd(2, 0, {}));
    CHECK(even(2, 0, {}) == odd(2, 0, {}));
}

TEST_CASE("D_alpha")
{
    CHECK(apply_D_alpha(even(2, 0, {1}), Rational(0)) == odd(2, 0, {-2}));
    CHECK(apply_D_alpha(even(5, 3, {1}), Rational(0)) == odd(5, 3, {-2}));
    CHECK(apply_D_alpha(even(2, 0, {}), Rational(0)).is_zero());
    CHECK(apply_D_alpha(odd(2, 0, {1}), Rational(1)) == even(2, 0, {-2, 6}));
}

TEST_CASE("Gegenbauer construction")
{
    CHECK(gegenbauer_by_operators(0, 3, 4, Rational(0)) == ParityRadialForm::unit(4, 3));
    CHECK(gegenbauer_by_operators(1, 0, 2, Rational(0)) == odd(2, 0, {-2}));
    CHECK(gegenbauer_by_operators(2, 0, 2, Rational(0)) == even(2, 0, {8, -16}));
    CHECK(rodrigues_integer_alpha(2, 0, 2, 0) == even(2, 0, {8, -16}));
    CHECK_THROWS(gegenbauer_by_operators(-1, 0, 2, Rational(0)));
    CHECK_THROWS(gegenbauer_by_operators(1, -1, 2, Rational(0)));
    CHECK_THROWS(gegenbauer_by_operators(1, 0, 1, Rational(0)));

    // operator product, Rodrigues and the explicit sum coincide
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 8; ++n) {
                for (int a = 0; a <= 2; ++a)
                    REQUIRE(gegenbauer_by_operators(n, k, m, Rational(a)) == rodrigues_integer_alpha(n, k, m, a));
                const auto c = gegenbauer_by_operators(n, k, m, Rational(0));
                REQUIRE(c == explicit_legendre(n, k, m));
                REQUIRE(c.parity == parity_of(n));
            }
}

TEST_CASE("eigenvalues")
{
    CHECK(eigenvalue_C(0, 0, 5, 2) == 0);
    CHECK(eigenvalue_C(0, 2, 2, 0) == 8);
    CHECK(eigenvalue_C(0, 1, 2, 0) == 4);
    CHECK(apply_gegenbauer_operator(even(2, 0, {1}), Rational(0)).is_zero());
    // d(t) = 2x, then D_0(2x) = 8t - 4 for k = 0, m = 2
    CHECK(apply_gegenbauer_operator(even(2, 0, {0, 1}), Rational(0)) == even(2, 0, {-4, 8}));
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 8; ++n)
                for (const Rational& a : {Rational(0), Rational(1), Rational(2), make_rational(3, 2)}) {
                    const auto c = gegenbauer_by_operators(n, k, m, a);
                    REQUIRE(apply_gegenbauer_operator(c, a) == c * eigenvalue_C(a, n, m, k));
                }
}

TEST_CASE("Leibniz coefficients")
{
    const auto c0 = leibniz_coeffs(0, 3);
    CHECK(c0.A == 0);
    CHECK(c0.B == 0);
    CHECK(c0.C == 0);
    const auto c1 = leibniz_coeffs(1, 2);
    CHECK(c1.A == 0);
    CHECK(c1.B == 0);
    CHECK(c1.C == -2);
    const auto c2 = leibniz_coeffs(2, 3);
    CHECK(c2.A == 6);
    CHECK(c2.B == 4);
    CHECK(c2.C == 0);
    std::mt19937 rng(4);
    for (int m = 2; m <= 5; ++m)
        for (int s = 0; s < 5; ++s) {
            const auto f = random_form(m, s % 3, rng);
            for (int l = 0; l <= 6; ++l)
                CHECK(leibniz_residual(f, l).is_zero());
        }
}

TEST_CASE("radial differential equation")
{
    CHECK(radial_ode_residual(even(2, 0, {1}), 0).is_zero());
    CHECK(radial_ode_residual(even(2, 0, {1, -2}), 1).is_zero());
    CHECK_FALSE(radial_ode_residual(even(2, 0, {1, -2}), 2).is_zero());
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int N = 0; N <= 6; ++N)
                CHECK(radial_ode_residual(gegenbauer_by_operators(2 * N, k, m, Rational(0)), N).is_zero());
}

TEST_CASE("recurrences hold exactly")
{
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 10; ++n) {
                REQUIRE(dirac_recurrence_residual(n, k, m).is_zero());
                REQUIRE(euler_lemma_residual(n, k, m).is_zero());
                REQUIRE(legendre_derivative_residual(n, k, m).is_zero());
            }
}

TEST_CASE("Gegenbauer derivative recurrence")
{
    const std::vector<Rational> alphas{Rational(0), Rational(1), Rational(2), make_rational(1, 2), make_rational(-1, 2)};
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 1; n <= 10; ++n)
                for (const auto& a : alphas) {
                    REQUIRE(gegenbauer_derivative_residual(n, k, m, a).is_zero());
                    REQUIRE(gegenbauer_derivative_residual_cleared(n, k, m, a).is_zero());
                }
    // at n = 0 only the alpha = 0 case survives: dC_1 = 4(alpha+1)(k+m/2) Y, not 4(alpha+1)(alpha+k+m/2) Y
    CHECK(gegenbauer_derivative_residual(0, 1, 3, Rational(0)).is_zero());
    CHECK_FALSE(gegenbauer_derivative_residual(0, 1, 3, Rational(1)).is_zero());
}

TEST_CASE("literal middle term without x fails away from alpha = 0")
{
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 2; ++k)
            for (int n = 1; n <= 6; ++n) {
                CHECK(gegenbauer_derivative_residual_unshifted(n, k, m, Rational(0)).is_zero());
                CHECK_FALSE(gegenbauer_derivative_residual_unshifted(n, k, m, Rational(1)).is_zero());
            }
}

TEST_CASE("weight divisibility under repeated dirac")
{
    const RationalPoly w = RationalPoly::one_minus_t();
    for (int m = 2; m <= 6; ++m)
        for (int n = 0; n <= 8; ++n) {
            ParityRadialForm f = even(m, 1, w.pow(unsigned(n)));
            for (int l = 0; l <= n; ++l) {
                CHECK(f.poly.divmod(w.pow(unsigned(n - l))).second.is_zero());
                f = dirac(f);
            }
        }
}
