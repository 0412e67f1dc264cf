#include "cliffleg/jacobi.hpp"
#include "cliffleg/radial.hpp"

#include <doctest.h>

#include <cmath>

using namespace cliffleg;

TEST_CASE("Jacobi polynomials by recurrence")
{
    CHECK(jacobi_build(0, 0, 3).coeffs == RationalPoly{1});
    CHECK(jacobi_build(1, 0, 0).coeffs == RationalPoly{0, 1});
    const Rational a = make_rational(1, 2), b = 3;
    CHECK(jacobi_build(1, a, b).coeffs == RationalPoly(std::vector<Rational>{(a - b) / 2, (a + b + 2) / 2}));
    // Legendre P_2 = (3x^2 - 1)/2
    CHECK(jacobi_build(2, 0, 0).coeffs == RationalPoly(std::vector<Rational>{make_rational(-1, 2), 0, make_rational(3, 2)}));
    // P_n(1) = binom(n + alpha, n)
    CHECK(jacobi_build(5, 2, 1).coeffs.evaluate(Rational(1)) == 21);
    CHECK_THROWS(jacobi_build(2, -1, 0));
    CHECK_THROWS(jacobi_build(2, 0, make_rational(-3, 2)));
    CHECK_THROWS(jacobi_build(-1, 0, 0));
    for (int n = 0; n <= 10; ++n)
        for (const Rational& al : {Rational(0), make_rational(1, 2), Rational(2)})
            for (const Rational& be : {Rational(0), make_rational(3, 2), Rational(5)})
                CHECK(jacobi_ode_residual(jacobi_build(n, al, be)).is_zero());
    const auto p = jacobi_build(7, 1, make_rational(5, 2));
    CHECK(double(p.evaluate_ld(0.3L)) == doctest::Approx(p.coeffs.evaluate(0.3)).epsilon(1e-13));
    CHECK(double(jacobi_evaluate(7, 1.0L, 2.5L, 0.3L)) == doctest::Approx(p.coeffs.evaluate(0.3)).epsilon(1e-13));
}

TEST_CASE("roots")
{
    CHECK_THROWS(jacobi_zeros(0, 0, 0));
    for (int b2 = 0; b2 <= 10; ++b2) {
        const double beta = b2 / 2.0;
        const auto z = jacobi_zeros(1, 0, make_rational(b2, 2));
        REQUIRE(z.size() == 1);
        CHECK(z[0] == doctest::Approx(beta / (beta + 2)).epsilon(1e-15));
    }
    // quadratic formula on the exact coefficients of P_2^{(0,0)}
    const auto c = jacobi_build(2, 0, 0).coeffs;
    const double A = c.coeff(2).get_d(), B = c.coeff(1).get_d(), C = c.coeff(0).get_d();
    const double disc = std::sqrt(B * B - 4 * A * C);
    const auto z2 = jacobi_zeros(2, 0, 0);
    CHECK(z2[0] == doctest::Approx((-B - disc) / (2 * A)).epsilon(1e-15));
    CHECK(z2[1] == doctest::Approx((-B + disc) / (2 * A)).epsilon(1e-15));
    CHECK(z2[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));

    for (int n = 1; n <= 20; ++n)
        for (const Rational& be : {Rational(0), make_rational(1, 2), Rational(4), make_rational(11, 2)}) {
            const auto roots = jacobi_roots(n, 0, be);
            REQUIRE(int(roots.size()) == n);
            for (std::size_t i = 0; i < roots.size(); ++i) {
                CHECK(roots[i].value > -1);
                CHECK(roots[i].value < 1);
                CHECK(roots[i].residual < 1e-13L);
                CHECK(roots[i].hi - roots[i].lo < 1e-13L);
                if (i)
                    CHECK(roots[i - 1].value < roots[i].value);
            }
        }
}

TEST_CASE("interlacing rule")
{
    const std::vector<double> x{0.0}, t{1.0 / 3}, y{0.5};
    CHECK(interlacing_check(x, t, y));
    CHECK_FALSE(interlacing_check(x, x, x));
    CHECK_FALSE(interlacing_check(y, t, x));
    CHECK_FALSE(interlacing_check({0.1, 0.5}, {0.2}, {0.3, 0.6}));
    for (int n = 1; n <= 15; ++n)
        for (int b2 = 0; b2 <= 3; ++b2) {
            const Rational b = make_rational(b2, 2);
            CHECK(interlacing_check(jacobi_zeros(n, 0, b), jacobi_zeros(n, 0, b + 1), jacobi_zeros(n, 0, b + 2)));
        }
    // shorter lists slot in cyclically
    CHECK(cyclic_interlacing({{0.2}, {0.3}, {0.1, 0.5}}));
    CHECK(cyclic_interlacing({{}, {}, {}}));
    CHECK_FALSE(cyclic_interlacing({{0.2}, {0.1, 0.7}, {0.3, 0.5}}));
}

TEST_CASE("sphere radii")
{
    const auto r = zero_radii(2, 0, 2);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(zero_radii(0, 3, 3).empty());
    CHECK(zero_radii(1, 3, 3).empty());
    for (int m : {2, 3})
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 12; ++n) {
                const auto a = zero_radii(n, k, m);
                CHECK(int(a.size()) == n / 2);
                for (double v : a) {
                    CHECK(v > 0);
                    CHECK(v < 1);
                }
                CHECK(cyclic_interlacing({a, zero_radii(n + 1, k, m), zero_radii(n + 2, k, m)}));
            }
}

TEST_CASE("radii are the zeros of the radial polynomial")
{
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 3; ++k)
            for (int n = 1; n <= 10; ++n) {
                const auto p = gegenbauer_by_operators(n, k, m, Rational(0)).poly;
                CHECK(sturm_root_count(p, Rational(0), Rational(1)) == n / 2);
                const double scale = std::fabs(p.coeff(0).get_d());
                for (double r : zero_radii(n, k, m))
                    CHECK(std::fabs(p.evaluate(r * r)) < 1e-9 * scale);
            }
}

TEST_CASE("Sturm counting")
{
    const RationalPoly p{-2, 0, 1};  // t^2 - 2
    CHECK(sturm_root_count(p, Rational(0), Rational(2)) == 1);
    CHECK(sturm_root_count(p, Rational(-2), Rational(2)) == 2);
    CHECK(sturm_root_count(p, Rational(2), Rational(5)) == 0);
    CHECK_THROWS(sturm_root_count(RationalPoly{0, 1}, Rational(0), Rational(1)));
    CHECK_THROWS(sturm_root_count(RationalPoly{}, Rational(0), Rational(1)));
}
