#include "cliffleg/analysis.hpp"
#include "cliffleg/monogenics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace cliffleg;

namespace {

using MV = Multivector<Rational>;
MV e(int m, int j) { return MV::blade(m, Blade::generator(j)); }

MultiIndex unit_index(int m, int j)
{
    MultiIndex a(std::size_t(m), 0);
    a[std::size_t(j - 1)] = 1;
    return a;
}

Integer binom(int n, int k) { return binomial(unsigned(n), unsigned(k)); }

} // namespace

TEST_CASE("multi-indices")
{
    const auto mons = monomials_of_degree(3, 2);
    CHECK(mons.size() == 6);
    CHECK(mons.front() == MultiIndex{2, 0, 0});
    CHECK(mons.back() == MultiIndex{0, 0, 2});
    CHECK(total_degree({1, 2, 3}) == 6);
}

TEST_CASE("coordinate Dirac operator")
{
    for (int m = 2; m <= 5; ++m) {
        const auto d = dirac_on_polynomial(MultivectorPolynomial::vector_variable(m));
        CHECK(d == MultivectorPolynomial::constant(MV::scalar(m, Rational(-m))));
        CHECK(dirac_on_polynomial(MultivectorPolynomial::constant(MV::scalar(m, Rational(1)))).is_zero());
    }
    // d(x1 e2 - x2 e1) = e1 e2 - e2 e1 = 2 e12
    MultivectorPolynomial p(2);
    p.add_term(unit_index(2, 1), e(2, 2));
    p.add_term(unit_index(2, 2), -e(2, 1));
    CHECK(dirac_on_polynomial(p) == MultivectorPolynomial::constant(MV::blade(2, Blade{3}, Rational(2))));
    CHECK(euler_on_polynomial(MultivectorPolynomial::norm_squared(3)) == MultivectorPolynomial::norm_squared(3) * Rational(2));
    // d^2 = -Laplacian on |x|^2
    const auto q = MultivectorPolynomial::norm_squared(3);
    CHECK(dirac_on_polynomial(dirac_on_polynomial(q)) == MultivectorPolynomial::constant(MV::scalar(3, Rational(-6))));
}

TEST_CASE("sphere moments")
{
    const auto c = sphere_moment({0, 0});
    CHECK(c.coeff == 2);
    CHECK(c.pi_power == 1);
    const auto s = sphere_moment({0, 0, 0});
    CHECK(s.coeff == 4);
    CHECK(s.pi_power == 1);
    const auto q = sphere_moment({2, 0});
    CHECK(q.coeff == 1);
    CHECK(q.pi_power == 1);
    CHECK(sphere_moment({1, 0, 2}).coeff == 0);
    // S^3 has area 2 pi^2
    CHECK(sphere_moment({0, 0, 0, 0}).coeff == 2);
    CHECK(sphere_moment({0, 0, 0, 0}).pi_power == 2);
    CHECK(sphere_moment_uncached({4, 2, 0}).coeff == sphere_moment({4, 2, 0}).coeff);
    CHECK(std::fabs(sphere_moment({2, 2}).to_double() - std::numbers::pi / 4) < 1e-15);
}

TEST_CASE("monogenic space dimensions")
{
    for (int m = 2; m <= 6; ++m)
        CHECK(monogenic_space_dim(m, 0) == 1);
    for (int k = 0; k <= 10; ++k)
        CHECK(monogenic_space_dim(2, k) == 1);
    CHECK(monogenic_space_dim(3, 2) == 3);
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k)
            CHECK(monogenic_space_dim(m, k) == binom(m + k - 2, k));
}

TEST_CASE("planar basis")
{
    const double s = 1 / std::sqrt(2 * std::numbers::pi);
    const auto b0 = m2_basis(0);
    const double origin[2] = {0.3, -0.2};
    const auto v0 = b0.elements[0].evaluate(origin);
    CHECK(v0[Blade::generator(1)] == doctest::Approx(s).epsilon(1e-15));
    CHECK(norm_sq(v0) == doctest::Approx(s * s).epsilon(1e-14));
    const auto b1 = m2_basis(1);
    const double p[2] = {1, 0};
    const auto v1 = b1.elements[0].evaluate(p);
    CHECK(v1[Blade::generator(1)] == doctest::Approx(s).epsilon(1e-15));
    CHECK(v1[Blade::generator(2)] == doctest::Approx(0).epsilon(1e-15));
    // k = 1: (x1 e1 - x2 e2)
    MultivectorPolynomial expect(2);
    expect.add_term(unit_index(2, 1), e(2, 1));
    expect.add_term(unit_index(2, 2), -e(2, 2));
    CHECK(b1.elements[0].unscaled() == expect);
    for (int k = 0; k <= 10; ++k) {
        const auto y = m2_basis(k).elements[0];
        CHECK(dirac_on_polynomial(y.unscaled()).is_zero());
        CHECK(y.norm_sq().coeff == 2);
        CHECK(sphere_inner(y, y).is_unit());
    }
}

TEST_CASE("x Y_k = e1 Y_{k+1} in the plane")
{
    for (int k = 0; k <= 10; ++k)
        CHECK(m2_basis(k).elements[0].x_unscaled() == m2_basis(k + 1).elements[0].unscaled().left_multiply(e(2, 1)));
}

TEST_CASE("constructed bases")
{
    for (int m = 2; m <= 5; ++m) {
        const auto b = build_basis(m, 0);
        REQUIRE(b.size() == 1);
        const auto& y = b.elements[0];
        CHECK(y.unscaled().degree() == 0);
        CHECK(sphere_inner(y, y).is_unit());
    }
    const auto b31 = build_basis(3, 1);
    CHECK(Integer(long(b31.size())) == binom(2, 1));
    for (int m = 2; m <= 5; ++m)
        for (int k = 0; k <= (m == 3 ? 4 : 3); ++k) {
            const auto b = basis_for(m, k);
            REQUIRE(Integer(long(b->size())) == binom(m + k - 2, k));
            for (std::size_t i = 0; i < b->size(); ++i) {
                CHECK(dirac_on_polynomial(b->elements[i].unscaled()).is_zero());
                CHECK(b->elements[i].unscaled().is_homogeneous(k));
                for (std::size_t j = 0; j < b->size(); ++j) {
                    const auto g = sphere_inner(b->elements[i], b->elements[j]);
                    CHECK((i == j ? g.is_unit() : g.is_zero()));
                }
            }
        }
    CHECK_THROWS(build_basis(7, 1));
    CHECK_THROWS(build_basis(3, 9));
}

TEST_CASE("plane basis from the general construction differs by a unit constant")
{
    for (int k = 0; k <= 6; ++k) {
        const auto g = build_basis(2, k).elements[0];
        const auto c = m2_basis(k).elements[0];
        const SphereInner lam = sphere_inner(g, c);
        CHECK(norm_sq(lam.raw) * lam.factor.square() == 1);
    }
}

TEST_CASE("Gram matrix at m = 3 by sphere quadrature")
{
    for (int k = 0; k <= 4; ++k) {
        const auto b = basis_for(3, k);
        const auto rule = QuadratureRule::ball(3, 2 * k + 2);
        for (std::size_t i = 0; i < b->size(); ++i)
            for (std::size_t j = 0; j < b->size(); ++j) {
                Multivector<double> acc(3);
                for (std::size_t d = 0; d < rule.directions.size(); ++d) {
                    const auto yi = b->elements[i].evaluate(rule.directions[d]);
                    const auto yj = b->elements[j].evaluate(rule.directions[d]);
                    acc += geometric_product(hermitian_conjugate(yi), yj) * rule.angular_weights[d];
                }
                Multivector<double> expect(3);
                if (i == j)
                    expect[Blade{0}] = 1;
                CHECK(std::sqrt(norm_sq(acc - expect)) < 1e-12);
            }
    }
}

TEST_CASE("sphere identities")
{
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 3; ++k)
            for (int k2 = 0; k2 <= 3; ++k2) {
                const auto a = basis_for(m, k), b = basis_for(m, k2);
                for (const auto& ya : a->elements)
                    for (const auto& yb : b->elements) {
                        CHECK(sphere_inner_theta(ya, yb).is_zero());
                        if (k != k2)
                            CHECK(sphere_inner(ya, yb).is_zero());
                    }
            }
}

TEST_CASE("homogeneity of evaluation")
{
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> d(-1, 1);
    for (int k = 1; k <= 4; ++k) {
        const auto& y = basis_for(3, k)->elements.back();
        const double zero[3] = {0, 0, 0};
        CHECK(norm_sq(y.evaluate(zero)) == 0);
        const double x[3] = {d(rng), d(rng), d(rng)};
        const double x2[3] = {2 * x[0], 2 * x[1], 2 * x[2]};
        const auto lhs = y.evaluate(x2), rhs = y.evaluate(x) * std::ldexp(1.0, k);
        CHECK(std::sqrt(norm_sq(lhs - rhs)) < 1e-13 * std::max(1.0, std::sqrt(norm_sq(rhs))));
    }
}

TEST_CASE("polynomial algebra")
{
    const auto x = MultivectorPolynomial::vector_variable(3);
    CHECK(x * x == MultivectorPolynomial::norm_squared(3) * Rational(-1));
    CHECK((x - x).is_zero());
    CHECK(x.conjugate() == x * Rational(-1));
    const Rational pt[3] = {1, 2, 3};
    CHECK(MultivectorPolynomial::norm_squared(3).evaluate(pt) == MV::scalar(3, Rational(14)));
    CHECK_THROWS_AS(x + MultivectorPolynomial::vector_variable(2), DimensionMismatch);
}
