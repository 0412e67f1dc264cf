// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include "cliffleg/analysis.hpp"
#include "cliffleg/jacobi.hpp"
#include "cliffleg/legendre.hpp"
#include "cliffleg/monogenics.hpp"
#include "cliffleg/radial.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace cliffleg;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

std::string at(int a, int b, int c, int d = -1)
{
    std::ostringstream s;
    s << "(" << a << "," << b << "," << c;
    if (d >= 0)
        s << "," << d;
    s << ")";
    return s.str();
}

const std::vector<int> all_m{2, 3, 4, 5, 6};

Outcome triple_construction()
{
    Outcome o;
    for (int m : all_m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 8; ++n)
                for (int a = 0; a <= 2; ++a) {
                    const auto ops = gegenbauer_by_operators(n, k, m, Rational(a));
                    o.require(ops == rodrigues_integer_alpha(n, k, m, a), "Rodrigues differs at " + at(n, k, m, a));
                    if (a == 0)
                        o.require(ops == explicit_legendre(n, k, m), "explicit form differs at " + at(n, k, m));
                }
    return o;
}

Outcome eigenvalues()
{
    Outcome o;
    for (int m : all_m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 8; ++n)
                for (int a = 0; a <= 2; ++a) {
                    const auto c = gegenbauer_by_operators(n, k, m, Rational(a));
                    o.require(apply_gegenbauer_operator(c, Rational(a)) == c * eigenvalue_C(Rational(a), n, m, k),
                              "eigenvalue residual at " + at(n, k, m, a));
                }
    o.require(eigenvalue_C(0, 1, 2, 0) == 4, "C(0,1,2,0) != 4");
    o.require(eigenvalue_C(0, 2, 2, 0) == 8, "C(0,2,2,0) != 8");
    return o;
}

Outcome bonnet()
{
    Outcome o;
    for (int m : all_m)
        for (int k = 0; k <= 4; ++k)
            for (int N = 0; N <= 5; ++N)
                for (int n : {2 * N, 2 * N + 1}) {
                    o.require(bonnet_residual(n, k, m).is_zero(), "Bonnet residual at " + at(n, k, m));
                    o.require(bonnet_normalized_residual(n, k, m).is_zero(), "normalised Bonnet residual at " + at(n, k, m));
                }
    const auto s = bonnet_odd(0, 0, 2);
    o.require(s.alpha == make_rational(-1, 8) && s.beta == 1, "spot value (N,k,m)=(0,0,2) is not (-1/8, 1)");
    return o;
}

Outcome recurrences()
{
    Outcome o;
    const std::vector<Rational> alphas{Rational(0), Rational(1), Rational(2), make_rational(1, 2)};
    for (int m : all_m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 10; ++n) {
                o.require(dirac_recurrence_residual(n, k, m).is_zero(), "three-term recurrence at " + at(n, k, m));
                o.require(legendre_derivative_residual(n, k, m).is_zero(), "Legendre derivative recurrence at " + at(n, k, m));
                o.require(euler_lemma_residual(n, k, m).is_zero(), "Euler identity at " + at(n, k, m));
                for (const auto& a : alphas)
                    if (n >= 1 || a == 0)
                        o.require(gegenbauer_derivative_residual_cleared(n, k, m, a).is_zero(),
                                  "Gegenbauer derivative recurrence at " + at(n, k, m));
            }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> c(-7, 7), deg(0, 5), par(0, 1);
    for (int m : all_m)
        for (int k = 0; k <= 4; ++k)
            for (int s = 0; s < 3; ++s) {
                std::vector<Rational> v;
                for (int i = deg(rng); i >= 0; --i)
                    v.push_back(make_rational(c(rng), 1 + s));
                const ParityRadialForm f{m, k, par(rng) ? Parity::Odd : Parity::Even, RationalPoly(std::move(v))};
                for (int l = 0; l <= 6; ++l)
                    o.require(leibniz_residual(f, l).is_zero(), "Leibniz decomposition at l=" + std::to_string(l));
            }
    return o;
}

Outcome norms()
{
    Outcome o;
    for (int m : all_m)
        for (int k = 0; k <= 3; ++k)
            for (int n = 0; n <= 6; ++n) {
                const auto p = clifford_polynomial(n, m, k);
                o.require(ball_inner_exact(p, p).equals_scalar(norm_sq(n, k, m)), "exact norm at " + at(n, k, m));
                if (m <= 3) {
                    const double q = ball_inner(p, p, QuadratureRule::ball(m, 2 * (n + k))).scalar_part();
                    const double e = norm_sq(n, k, m).get_d();
                    o.require(std::fabs(q - e) <= 1e-10 * e, "quadrature norm at " + at(n, k, m));
                }
            }
    return o;
}

Outcome orthogonality()
{
    Outcome o;
    for (int m : all_m) {
        const auto fam = legendre_family(m, 6, 3, true);
        const auto ex = gram_report_exact(fam, std::vector<Rational>(fam.size(), Rational(1)));
        o.require(ex.failures == 0, "exact Gram matrix not the identity at m=" + std::to_string(m));
        if (m <= 3) {
            const auto r = gram_report(fam, std::vector<double>(fam.size(), 1.0), QuadratureRule::ball(m, 20));
            o.require(std::max({r.max_off_diagonal, r.max_diagonal_error, r.max_non_scalar}) <= 1e-10,
                      "quadrature Gram matrix off identity at m=" + std::to_string(m));
        }
        for (int k = 0; k <= 3; ++k) {
            const int dk = static_cast<int>(basis_for(m, k)->size());
            for (int i = 1; i <= dk; ++i)
                for (int a = 0; a <= 3; ++a)
                    for (int b = 0; b <= 3; ++b)
                        o.require(ball_inner_x_exact(clifford_polynomial(2 * a, m, k, i), clifford_polynomial(2 * b, m, k, i))
                                      .is_zero(),
                                  "x-orthogonality at " + at(2 * a, 2 * b, m, k));
        }
    }
    return o;
}

Outcome jacobi()
{
    Outcome o;
    for (int m : all_m)
        for (int k = 0; k <= 4; ++k) {
            for (int n = 0; n <= 17; ++n)
                o.require(jacobi_identification_residual(n, k, m).is_zero(), "identification residual at " + at(n, k, m));
            o.require(jacobi_radial_id(0, k, m).sign == 1, "sign at N=0 is not + for " + at(0, k, m));
        }
    return o;
}

Outcome fourier()
{
    Outcome o;
    double worst = 0;
    for (double rho : {0.5, 1.0, 2.0, 5.0}) {
        const auto rule = QuadratureRule::oscillatory(2, 5, rho);
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= 2; ++k)
                for (double th : {0.0, 0.9, 2.2}) {
                    const double xi[2] = {rho * std::cos(th), rho * std::sin(th)};
                    const auto p = normalized_legendre(n, 2, k);
                    const auto a = fourier_transform(p, xi), b = numeric_fourier(p, xi, rule);
                    const double rel = std::sqrt(norm_sq(a - b) / norm_sq(a));
                    worst = std::max(worst, rel);
                    o.require(rel <= 1e-6, "oracle disagreement at " + at(n, k, 2));
                }
    }
    for (int k = 0; k <= 2; ++k)
        for (int n = 0; n <= 2; ++n) {
            const auto r = plancherel(clifford_polynomial(n, 2, k), 200);
            o.require(std::fabs(r.integral - r.expected) <= 1e-4 * r.expected, "Plancherel at " + at(n, k, 2));
        }
    std::ostringstream s;
    s << "max rel " << worst;
    if (o.ok)
        o.note = s.str();
    return o;
}

Outcome zeros()
{
    Outcome o;
    for (int m : {2, 3})
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 12; ++n) {
                const auto p = gegenbauer_by_operators(n, k, m, Rational(0)).poly;
                o.require(p.evaluate(Rational(0)) != 0 && sturm_root_count(p, Rational(0), Rational(1)) == n / 2,
                          "sphere count at " + at(n, k, m));
                o.require(static_cast<int>(zero_radii(n, k, m).size()) == n / 2, "radius count at " + at(n, k, m));
                o.require(cyclic_interlacing({zero_radii(n, k, m), zero_radii(n + 1, k, m), zero_radii(n + 2, k, m)}),
                          "radii not interlaced at " + at(n, k, m));
            }
    const auto r = zero_radii(2, 0, 2);
    o.require(r.size() == 1 && std::fabs(r[0] - 1 / std::sqrt(2.0)) <= 1e-12, "radius (2,0,2) is not 1/sqrt(2)");
    return o;
}

Outcome degeneracy()
{
    Outcome o;
    for (int N = 0; N <= 6; ++N)
        for (int k = 0; k <= 6; ++k) {
            const auto d = degeneracy_m2(N, k);
            o.require(d.radial_zero && d.coordinate_zero, "identity fails at N=" + std::to_string(N) + ", k=" + std::to_string(k));
        }
    bool nonzero = false;
    for (int j = 1; j <= 2; ++j) {
        const auto d = degeneracy_check(3, 0, 0, 1, j);
        nonzero = nonzero || (!d.coordinate_zero && d.max_sampled > 1e-3);
    }
    o.require(nonzero, "negative control at m=3 vanished");
    return o;
}

Outcome bases()
{
    Outcome o;
    for (int m : all_m)
        for (int k = 0; k <= (m <= 3 ? 4 : 3); ++k) {
            const auto b = basis_for(m, k);
            o.require(Integer(static_cast<long>(b->size())) == binomial(unsigned(m + k - 2), unsigned(k)),
                      "dimension count at m=" + std::to_string(m) + ", k=" + std::to_string(k));
            for (std::size_t i = 0; i < b->size(); ++i)
                for (std::size_t j = 0; j < b->size(); ++j) {
                    const auto g = sphere_inner(b->elements[i], b->elements[j]);
                    o.require(i == j ? g.is_unit() : g.is_zero(), "Gram condition at m=" + std::to_string(m));
                }
        }
    // m = 3 Gram matrix by sphere quadrature
    for (int k = 0; k <= 4; ++k) {
        const auto b = basis_for(3, k);
        const auto rule = QuadratureRule::ball(3, 2 * k + 2);
        for (std::size_t i = 0; i < b->size(); ++i)
            for (std::size_t j = 0; j < b->size(); ++j) {
                Multivector<double> acc(3);
                for (std::size_t d = 0; d < rule.directions.size(); ++d)
                    acc += geometric_product(hermitian_conjugate(b->elements[i].evaluate(rule.directions[d])),
                                             b->elements[j].evaluate(rule.directions[d]))
                         * rule.angular_weights[d];
                if (i == j)
                    acc[Blade{0}] -= 1;
                o.require(std::sqrt(norm_sq(acc)) <= 1e-12, "numeric Gram at m=3, k=" + std::to_string(k));
            }
    }
    for (int m : {2, 3, 4})
        for (int k = 0; k <= 3; ++k)
            for (int k2 = 0; k2 <= 3; ++k2)
                for (const auto& a : basis_for(m, k)->elements)
                    for (const auto& b : basis_for(m, k2)->elements)
                        o.require(sphere_inner_theta(a, b).is_zero(), "sphere identity at m=" + std::to_string(m));
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
        double limit;  // seconds; 0 when untimed
    };
    const std::vector<Criterion> criteria{
        {1, "triple construction", triple_construction, 10},
        {2, "eigenvalue identity", eigenvalues, 0},
        {3, "Bonnet formulas", bonnet, 5},
        {4, "recurrences", recurrences, 0},
        {5, "norm formula", norms, 0},
        {6, "orthogonality", orthogonality, 0},
        {7, "Jacobi identification", jacobi, 0},
        {8, "Fourier transform", fourier, 60},
        {9, "zeros and interlacing", zeros, 0},
        {10, "planar degeneracy", degeneracy, 0},
        {11, "monogenic bases", bases, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && secs >= c.limit && o.ok) {
            o.ok = false;
            o.note = "over the time limit";
        }
        failed += !o.ok;
        std::printf("%s  criterion %2d  %-24s", o.ok ? "PASS" : "FAIL", c.id, c.title);
        if (c.limit > 0)
            std::printf("  %.3f s (limit %.0f s)", secs, c.limit);
        else
            std::printf("  %.3f s", secs);
        if (!o.note.empty())
            std::printf("  %s", o.note.c_str());
        std::printf("\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
