#include "cliffleg/checks.hpp"

#include "cliffleg/analysis.hpp"
#include "cliffleg/clifford.hpp"
#include "cliffleg/jacobi.hpp"
#include "cliffleg/legendre.hpp"
#include "cliffleg/monogenics.hpp"
#include "cliffleg/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace cliffleg {

namespace {

using Rng = std::mt19937_64;

/// Dimensions a check runs over; empty when --m selects an unsupported one.
std::vector<int> dims(const VerifyOptions& o, std::vector<int> defaults, const std::vector<int>& supported)
{
    if (!o.m)
        return defaults;
    if (std::find(supported.begin(), supported.end(), *o.m) == supported.end())
        return {};
    return {*o.m};
}

std::vector<int> range(int lo, int hi)
{
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i)
        v.push_back(i);
    return v;
}

CheckResult skipped(const std::string& name, const VerifyOptions& o)
{
    CheckResult r{name, true, true, 0, ""};
    r.detail = "not defined for m=" + std::to_string(o.m.value_or(0));
    return r;
}

/// Exact check: passes iff no case failed; the residual reported is the worst coefficient seen.
struct ExactTally {
    std::string name;
    long cases = 0;
    long failures = 0;
    double worst = 0;
    std::string first_failure = {};

    void record(bool ok, double residual, const std::string& where)
    {
        ++cases;
        if (!ok) {
            ++failures;
            worst = std::max(worst, residual);
            if (first_failure.empty())
                first_failure = where;
        }
    }
    void record(const RationalPoly& residual, const std::string& where)
    {
        double w = 0;
        for (const auto& c : residual.coefficients())
            w = std::max(w, std::fabs(c.get_d()));
        record(residual.is_zero(), w, where);
    }
    void record(const ParityRadialForm& residual, const std::string& where) { record(residual.poly, where); }

    CheckResult result() const
    {
        CheckResult r{name, failures == 0, false, worst, ""};
        std::ostringstream d;
        d << cases << " cases, exact";
        if (failures)
            d << ", " << failures << " failed, first at " << first_failure;
        r.detail = d.str();
        return r;
    }
};

/// Floating check against a tolerance.
struct FloatTally {
    std::string name;
    double tol;
    long cases = 0;
    double worst = 0;
    std::string worst_at = {};

    void record(double err, const std::string& where)
    {
        ++cases;
        if (!(err <= worst) || cases == 1) {
            if (!(err <= worst)) {
                worst = std::isnan(err) ? INFINITY : err;
                worst_at = where;
            }
        }
    }
    CheckResult result() const
    {
        CheckResult r{name, worst <= tol, false, worst, ""};
        std::ostringstream d;
        d.precision(3);
        d << cases << " cases, tol " << tol;
        if (!worst_at.empty())
            d << ", worst at " << worst_at;
        r.detail = d.str();
        return r;
    }
};

std::string at(std::initializer_list<std::pair<const char*, long>> kv)
{
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty())
            s += ",";
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

Rational random_rational(Rng& rng)
{
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return make_rational(num(rng), den(rng));
}

Multivector<Rational> random_multivector(int m, Rng& rng, double density = 0.5)
{
    std::bernoulli_distribution keep(density);
    Multivector<Rational> u(m);
    for (std::uint32_t a = 0; a < u.size(); ++a)
        if (keep(rng))
            u[Blade{a}] = random_rational(rng);
    return u;
}

ParityRadialForm random_form(int m, int k, Rng& rng)
{
    std::uniform_int_distribution<int> deg(0, 4), par(0, 1);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        c.push_back(random_rational(rng));
    return {m, k, par(rng) ? Parity::Odd : Parity::Even, RationalPoly(std::move(c))};
}

/// Multiplies the generator words and sorts them with adjacent swaps, tracking the sign.
SignedBlade brute_force_product(Blade a, Blade b, int m)
{
    std::vector<int> word;
    for (int j = 1; j <= m; ++j)
        if (a.mask & Blade::generator(j).mask)
            word.push_back(j);
    for (int j = 1; j <= m; ++j)
        if (b.mask & Blade::generator(j).mask)
            word.push_back(j);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
                changed = true;
            } else if (word[i] == word[i + 1]) {
                word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    std::uint32_t mask = 0;
    for (int j : word)
        mask |= Blade::generator(j).mask;
    return {sign, Blade{mask}};
}

double poly_linf(const MultivectorPolynomial& p)
{
    double w = 0;
    for (const auto& [a, c] : p.terms())
        for (const auto& v : c.coefficients())
            w = std::max(w, std::fabs(v.get_d()));
    return w;
}

double mv_norm(const Multivector<double>& u) { return std::sqrt(norm_sq(u)); }

// ---------------------------------------------------------------- algebra

CheckResult check_blade_product(const VerifyOptions& o)
{
    ExactTally t{"algebra.blade_product_oracle"};
    const auto ms = dims(o, range(2, 8), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(11);
    for (int m : ms) {
        const std::uint32_t n = std::uint32_t{1} << m;
        auto test = [&](std::uint32_t a, std::uint32_t b) {
            const auto fast = blade_product(Blade{a}, Blade{b}, m);
            const auto slow = brute_force_product(Blade{a}, Blade{b}, m);
            t.record(fast.sign == slow.sign && fast.blade == slow.blade, 1, at({{"m", m}, {"a", a}, {"b", b}}));
        };
        if (m <= 6) {
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; ++b)
                    test(a, b);
        } else {
            std::uniform_int_distribution<std::uint32_t> d(0, n - 1);
            for (int s = 0; s < 4000; ++s)
                test(d(rng), d(rng));
        }
    }
    return t.result();
}

CheckResult check_generator_relations(const VerifyOptions& o)
{
    ExactTally t{"algebra.generator_relations"};
    const auto ms = dims(o, range(2, 12), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                const auto ei = Multivector<Rational>::blade(m, Blade::generator(i));
                const auto ej = Multivector<Rational>::blade(m, Blade::generator(j));
                const auto s = ei * ej + ej * ei;
                const bool ok = i == j ? s == Multivector<Rational>::scalar(m, Rational(-2)) : s.is_zero();
                t.record(ok, 1, at({{"m", m}, {"i", i}, {"j", j}}));
            }
    return t.result();
}

CheckResult check_associativity(const VerifyOptions& o)
{
    ExactTally t{"algebra.associativity"};
    const auto ms = dims(o, range(2, 6), range(2, 8));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(12);
    for (int m : ms)
        for (int s = 0; s < 15; ++s) {
            const auto u = random_multivector(m, rng), v = random_multivector(m, rng), w = random_multivector(m, rng);
            t.record((u * v) * w == u * (v * w), 1, at({{"m", m}, {"sample", s}}));
        }
    return t.result();
}

CheckResult check_conjugation(const VerifyOptions& o)
{
    ExactTally t{"algebra.conjugation_reverses_products"};
    const auto ms = dims(o, range(2, 6), range(2, 8));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(13);
    for (int m : ms) {
        for (int s = 0; s < 15; ++s) {
            const auto u = random_multivector(m, rng), v = random_multivector(m, rng);
            t.record(hermitian_conjugate(u * v) == hermitian_conjugate(v) * hermitian_conjugate(u), 1,
                     at({{"m", m}, {"sample", s}}));
        }
        for (int j = 1; j <= m; ++j) {
            const auto ej = Multivector<Rational>::blade(m, Blade::generator(j));
            t.record(hermitian_conjugate(ej) == -ej, 1, at({{"m", m}, {"j", j}}));
        }
    }
    return t.result();
}

CheckResult check_grade_decomposition(const VerifyOptions& o)
{
    ExactTally t{"algebra.grade_decomposition"};
    const auto ms = dims(o, range(2, 8), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(14);
    for (int m : ms) {
        const auto u = random_multivector(m, rng);
        Multivector<Rational> sum(m);
        for (int g = 0; g <= m; ++g) {
            const auto pg = grade_project(u, g);
            sum += pg;
            t.record(grade_project(pg, g) == pg, 1, at({{"m", m}, {"grade", g}}));
            for (int h = 0; h <= m; ++h)
                if (h != g)
                    t.record(grade_project(pg, h).is_zero(), 1, at({{"m", m}, {"grade", g}, {"other", h}}));
        }
        t.record(sum == u, 1, at({{"m", m}}));
    }
    return t.result();
}

CheckResult check_vector_commutation(const VerifyOptions& o)
{
    ExactTally t{"algebra.vector_commutation"};
    const auto ms = dims(o, range(2, 12), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(15);
    for (int m : ms) {
        std::vector<Rational> c;
        for (int j = 0; j < m; ++j)
            c.push_back(random_rational(rng));
        const auto x = embed_vector<Rational>(c);
        for (int j = 1; j <= m; ++j) {
            const auto ej = Multivector<Rational>::blade(m, Blade::generator(j));
            const auto rhs = Multivector<Rational>::scalar(m, Rational(-2 * c[static_cast<std::size_t>(j - 1)])) - x * ej;
            t.record(ej * x == rhs, 1, at({{"m", m}, {"j", j}}));
        }
        Rational r2 = 0;
        for (const auto& v : c)
            r2 += v * v;
        t.record(x * x == Multivector<Rational>::scalar(m, Rational(-r2)), 1, at({{"m", m}, {"square", 1}}));
    }
    return t.result();
}

CheckResult check_inner_norm(const VerifyOptions& o)
{
    ExactTally t{"algebra.inner_product_norm"};
    const auto ms = dims(o, range(2, 8), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(16);
    for (int m : ms)
        for (int s = 0; s < 10; ++s) {
            const auto u = random_multivector(m, rng);
            const auto in = clifford_inner(u, u);
            t.record(in.scalar == norm_sq(u) && in.scalar >= 0, 1, at({{"m", m}, {"sample", s}}));
            t.record((in.scalar == 0) == u.is_zero(), 1, at({{"m", m}, {"definite", s}}));
        }
    return t.result();
}

CheckResult check_monogenic_dimensions(const VerifyOptions& o)
{
    ExactTally t{"algebra.monogenic_dimensions"};
    const auto ms = dims(o, range(2, 6), range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= (m == 3 ? 4 : 3); ++k)
            t.record(Integer(static_cast<long>(basis_for(m, k)->size())) == monogenic_space_dim(m, k), 1,
                     at({{"m", m}, {"k", k}}));
    return t.result();
}

CheckResult check_monogenicity(const VerifyOptions& o)
{
    ExactTally t{"algebra.monogenicity"};
    const auto ms = dims(o, range(2, 6), range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= (m == 2 ? 10 : (m == 3 ? 4 : 3)); ++k) {
            const auto b = basis_for(m, k);
            for (std::size_t i = 0; i < b->size(); ++i) {
                const auto& y = b->elements[i].unscaled();
                const auto d = dirac_on_polynomial(y);
                t.record(d.is_zero() && y.is_homogeneous(k), poly_linf(d), at({{"m", m}, {"k", k}, {"i", long(i + 1)}}));
            }
        }
    return t.result();
}

CheckResult check_sphere_gram(const VerifyOptions& o)
{
    ExactTally t{"algebra.sphere_gram"};
    const auto ms = dims(o, range(2, 6), range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms) {
        const int kmax = m == 3 ? 4 : 3;
        for (int k = 0; k <= kmax; ++k)
            for (int k2 = 0; k2 <= kmax; ++k2) {
                const auto b1 = basis_for(m, k), b2 = basis_for(m, k2);
                for (std::size_t i = 0; i < b1->size(); ++i)
                    for (std::size_t j = 0; j < b2->size(); ++j) {
                        const auto s = sphere_inner(b1->elements[i], b2->elements[j]);
                        const bool diag = k == k2 && i == j;
                        t.record(diag ? s.is_unit() : s.is_zero(), mv_norm(s.to_double()),
                                 at({{"m", m}, {"k", k}, {"i", long(i + 1)}, {"k'", k2}, {"j", long(j + 1)}}));
                    }
            }
    }
    return t.result();
}

CheckResult check_sphere_theta(const VerifyOptions& o)
{
    ExactTally t{"algebra.sphere_theta_vanishes"};
    const auto ms = dims(o, range(2, 5), range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms) {
        const int kmax = m == 3 ? 4 : 3;
        for (int k = 0; k <= kmax; ++k)
            for (int k2 = 0; k2 <= kmax; ++k2) {
                const auto b1 = basis_for(m, k), b2 = basis_for(m, k2);
                for (std::size_t i = 0; i < b1->size(); ++i)
                    for (std::size_t j = 0; j < b2->size(); ++j) {
                        const auto s = sphere_inner_theta(b1->elements[i], b2->elements[j]);
                        t.record(s.is_zero(), mv_norm(s.to_double()),
                                 at({{"m", m}, {"k", k}, {"i", long(i + 1)}, {"k'", k2}, {"j", long(j + 1)}}));
                    }
            }
    }
    return t.result();
}

CheckResult check_m2_closed_form(const VerifyOptions& o)
{
    ExactTally t{"algebra.m2_closed_form_agreement"};
    if (o.m && *o.m != 2)
        return skipped(t.name, o);
    for (int k = 0; k <= 8; ++k) {
        const MonogenicBasis general = build_basis(2, k);
        const MonogenicBasis closed = m2_basis(k);
        const auto& g = general.elements.at(0);
        const auto& c = closed.elements.at(0);
        // closed = general * lambda with lambda = int conj(general) closed, a unit constant
        const SphereInner lam = sphere_inner(g, c);
        const Surd w = lam.factor * Surd::sqrt_of(c.norm_sq().coeff) / Surd::sqrt_of(g.norm_sq().coeff);
        bool ok = w.is_rational() && norm_sq(lam.raw) * lam.factor.square() == 1;
        if (ok)
            ok = g.unscaled().right_multiply(lam.raw) * w.coeff() == c.unscaled();
        t.record(ok, 1, at({{"k", k}}));
    }
    return t.result();
}

// ---------------------------------------------------------------- radial

CheckResult check_coordinate_oracle(const VerifyOptions& o)
{
    ExactTally t{"radial.coordinate_oracle"};
    const auto ms = dims(o, {2, 3}, range(2, 4));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 3; ++k) {
            const auto b = basis_for(m, k);
            const auto& y = b->elements.front().unscaled();
            for (int r = 0; r <= 3; ++r)
                for (Parity par : {Parity::Even, Parity::Odd}) {
                    const ParityRadialForm f{m, k, par, RationalPoly::monomial(Rational(1), r)};
                    const auto p = form_to_polynomial(f, y);
                    const auto where = at({{"m", m}, {"k", k}, {"r", r}, {"odd", par == Parity::Odd}});
                    const auto dd = dirac_on_polynomial(p) - form_to_polynomial(dirac(f), y);
                    const auto de = euler_on_polynomial(p) - form_to_polynomial(euler(f), y);
                    const auto dx = MultivectorPolynomial::vector_variable(m) * p - form_to_polynomial(mul_x(f), y);
                    t.record(dd.is_zero(), poly_linf(dd), where + ",op=dirac");
                    t.record(de.is_zero(), poly_linf(de), where + ",op=euler");
                    t.record(dx.is_zero(), poly_linf(dx), where + ",op=x");
                }
        }
    return t.result();
}

CheckResult check_dirac_x(const VerifyOptions& o)
{
    ExactTally t{"radial.dirac_x_anticommutator"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(21);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int s = 0; s < 6; ++s) {
                const auto f = random_form(m, k, rng);
                ParityRadialForm r = dirac(mul_x(f));
                r += f * Rational(m);
                r += mul_x(dirac(f));
                r += euler(f) * Rational(2);
                t.record(r, at({{"m", m}, {"k", k}, {"sample", s}}));
            }
    return t.result();
}

CheckResult check_dirac_euler(const VerifyOptions& o)
{
    ExactTally t{"radial.dirac_euler_commutator"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(22);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int s = 0; s < 6; ++s) {
                const auto f = random_form(m, k, rng);
                t.record(dirac(euler(f)) - dirac(f) - euler(dirac(f)), at({{"m", m}, {"k", k}, {"sample", s}}));
            }
    return t.result();
}

CheckResult check_triple_construction(const VerifyOptions& o)
{
    ExactTally t{"radial.triple_construction"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 8; ++n)
                for (int a = 0; a <= 2; ++a) {
                    const auto ops = gegenbauer_by_operators(n, k, m, Rational(a));
                    const auto rod = rodrigues_integer_alpha(n, k, m, a);
                    bool ok = ops == rod && ops.parity == parity_of(n) && ops.poly.degree() == n / 2;
                    if (a == 0)
                        ok = ok && explicit_legendre(n, k, m) == ops;
                    t.record(ok, 1, at({{"m", m}, {"k", k}, {"n", n}, {"alpha", a}}));
                }
    return t.result();
}

CheckResult check_eigenvalue(const VerifyOptions& o)
{
    ExactTally t{"radial.eigenvalue"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    const std::vector<Rational> alphas{Rational(0), Rational(1), Rational(2), make_rational(1, 2)};
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 8; ++n)
                for (std::size_t a = 0; a < alphas.size(); ++a) {
                    const auto c = gegenbauer_by_operators(n, k, m, alphas[a]);
                    t.record(apply_gegenbauer_operator(c, alphas[a]) - c * eigenvalue_C(alphas[a], n, m, k),
                             at({{"m", m}, {"k", k}, {"n", n}, {"alpha_index", long(a)}}));
                }
    t.record(eigenvalue_C(0, 1, 2, 0) == 4 && eigenvalue_C(0, 2, 2, 0) == 8, 1, "spot values");
    return t.result();
}

CheckResult check_radial_ode(const VerifyOptions& o)
{
    ExactTally t{"radial.legendre_ode"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int N = 0; N <= 6; ++N)
                t.record(radial_ode_residual(gegenbauer_by_operators(2 * N, k, m, Rational(0)), N),
                         at({{"m", m}, {"k", k}, {"N", N}}));
    return t.result();
}

CheckResult check_divisibility(const VerifyOptions& o)
{
    ExactTally t{"radial.weight_divisibility"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    const RationalPoly w = RationalPoly::one_minus_t();
    for (int m : ms)
        for (int k = 0; k <= 3; ++k)
            for (int n = 0; n <= 8; ++n) {
                ParityRadialForm f{m, k, Parity::Even, w.pow(static_cast<unsigned>(n))};
                for (int l = 0; l <= n; ++l) {
                    const auto rem = f.poly.divmod(w.pow(static_cast<unsigned>(n - l))).second;
                    t.record(rem, at({{"m", m}, {"k", k}, {"n", n}, {"l", l}}));
                    f = dirac(f);
                }
            }
    return t.result();
}

// ---------------------------------------------------------------- recurrence

CheckResult check_leibniz(const VerifyOptions& o)
{
    ExactTally t{"recurrence.weight_leibniz"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    Rng rng(31);
    for (int m : ms)
        for (int k = 0; k <= 3; ++k)
            for (int s = 0; s < 4; ++s) {
                const auto f = random_form(m, k, rng);
                for (int l = 0; l <= 6; ++l)
                    t.record(leibniz_residual(f, l), at({{"m", m}, {"k", k}, {"sample", s}, {"l", l}}));
            }
    return t.result();
}

template <class F>
CheckResult recurrence_grid(const std::string& name, const VerifyOptions& o, F&& residual)
{
    ExactTally t{name};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 10; ++n)
                t.record(residual(n, k, m), at({{"m", m}, {"k", k}, {"n", n}}));
    return t.result();
}

CheckResult check_three_term(const VerifyOptions& o)
{
    return recurrence_grid("recurrence.dirac_three_term", o, dirac_recurrence_residual);
}

CheckResult check_euler_lemma(const VerifyOptions& o)
{
    return recurrence_grid("recurrence.euler_lemma", o, euler_lemma_residual);
}

CheckResult check_legendre_derivative(const VerifyOptions& o)
{
    return recurrence_grid("recurrence.legendre_derivative", o, legendre_derivative_residual);
}

CheckResult check_gegenbauer_derivative(const VerifyOptions& o)
{
    ExactTally t{"recurrence.gegenbauer_derivative"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    const std::vector<Rational> alphas{Rational(0), Rational(1), Rational(2), make_rational(1, 2), make_rational(-1, 2)};
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 10; ++n)
                for (std::size_t a = 0; a < alphas.size(); ++a) {
                    // the identity needs n >= 1 unless alpha = 0
                    if (n == 0 && alphas[a] != 0)
                        continue;
                    const auto where = at({{"m", m}, {"k", k}, {"n", n}, {"alpha_index", long(a)}});
                    t.record(gegenbauer_derivative_residual(n, k, m, alphas[a]), where);
                    t.record(gegenbauer_derivative_residual_cleared(n, k, m, alphas[a]), where + ",cleared");
                }
    return t.result();
}

// ---------------------------------------------------------------- bonnet

CheckResult check_bonnet_unnormalized(const VerifyOptions& o, bool odd)
{
    ExactTally t{odd ? "bonnet.odd" : "bonnet.even"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int N = 0; N <= 5; ++N)
                t.record(bonnet_residual(2 * N + (odd ? 1 : 0), k, m), at({{"m", m}, {"k", k}, {"N", N}}));
    return t.result();
}

CheckResult check_bonnet_normalized(const VerifyOptions& o)
{
    ExactTally t{"bonnet.normalized"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 11; ++n) {
                const auto r = bonnet_normalized_residual(n, k, m);
                t.record(r.is_zero(), r.max_abs(), at({{"m", m}, {"k", k}, {"n", n}}));
                // closed form against the unnormalised pair rescaled by normalisation ratios
                const auto c = bonnet_normalized(n, k, m);
                const auto u = n % 2 == 0 ? bonnet_even(n / 2, k, m) : bonnet_odd(n / 2, k, m);
                const Surd A = Surd(u.alpha) * normalization_scale(n, k, m) / normalization_scale(n + 1, k, m);
                const Surd B = n == 0 ? Surd(Rational(0))
                                      : Surd(u.beta) * normalization_scale(n, k, m) / normalization_scale(n - 1, k, m);
                t.record(A == c.A && B == c.B, 1, at({{"m", m}, {"k", k}, {"n", n}, {"coeffs", 1}}));
            }
    return t.result();
}

CheckResult check_bonnet_spot(const VerifyOptions& o)
{
    ExactTally t{"bonnet.spot_value"};
    if (o.m && *o.m != 2)
        return skipped(t.name, o);
    const auto c = bonnet_odd(0, 0, 2);
    t.record(c.alpha == make_rational(-1, 8) && c.beta == 1, 1, "odd N=0,k=0,m=2");
    const auto e = bonnet_even(0, 0, 2);
    t.record(e.alpha == make_rational(-1, 2) && e.beta == 0, 1, "even N=0,k=0,m=2");
    const auto nz = bonnet_normalized(0, 0, 2);
    t.record(nz.A == Surd(Rational(-1), make_rational(1, 2)) && nz.B.is_zero(), 1, "normalized n=0,k=0,m=2");
    return t.result();
}

CheckResult check_norms_exact(const VerifyOptions& o)
{
    ExactTally t{"bonnet.norms_exact"};
    const auto ms = dims(o, range(2, 6), range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 3; ++k)
            for (int n = 0; n <= 6; ++n) {
                const auto c = clifford_polynomial(n, m, k);
                t.record(ball_inner_exact(c, c).equals_scalar(norm_sq(n, k, m)), 1, at({{"m", m}, {"k", k}, {"n", n}}));
                const auto nc = normalize(c);
                t.record(ball_inner_exact(nc, nc).equals_scalar(Rational(1)), 1,
                         at({{"m", m}, {"k", k}, {"n", n}, {"normalized", 1}}));
            }
    return t.result();
}

CheckResult check_orthogonality_exact(const VerifyOptions& o)
{
    ExactTally t{"bonnet.orthogonality_exact"};
    const auto ms = dims(o, range(2, 6), range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms) {
        const auto fam = legendre_family(m, 6, 3, true);
        const auto rep = gram_report_exact(fam, std::vector<Rational>(fam.size(), Rational(1)));
        t.record(rep.failures == 0, double(rep.failures), at({{"m", m}, {"size", long(rep.size)}}));
    }
    return t.result();
}

CheckResult check_orthogonality_family(const VerifyOptions& o)
{
    ExactTally t{"bonnet.orthogonality_unnormalized"};
    const auto ms = dims(o, {2, 3}, range(2, 4));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms) {
        const auto fam = legendre_family(m, 6, 6, false);
        std::vector<Rational> expected;
        for (const auto& p : fam)
            expected.push_back(norm_sq(p.n, p.k, m));
        const auto rep = gram_report_exact(fam, expected);
        t.record(rep.failures == 0, double(rep.failures), at({{"m", m}, {"size", long(rep.size)}}));
    }
    return t.result();
}

CheckResult check_x_orthogonality(const VerifyOptions& o)
{
    ExactTally t{"bonnet.x_orthogonality"};
    const auto ms = dims(o, range(2, 6), range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 3; ++k) {
            const int dk = static_cast<int>(basis_for(m, k)->size());
            for (int i = 1; i <= dk; ++i)
                for (int a = 0; a <= 3; ++a)
                    for (int b = 0; b <= 3; ++b) {
                        const auto p = clifford_polynomial(2 * a, m, k, i);
                        const auto q = clifford_polynomial(2 * b, m, k, i);
                        t.record(ball_inner_x_exact(p, q).is_zero(), 1,
                                 at({{"m", m}, {"k", k}, {"i", i}, {"n'", 2 * a}, {"n", 2 * b}}));
                    }
        }
    return t.result();
}

CheckResult check_expansion_support(const VerifyOptions& o)
{
    ExactTally t{"bonnet.expansion_support"};
    const auto ms = dims(o, {2, 3}, range(2, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms) {
        const auto fam = legendre_family(m, 7, 2, false);
        for (int k = 0; k <= 2; ++k) {
            const int dk = static_cast<int>(basis_for(m, k)->size());
            for (int i = 1; i <= dk; ++i)
                for (int n = 0; n <= 5; ++n) {
                    const auto c = n % 2 == 0 ? bonnet_even(n / 2, k, m) : bonnet_odd(n / 2, k, m);
                    const auto target = clifford_polynomial(n, m, k, i);
                    for (const auto& member : fam) {
                        const ExactInner g = ball_inner_x_exact(member, target);
                        const bool same = member.k == k && member.i == i;
                        Rational expected = 0;
                        if (same && member.n == n + 1)
                            expected = c.alpha * norm_sq(n + 1, k, m);
                        else if (same && member.n == n - 1)
                            expected = c.beta * norm_sq(n - 1, k, m);
                        t.record(g.equals_scalar(expected), 1,
                                 at({{"m", m}, {"k", k}, {"i", i}, {"n", n}, {"member_n", member.n},
                                     {"member_k", member.k}, {"member_i", member.i}}));
                    }
                }
        }
    }
    return t.result();
}

// ---------------------------------------------------------------- jacobi

CheckResult check_jacobi_ode(const VerifyOptions&)
{
    ExactTally t{"jacobi.ode"};
    const std::vector<Rational> params{Rational(0), make_rational(1, 2), Rational(1), make_rational(3, 2),
                                       make_rational(-1, 2), Rational(3)};
    for (int n = 0; n <= 10; ++n)
        for (std::size_t a = 0; a < params.size(); ++a)
            for (std::size_t b = 0; b < params.size(); ++b)
                t.record(jacobi_ode_residual(jacobi_build(n, params[a], params[b])),
                         at({{"n", n}, {"alpha_index", long(a)}, {"beta_index", long(b)}}));
    return t.result();
}

CheckResult check_jacobi_identification(const VerifyOptions& o)
{
    ExactTally t{"jacobi.identification"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 17; ++n) {
                const auto r = jacobi_identification_residual(n, k, m);
                t.record(r.is_zero(), r.max_abs(), at({{"m", m}, {"k", k}, {"n", n}}));
            }
    return t.result();
}

CheckResult check_jacobi_sign(const VerifyOptions& o)
{
    ExactTally t{"jacobi.sign_at_zero"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            t.record(jacobi_radial_id(0, k, m).sign == 1, 1, at({{"m", m}, {"k", k}}));
    return t.result();
}

CheckResult check_jacobi_roots(const VerifyOptions& o)
{
    FloatTally t{"jacobi.root_residuals", o.tol.value_or(1e-13)};
    const std::vector<Rational> betas{Rational(0), make_rational(1, 2), Rational(1), make_rational(3, 2),
                                      Rational(2), make_rational(7, 2), Rational(6)};
    for (int n = 1; n <= 20; ++n)
        for (std::size_t bi = 0; bi < betas.size(); ++bi) {
            const auto roots = jacobi_roots(n, Rational(0), betas[bi]);
            for (const auto& r : roots) {
                double err = static_cast<double>(r.residual);
                if (!(r.value > -1 && r.value < 1) || !(r.hi - r.lo < 1e-13L))
                    err = INFINITY;
                const long double b = static_cast<long double>(betas[bi].get_d());
                const long double flo = jacobi_evaluate(n, 0.0L, b, r.lo), fhi = jacobi_evaluate(n, 0.0L, b, r.hi);
                if (r.lo != r.hi && !((flo < 0) != (fhi < 0) || flo == 0 || fhi == 0))
                    err = INFINITY;
                t.record(err, at({{"n", n}, {"beta_index", long(bi)}}));
            }
        }
    return t.result();
}

CheckResult check_jacobi_interlacing(const VerifyOptions&)
{
    ExactTally t{"jacobi.zero_interlacing"};
    for (int n = 1; n <= 15; ++n)
        for (int b2 = 0; b2 <= 3; ++b2) {
            const Rational beta = make_rational(b2, 2);
            const bool ok = interlacing_check(jacobi_zeros(n, 0, beta), jacobi_zeros(n, 0, beta + 1),
                                              jacobi_zeros(n, 0, beta + 2));
            t.record(ok, 1, at({{"n", n}, {"twice_beta", b2}}));
        }
    return t.result();
}

CheckResult check_sphere_count(const VerifyOptions& o)
{
    ExactTally t{"jacobi.sphere_count"};
    const auto ms = dims(o, range(2, 6), range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 1; n <= 14; ++n) {
                const auto p = gegenbauer_by_operators(n, k, m, Rational(0)).poly;
                // P(0) != 0, so the only zero at the origin is the factor x for odd n
                const bool ok = p.evaluate(Rational(0)) != 0 && sturm_root_count(p, Rational(0), Rational(1)) == n / 2
                             && static_cast<int>(zero_radii(n, k, m).size()) == n / 2;
                t.record(ok, 1, at({{"m", m}, {"k", k}, {"n", n}}));
            }
    return t.result();
}

CheckResult check_radii_interlacing(const VerifyOptions& o)
{
    ExactTally t{"jacobi.radii_interlacing"};
    const auto ms = dims(o, {2, 3}, range(2, 12));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 12; ++n) {
                const bool ok = cyclic_interlacing({zero_radii(n, k, m), zero_radii(n + 1, k, m), zero_radii(n + 2, k, m)});
                t.record(ok, 1, at({{"m", m}, {"k", k}, {"n", n}}));
            }
    return t.result();
}

CheckResult check_radius_spot(const VerifyOptions& o)
{
    FloatTally t{"jacobi.radius_spot", o.tol.value_or(1e-12)};
    if (o.m && *o.m != 2)
        return skipped(t.name, o);
    const auto r = zero_radii(2, 0, 2);
    t.record(r.size() == 1 ? std::fabs(r[0] - std::sqrt(0.5)) : INFINITY, "n=2,k=0,m=2");
    return t.result();
}

// ---------------------------------------------------------------- fourier

long double series_bessel(long double nu, long double x)
{
    long double sum = 0, term = std::pow(x / 2, nu) / std::tgamma(nu + 1);
    for (int j = 0; j < 80; ++j) {
        sum += term;
        term *= -(x / 2) * (x / 2) / ((j + 1) * (j + 1 + nu));
    }
    return sum;
}

CheckResult check_bessel(const VerifyOptions& o)
{
    FloatTally t{"fourier.bessel_reference", o.tol.value_or(1e-12)};
    for (int twice = 0; twice <= 16; ++twice)
        for (double x : {0.25, 0.5, 1.0, 2.0, 3.0, 2 * std::numbers::pi, 7.5, 10.0}) {
            const long double ref = series_bessel(twice / 2.0L, x);
            const double got = bessel_j(BesselOrder{twice}, x);
            const double err = std::fabs(static_cast<double>(got - ref)) / std::max(std::fabs(static_cast<double>(ref)), 1e-3);
            t.record(err, "2nu=" + std::to_string(twice) + ",x=" + std::to_string(x));
        }
    for (double x : {1.0, std::numbers::pi / 2, 5.0, 50.0, 400.0, 900.0}) {
        const double c = std::sqrt(2 / (std::numbers::pi * x));
        t.record(std::fabs(bessel_j(BesselOrder{1}, x) - c * std::sin(x)) / c, "half x=" + std::to_string(x));
        t.record(std::fabs(bessel_j(BesselOrder{3}, x) - c * (std::sin(x) / x - std::cos(x))) / c,
                 "three-halves x=" + std::to_string(x));
    }
    return t.result();
}

CheckResult check_quadrature_exactness(const VerifyOptions& o)
{
    FloatTally t{"fourier.quadrature_exactness", o.tol.value_or(1e-12)};
    const auto ms = dims(o, {2, 3}, {2, 3});
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int d = 0; d <= 12; ++d) {
            const auto rule = QuadratureRule::ball(m, d);
            for (int deg = 0; deg <= d; ++deg)
                for (const auto& a : monomials_of_degree(m, deg)) {
                    const double exact = sphere_moment(a).to_double() / (deg + m);
                    double num = 0;
                    rule.for_each([&](std::span<const double> x, double w) {
                        double v = w;
                        for (int j = 0; j < m; ++j)
                            v *= std::pow(x[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(j)]);
                        num += v;
                    });
                    t.record(std::fabs(num - exact), at({{"m", m}, {"degree", d}, {"monomial_degree", deg}}));
                }
        }
    return t.result();
}

CheckResult check_norms_quadrature(const VerifyOptions& o)
{
    FloatTally t{"fourier.norms_quadrature", o.tol.value_or(1e-10)};
    const auto ms = dims(o, {2, 3}, {2, 3});
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 3; ++k)
            for (int n = 0; n <= 6; ++n) {
                const auto c = clifford_polynomial(n, m, k);
                const auto rule = QuadratureRule::ball(m, 2 * (n + k));
                const double expect = norm_sq(n, k, m).get_d();
                t.record(std::fabs(ball_inner(c, c, rule).scalar_part() - expect) / expect, at({{"m", m}, {"k", k}, {"n", n}}));
                const auto nc = normalize(c);
                t.record(std::fabs(ball_inner(nc, nc, rule).scalar_part() - 1), at({{"m", m}, {"k", k}, {"n", n}, {"normalized", 1}}));
            }
    return t.result();
}

CheckResult check_gram_quadrature(const VerifyOptions& o)
{
    FloatTally t{"fourier.gram_quadrature", o.tol.value_or(1e-10)};
    const auto ms = dims(o, {2, 3}, {2, 3});
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms) {
        const auto fam = legendre_family(m, 6, 3, true);
        const auto rep = gram_report(fam, std::vector<double>(fam.size(), 1.0), QuadratureRule::ball(m, 2 * (6 + 3 + 1)));
        t.record(std::max({rep.max_off_diagonal, rep.max_diagonal_error, rep.max_non_scalar}), at({{"m", m}}));
    }
    return t.result();
}

double relative_difference(const ComplexMultivector& a, const ComplexMultivector& b)
{
    const double scale = std::sqrt(norm_sq(a));
    return std::sqrt(norm_sq(a - b)) / std::max(scale, 1e-300);
}

CheckResult check_fourier_oracle(const VerifyOptions& o)
{
    FloatTally t{"fourier.closed_form_oracle", o.tol.value_or(1e-6)};
    const auto ms = dims(o, {2}, {2, 3});
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (double rho : {0.5, 1.0, 2.0, 5.0}) {
            const auto rule = QuadratureRule::oscillatory(m, 5, rho);
            std::vector<double> xi(static_cast<std::size_t>(m), 0.0);
            xi[0] = rho * std::cos(0.3);
            xi[1] = rho * std::sin(0.3);
            if (m == 3) {
                xi[0] *= 0.8;
                xi[1] *= 0.8;
                xi[2] = rho * 0.6;
            }
            for (int k = 0; k <= 2; ++k) {
                const int dk = static_cast<int>(basis_for(m, k)->size());
                for (int i = 1; i <= dk; ++i)
                    for (int n = 0; n <= 3; ++n) {
                        const auto p = clifford_polynomial(n, m, k, i);
                        t.record(relative_difference(fourier_transform(p, xi), numeric_fourier(p, xi, rule)),
                                 at({{"m", m}, {"k", k}, {"i", i}, {"n", n}, {"rho_x10", long(rho * 10)}}));
                    }
            }
        }
    return t.result();
}

CheckResult check_conjugate_symmetry(const VerifyOptions& o)
{
    FloatTally t{"fourier.conjugate_symmetry", o.tol.value_or(1e-12)};
    const auto ms = dims(o, {2, 3}, {2, 3});
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 2; ++k)
            for (int n = 0; n <= 3; ++n) {
                const auto p = clifford_polynomial(n, m, k);
                std::vector<double> xi(static_cast<std::size_t>(m), 0.4), neg(static_cast<std::size_t>(m), -0.4);
                xi[0] = neg[0] * -1.7;
                neg[0] = -xi[0];
                const auto a = fourier_transform(p, xi), b = fourier_transform(p, neg);
                const ComplexMultivector conj_b(b.re, -b.im);
                t.record(relative_difference(a, conj_b), at({{"m", m}, {"k", k}, {"n", n}}));
            }
    return t.result();
}

CheckResult check_plancherel(const VerifyOptions& o)
{
    FloatTally t{"fourier.plancherel", o.tol.value_or(1e-4)};
    const auto ms = dims(o, {2}, {2, 3});
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms)
        for (int k = 0; k <= 1; ++k)
            for (int n = 0; n <= 2; ++n) {
                const auto res = plancherel(clifford_polynomial(n, m, k), 200.0);
                t.record(std::fabs(res.integral - res.expected) / res.expected, at({{"m", m}, {"k", k}, {"n", n}}));
            }
    return t.result();
}

// ---------------------------------------------------------------- degeneracy

CheckResult check_m2_relation(const VerifyOptions& o)
{
    ExactTally t{"degeneracy.m2_vector_relation"};
    if (o.m && *o.m != 2)
        return skipped(t.name, o);
    const auto e1 = Multivector<Rational>::blade(2, Blade::generator(1));
    for (int k = 0; k <= 10; ++k) {
        const auto& yk = basis_for(2, k)->elements.front();
        const auto& yk1 = basis_for(2, k + 1)->elements.front();
        const bool ok = yk.x_unscaled() == yk1.unscaled().left_multiply(e1) && yk.norm_sq().coeff == yk1.norm_sq().coeff;
        t.record(ok, 1, at({{"k", k}}));
    }
    return t.result();
}

CheckResult check_degeneracy(const VerifyOptions& o)
{
    ExactTally t{"degeneracy.normalized_identity"};
    if (o.m && *o.m != 2)
        return skipped(t.name, o);
    for (int N = 0; N <= 6; ++N)
        for (int k = 0; k <= 6; ++k) {
            const auto r = degeneracy_m2(N, k);
            t.record(r.radial_zero && r.coordinate_zero && r.max_sampled < 1e-9, r.max_sampled, at({{"N", N}, {"k", k}}));
        }
    return t.result();
}

CheckResult check_negative_control(const VerifyOptions& o)
{
    ExactTally t{"degeneracy.negative_control"};
    const auto ms = dims(o, {3}, range(3, 6));
    if (ms.empty())
        return skipped(t.name, o);
    for (int m : ms) {
        t.record(!shifted_monogenic(m, 0, 1), 1, at({{"m", m}, {"shift_monogenic_k", 0}}));
        const int dk1 = static_cast<int>(basis_for(m, 1)->size());
        for (int j = 1; j <= dk1; ++j) {
            const auto r = degeneracy_check(m, 0, 0, 1, j);
            t.record(!r.coordinate_zero && r.max_sampled > 1e-3, 1, at({{"m", m}, {"j", j}}));
        }
    }
    return t.result();
}

std::vector<CheckInfo> build_registry()
{
    std::vector<CheckInfo> r;
    auto add = [&](const char* name, std::function<CheckResult(const VerifyOptions&)> f) {
        const std::string n(name);
        r.push_back({n, n.substr(0, n.find('.')), std::move(f)});
    };
    add("algebra.blade_product_oracle", check_blade_product);
    add("algebra.generator_relations", check_generator_relations);
    add("algebra.associativity", check_associativity);
    add("algebra.conjugation_reverses_products", check_conjugation);
    add("algebra.grade_decomposition", check_grade_decomposition);
    add("algebra.vector_commutation", check_vector_commutation);
    add("algebra.inner_product_norm", check_inner_norm);
    add("algebra.monogenic_dimensions", check_monogenic_dimensions);
    add("algebra.monogenicity", check_monogenicity);
    add("algebra.sphere_gram", check_sphere_gram);
    add("algebra.sphere_theta_vanishes", check_sphere_theta);
    add("algebra.m2_closed_form_agreement", check_m2_closed_form);
    add("radial.coordinate_oracle", check_coordinate_oracle);
    add("radial.dirac_x_anticommutator", check_dirac_x);
    add("radial.dirac_euler_commutator", check_dirac_euler);
    add("radial.triple_construction", check_triple_construction);
    add("radial.eigenvalue", check_eigenvalue);
    add("radial.legendre_ode", check_radial_ode);
    add("radial.weight_divisibility", check_divisibility);
    add("recurrence.weight_leibniz", check_leibniz);
    add("recurrence.dirac_three_term", check_three_term);
    add("recurrence.euler_lemma", check_euler_lemma);
    add("recurrence.gegenbauer_derivative", check_gegenbauer_derivative);
    add("recurrence.legendre_derivative", check_legendre_derivative);
    add("bonnet.odd", [](const VerifyOptions& o) { return check_bonnet_unnormalized(o, true); });
    add("bonnet.even", [](const VerifyOptions& o) { return check_bonnet_unnormalized(o, false); });
    add("bonnet.normalized", check_bonnet_normalized);
    add("bonnet.spot_value", check_bonnet_spot);
    add("bonnet.norms_exact", check_norms_exact);
    add("bonnet.orthogonality_exact", check_orthogonality_exact);
    add("bonnet.orthogonality_unnormalized", check_orthogonality_family);
    add("bonnet.x_orthogonality", check_x_orthogonality);
    add("bonnet.expansion_support", check_expansion_support);
    add("jacobi.ode", check_jacobi_ode);
    add("jacobi.identification", check_jacobi_identification);
    add("jacobi.sign_at_zero", check_jacobi_sign);
    add("jacobi.root_residuals", check_jacobi_roots);
    add("jacobi.zero_interlacing", check_jacobi_interlacing);
    add("jacobi.sphere_count", check_sphere_count);
    add("jacobi.radii_interlacing", check_radii_interlacing);
    add("jacobi.radius_spot", check_radius_spot);
    add("fourier.bessel_reference", check_bessel);
    add("fourier.quadrature_exactness", check_quadrature_exactness);
    add("fourier.norms_quadrature", check_norms_quadrature);
    add("fourier.gram_quadrature", check_gram_quadrature);
    add("fourier.closed_form_oracle", check_fourier_oracle);
    add("fourier.conjugate_symmetry", check_conjugate_symmetry);
    add("fourier.plancherel", check_plancherel);
    add("degeneracy.m2_vector_relation", check_m2_relation);
    add("degeneracy.normalized_identity", check_degeneracy);
    add("degeneracy.negative_control", check_negative_control);
    return r;
}

} // namespace

const std::vector<CheckInfo>& check_registry()
{
    static const std::vector<CheckInfo> registry = build_registry();
    return registry;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"algebra", "radial", "recurrence", "bonnet", "jacobi", "fourier", "degeneracy"};
    return names;
}

bool is_suite(const std::string& name)
{
    if (name == "all")
        return true;
    const auto& s = suite_names();
    return std::find(s.begin(), s.end(), name) != s.end();
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts)
{
    if (!is_suite(suite))
        throw std::invalid_argument("unknown suite: " + suite);
    std::vector<CheckResult> out;
    for (const auto& c : check_registry()) {
        if (suite != "all" && c.suite != suite)
            continue;
        try {
            out.push_back(c.run(opts));
        } catch (const std::exception& e) {
            out.push_back({c.name, false, false, INFINITY, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

} // namespace cliffleg
