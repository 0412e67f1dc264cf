#include "cliffleg/legendre.hpp"

#include "cliffleg/analysis.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace cliffleg {

namespace {

ParityRadialForm legendre_or_zero(int n, int k, int m)
{
    if (n < 0)
        return {m, k, parity_of(n), RationalPoly{}};
    return gegenbauer_by_operators(n, k, m, Rational(0));
}

Surd scale_or_zero(int n, int k, int m)
{
    return n < 0 ? Surd(Rational(0)) : normalization_scale(n, k, m);
}

} // namespace

MultivectorPolynomial radial_to_polynomial(const RationalPoly& p, int m)
{
    const MultivectorPolynomial t = MultivectorPolynomial::norm_squared(m);
    MultivectorPolynomial power = MultivectorPolynomial::constant(Multivector<Rational>::scalar(m, Rational(1)));
    MultivectorPolynomial out(m);
    for (int r = 0; r <= p.degree(); ++r) {
        if (p.coeff(r) != 0)
            out += power * p.coeff(r);
        power = power * t;
    }
    return out;
}

MultivectorPolynomial form_to_polynomial(const ParityRadialForm& f, const MultivectorPolynomial& y)
{
    MultivectorPolynomial p = radial_to_polynomial(f.poly, f.m) * y;
    if (f.parity == Parity::Odd)
        p = MultivectorPolynomial::vector_variable(f.m) * p;
    return p;
}

Multivector<double> CliffordPolynomial::evaluate(std::span<const double> x) const
{
    if (static_cast<int>(x.size()) != m)
        throw DimensionMismatch("point dimension differs from m");
    double t = 0;
    for (double v : x)
        t += v * v;
    Multivector<double> y = monogenic().evaluate(x);
    if (radial.parity == Parity::Odd)
        y = geometric_product(embed_vector(x), y);
    y *= radial.poly.evaluate(t) * scale.to_double();
    return y;
}

CliffordPolynomial clifford_polynomial(int n, int m, int k, int i, const Rational& alpha)
{
    auto basis = basis_for(m, k);
    if (i < 1 || i > static_cast<int>(basis->size()))
        throw std::invalid_argument("basis index " + std::to_string(i) + " outside 1.." + std::to_string(basis->size()));
    CliffordPolynomial p;
    p.n = n;
    p.m = m;
    p.k = k;
    p.alpha = alpha;
    p.i = i;
    p.radial = gegenbauer_by_operators(n, k, m, alpha);
    p.basis = std::move(basis);
    return p;
}

CliffordPolynomial normalized_legendre(int n, int m, int k, int i)
{
    return normalize(clifford_polynomial(n, m, k, i));
}

ParityRadialForm explicit_even(int N, int k, int m)
{
    const Rational z0 = Rational(k) + make_rational(m, 2);
    const Rational front = Rational(Integer(1) << (2 * N)) * Rational(factorial(2 * N)) / Rational(factorial(N));
    std::vector<Rational> c;
    for (int l = 0; l <= N; ++l) {
        const Rational sign = (l % 2 == 0) ? 1 : -1;
        c.push_back(front * sign * Rational(binomial(N, l)) * rising_factorial(z0 + l, N));
    }
    return {m, k, Parity::Even, RationalPoly(std::move(c))};
}

ParityRadialForm explicit_odd(int N, int k, int m)
{
    const Rational z0 = Rational(k + 1) + make_rational(m, 2);
    const Rational front = -Rational(Integer(1) << (2 * N + 1)) * Rational(factorial(2 * N + 1)) / Rational(factorial(N));
    std::vector<Rational> c;
    for (int l = 0; l <= N; ++l) {
        const Rational sign = (l % 2 == 0) ? 1 : -1;
        c.push_back(front * sign * Rational(binomial(N, l)) * rising_factorial(z0 + l, N));
    }
    return {m, k, Parity::Odd, RationalPoly(std::move(c))};
}

ParityRadialForm explicit_legendre(int n, int k, int m)
{
    return n % 2 == 0 ? explicit_even(n / 2, k, m) : explicit_odd(n / 2, k, m);
}

Rational norm_sq(int n, int k, int m)
{
    const Integer f = factorial(n);
    return Rational(Integer(f * f) << (2 * n)) / Rational(2 * k + 2 * n + m);
}

Surd normalization_scale(int n, int k, int m)
{
    return Surd(Rational(1) / Rational(Integer(factorial(n)) << n), Rational(2 * k + 2 * n + m));
}

CliffordPolynomial normalize(const CliffordPolynomial& p)
{
    if (p.alpha != 0)
        throw std::invalid_argument("normalize: only the alpha = 0 family has a known norm");
    if (p.normalized)
        return p;
    CliffordPolynomial q = p;
    q.scale = p.scale * normalization_scale(p.n, p.k, p.m);
    q.normalized = true;
    return q;
}

BonnetPair bonnet_odd(int N, int k, int m)
{
    const Rational h = make_rational(m, 2);
    const Rational d = h + 2 * N + k + 1;
    return {Rational(-1) / (4 * d), 2 * (2 * N + 1) * (h + N + k) / d};
}

BonnetPair bonnet_even(int N, int k, int m)
{
    const Rational h = make_rational(m, 2);
    const Rational d = h + 2 * N + k;
    return {-(h + N + k) / (2 * (2 * N + 1) * d), Rational(4 * N * N) / d};
}

SurdPair bonnet_normalized(int n, int k, int m)
{
    const Rational h = make_rational(m, 2);
    const int N = n / 2;
    const int base = m + 4 * N + 2 * k;
    if (n % 2 == 0) {
        const Rational d = h + 2 * N + k;
        Surd A(-(h + N + k) / d, Rational(base) / Rational(base + 2));
        Surd B = N == 0 ? Surd(Rational(0)) : Surd(Rational(N) / d, Rational(base) / Rational(base - 2));
        return {A, B};
    }
    const Rational d = h + 2 * N + k + 1;
    Surd A(Rational(-(N + 1)) / d, Rational(base + 2) / Rational(base + 4));
    Surd B((h + N + k) / d, Rational(base + 2) / Rational(base));
    return {A, B};
}

ParityRadialForm bonnet_residual(int n, int k, int m)
{
    const BonnetPair c = n % 2 == 0 ? bonnet_even(n / 2, k, m) : bonnet_odd(n / 2, k, m);
    ParityRadialForm r = mul_x(legendre_or_zero(n, k, m));
    r -= legendre_or_zero(n + 1, k, m) * c.alpha;
    r -= legendre_or_zero(n - 1, k, m) * c.beta;
    return r;
}

void SurdCombination::add(const Surd& weight, const RationalPoly& p)
{
    if (weight.is_zero() || p.is_zero())
        return;
    for (auto& g : groups_) {
        const Surd ratio = weight / g.unit;
        if (ratio.is_rational()) {
            g.poly += p * ratio.coeff();
            return;
        }
    }
    groups_.push_back({Surd(Rational(1), weight.radicand()), p * weight.coeff()});
}

bool SurdCombination::is_zero() const
{
    for (const auto& g : groups_)
        if (!g.poly.is_zero())
            return false;
    return true;
}

double SurdCombination::max_abs() const
{
    double worst = 0;
    for (const auto& g : groups_)
        for (const auto& c : g.poly.coefficients())
            worst = std::max(worst, std::fabs(c.get_d() * g.unit.to_double()));
    return worst;
}

SurdCombination bonnet_normalized_residual(int n, int k, int m)
{
    const SurdPair c = bonnet_normalized(n, k, m);
    SurdCombination r;
    r.add(normalization_scale(n, k, m), mul_x(legendre_or_zero(n, k, m)).poly);
    r.add(-(c.A * normalization_scale(n + 1, k, m)), legendre_or_zero(n + 1, k, m).poly);
    if (!c.B.is_zero())
        r.add(-(c.B * scale_or_zero(n - 1, k, m)), legendre_or_zero(n - 1, k, m).poly);
    return r;
}

JacobiIdentification jacobi_radial_id(int n, int k, int m)
{
    const int N = n / 2;
    const Rational h = make_rational(m, 2);
    JacobiIdentification id;
    id.N = N;
    if (n % 2 == 0) {
        id.beta = k + h - 1;
        id.scale_sq = 2 * (k + h + 2 * N);
    } else {
        id.beta = k + h;
        id.scale_sq = 2 * (k + h + 1 + 2 * N);
    }
    const RationalPoly radial = legendre_or_zero(n, k, m).poly;
    const RationalPoly shifted = jacobi_build(N, Rational(0), id.beta).coeffs.compose_affine(2, -1);
    id.sign = sgn(radial.leading()) * sgn(shifted.leading());
    return id;
}

SurdCombination jacobi_identification_residual(int n, int k, int m)
{
    const JacobiIdentification id = jacobi_radial_id(n, k, m);
    SurdCombination r;
    r.add(normalization_scale(n, k, m), legendre_or_zero(n, k, m).poly);
    r.add(Surd(Rational(-id.sign), id.scale_sq), jacobi_build(id.N, Rational(0), id.beta).coeffs.compose_affine(2, -1));
    return r;
}

ComplexMultivector fourier_transform(const CliffordPolynomial& p, std::span<const double> xi)
{
    if (p.alpha != 0)
        throw std::invalid_argument("fourier_transform: alpha must be 0");
    if (static_cast<int>(xi.size()) != p.m)
        throw DimensionMismatch("frequency dimension differs from m");
    double rho2 = 0;
    for (double v : xi)
        rho2 += v * v;
    if (rho2 == 0)
        throw std::domain_error("fourier_transform: xi = 0 is excluded");
    const double rho = std::sqrt(rho2);

    const Multivector<double> xv = embed_vector(xi);
    Multivector<double> v = p.monogenic().evaluate(xi);
    for (int j = 0; j < p.n; ++j)
        v = geometric_product(xv, v);

    const BesselOrder nu{2 * p.k + p.m + 2 * p.n};
    double f = std::ldexp(std::tgamma(p.n + 1.0), p.n) * bessel_j(nu, 2 * std::numbers::pi * rho)
             / std::pow(rho, p.m / 2.0 + p.n + p.k) * p.scale.to_double();
    if (p.k % 2 != 0)
        f = -f;
    v *= f;

    ComplexMultivector out(p.m);
    switch ((p.n + p.k) % 4) {
    case 0: out.re = v; break;
    case 1: out.im = v; break;
    case 2: out.re = -v; break;
    default: out.im = -v; break;
    }
    return out;
}

DegeneracyResult degeneracy_check(int m, int N, int k, int i, int j)
{
    const CliffordPolynomial odd = normalized_legendre(2 * N + 1, m, k, i);
    const CliffordPolynomial even = normalized_legendre(2 * N, m, k + 1, j);

    DegeneracyResult res{};
    SurdCombination radial;
    radial.add(odd.scale, odd.radial.poly);
    radial.add(even.scale, even.radial.poly);
    res.radial_zero = radial.is_zero();

    const MonogenicPolynomial& yi = odd.monogenic();
    const MonogenicPolynomial& yj = even.monogenic();
    const Surd w1 = odd.scale / Surd::sqrt_of(yi.norm_sq().coeff);
    const Surd w2 = even.scale / Surd::sqrt_of(yj.norm_sq().coeff);
    const Surd ratio = w2 / w1;
    if (ratio.is_rational()) {
        const auto e1 = Multivector<Rational>::blade(m, Blade::generator(1));
        MultivectorPolynomial lhs = radial_to_polynomial(odd.radial.poly, m)
                                  * MultivectorPolynomial::vector_variable(m) * yi.unscaled();
        MultivectorPolynomial rhs = (radial_to_polynomial(even.radial.poly, m) * yj.unscaled()).left_multiply(e1);
        res.coordinate_zero = (lhs + rhs * ratio.coeff()).is_zero();
    } else {
        res.coordinate_zero = false;
    }

    std::mt19937_64 rng(20240601u + static_cast<unsigned>(m * 1000 + N * 10 + k));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Multivector<double> e1 = Multivector<double>::blade(m, Blade::generator(1));
    std::vector<double> x(static_cast<std::size_t>(m));
    for (int s = 0; s < 64;) {
        double r2 = 0;
        for (auto& v : x) {
            v = u(rng);
            r2 += v * v;
        }
        if (r2 >= 1)
            continue;
        ++s;
        const Multivector<double> d = odd.evaluate(x) + geometric_product(e1, even.evaluate(x));
        res.max_sampled = std::max(res.max_sampled, std::sqrt(norm_sq(d)));
    }
    return res;
}

DegeneracyResult degeneracy_m2(int N, int k)
{
    return degeneracy_check(2, N, k, 1, 1);
}

bool shifted_monogenic(int m, int k, int i)
{
    const auto basis = basis_for(m, k);
    const MonogenicPolynomial& y = basis->elements.at(static_cast<std::size_t>(i - 1));
    const auto e1inv = Multivector<Rational>::blade(m, Blade::generator(1), Rational(-1));
    const MultivectorPolynomial p = (MultivectorPolynomial::vector_variable(m) * y.unscaled()).left_multiply(e1inv);
    return dirac_on_polynomial(p).is_zero();
}

} // namespace cliffleg
