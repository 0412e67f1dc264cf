#include "cliffleg/radial.hpp"

#include "cliffleg/errors.hpp"

namespace cliffleg {

namespace {

void require_compatible(const ParityRadialForm& a, const ParityRadialForm& b)
{
    if (a.m != b.m || a.k != b.k)
        throw DimensionMismatch("radial forms over different (m, k)");
}

RationalPoly t_times(const RationalPoly& p) { return RationalPoly{0, 1} * p; }

ParityRadialForm zero_form(int m, int k, Parity p) { return {m, k, p, RationalPoly{}}; }

/// C^alpha_n, with C_n = 0 for n < 0.
ParityRadialForm gegenbauer_or_zero(int n, int k, int m, const Rational& alpha)
{
    if (n < 0)
        return zero_form(m, k, parity_of(n));
    return gegenbauer_by_operators(n, k, m, alpha);
}

} // namespace

int ParityRadialForm::x_degree() const
{
    if (poly.is_zero())
        return RationalPoly::zero_degree;
    return 2 * poly.degree() + k + (parity == Parity::Odd ? 1 : 0);
}

ParityRadialForm& ParityRadialForm::operator+=(const ParityRadialForm& o)
{
    require_compatible(*this, o);
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        parity = o.parity;
        poly = o.poly;
        return *this;
    }
    if (parity != o.parity)
        throw std::invalid_argument("adding radial forms of different parity");
    poly += o.poly;
    return *this;
}

ParityRadialForm& ParityRadialForm::operator-=(const ParityRadialForm& o)
{
    return *this += o * Rational(-1);
}

ParityRadialForm& ParityRadialForm::operator*=(const Rational& s)
{
    poly *= s;
    return *this;
}

bool operator==(const ParityRadialForm& a, const ParityRadialForm& b)
{
    if (a.m != b.m || a.k != b.k)
        return false;
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.parity == b.parity && a.poly == b.poly;
}

std::string ParityRadialForm::to_string() const
{
    const std::string p = "(" + poly.to_string() + ")";
    return (parity == Parity::Even ? p : "x" + p) + "Y_" + std::to_string(k);
}

ParityRadialForm dirac(const ParityRadialForm& f)
{
    ParityRadialForm r{f.m, f.k, flip(f.parity), {}};
    if (f.parity == Parity::Even) {
        r.poly = f.poly.derivative() * Rational(2);
    } else {
        r.poly = -(t_times(f.poly.derivative()) * Rational(2) + f.poly * Rational(2 * f.k + f.m));
    }
    return r;
}

ParityRadialForm dirac_power(ParityRadialForm f, int times)
{
    for (int i = 0; i < times; ++i)
        f = dirac(f);
    return f;
}

ParityRadialForm euler(const ParityRadialForm& f)
{
    const int shift = f.k + (f.parity == Parity::Odd ? 1 : 0);
    std::vector<Rational> c(f.poly.coefficients().begin(), f.poly.coefficients().end());
    for (std::size_t r = 0; r < c.size(); ++r)
        c[r] *= Rational(static_cast<long>(2 * r) + shift);
    return {f.m, f.k, f.parity, RationalPoly(std::move(c))};
}

ParityRadialForm mul_x(const ParityRadialForm& f)
{
    if (f.parity == Parity::Even)
        return {f.m, f.k, Parity::Odd, f.poly};
    return {f.m, f.k, Parity::Even, -t_times(f.poly)};
}

ParityRadialForm apply_D_alpha(const ParityRadialForm& f, const Rational& alpha)
{
    const RationalPoly w = RationalPoly::one_minus_t();
    // (1-t) P' - (alpha+1) P, the derivative of (1-t)^{alpha+1} P divided by (1-t)^alpha
    const RationalPoly g = w * f.poly.derivative() - f.poly * Rational(alpha + 1);
    ParityRadialForm r{f.m, f.k, flip(f.parity), {}};
    if (f.parity == Parity::Even)
        r.poly = g * Rational(2);
    else
        r.poly = -(t_times(g) * Rational(2) + w * f.poly * Rational(2 * f.k + f.m));
    return r;
}

ParityRadialForm gegenbauer_by_operators(int n, int k, int m, const Rational& alpha)
{
    if (n < 0 || k < 0 || m < 2)
        throw std::invalid_argument("gegenbauer_by_operators: need n >= 0, k >= 0, m >= 2");
    ParityRadialForm f = ParityRadialForm::unit(m, k);
    for (int j = n - 1; j >= 0; --j)
        f = apply_D_alpha(f, alpha + j);
    return f;
}

ParityRadialForm rodrigues_integer_alpha(int n, int k, int m, int alpha)
{
    if (n < 0 || k < 0 || m < 2 || alpha < 0)
        throw std::invalid_argument("rodrigues_integer_alpha: need n, k, alpha >= 0 and m >= 2");
    const RationalPoly w = RationalPoly::one_minus_t();
    ParityRadialForm f{m, k, Parity::Even, w.pow(static_cast<unsigned>(alpha + n))};
    f = dirac_power(std::move(f), n);
    f.poly = f.poly.divide_exact(w.pow(static_cast<unsigned>(alpha)));
    return f;
}

Rational eigenvalue_C(const Rational& alpha, int n, int m, int k)
{
    if (n % 2 == 0)
        return Rational(n) * (2 * alpha + n + m + 2 * k);
    return (2 * alpha + n + 1) * Rational(n + m + 2 * k - 1);
}

ParityRadialForm apply_gegenbauer_operator(const ParityRadialForm& f, const Rational& alpha)
{
    return apply_D_alpha(dirac(f), alpha);
}

LeibnizCoeffs leibniz_coeffs(int l, int m)
{
    if (l < 0)
        throw std::invalid_argument("leibniz_coeffs: l must be >= 0");
    const int sign = (l % 2 == 0) ? 1 : -1;
    LeibnizCoeffs c;
    c.A = Rational(l * l + l * (m - 2) + (1 - m) * (1 - sign) / 2);
    c.B = Rational(2 * l - 1 + sign);
    c.C = Rational(sign - 1);
    return c;
}

RationalPoly radial_ode_residual(const ParityRadialForm& f, int N)
{
    if (f.parity != Parity::Even && !f.is_zero())
        throw std::invalid_argument("radial_ode_residual expects an even form");
    const Rational half_m = make_rational(f.m, 2);
    const RationalPoly& P = f.poly;
    const RationalPoly tt = RationalPoly{0, 1, -1};  // t(1-t)
    const RationalPoly lin(std::vector<Rational>{half_m + f.k, -(1 + half_m + f.k)});
    return tt * P.derivative().derivative() + lin * P.derivative()
         + P * Rational(eigenvalue_C(0, 2 * N, f.m, f.k) / 4);
}

ParityRadialForm leibniz_residual(const ParityRadialForm& f, int l)
{
    const auto [A, B, C] = leibniz_coeffs(l, f.m);
    const RationalPoly w = RationalPoly::one_minus_t();
    ParityRadialForm r = dirac_power(w * f, l);
    if (l >= 2) {
        const ParityRadialForm d2 = dirac_power(f, l - 2);
        r -= d2 * A;
        r -= euler(d2) * B;
    }
    if (l >= 1)
        r -= mul_x(dirac_power(f, l - 1)) * C;
    r -= w * dirac_power(f, l);
    return r;
}

DiracRecurrenceCoeffs dirac_recurrence_coeffs(int n, int k, int m)
{
    const auto [A, B, C] = leibniz_coeffs(n + 1, m);
    DiracRecurrenceCoeffs c;
    c.alpha = A + Rational(n + k + 1) * B - Rational(m + 2 * n + 2 * k) * C + eigenvalue_C(0, n, m, k);
    c.beta = Rational(2 * n) * (2 * C - B);
    c.C = C;
    return c;
}

ParityRadialForm dirac_recurrence_residual(int n, int k, int m)
{
    const DiracRecurrenceCoeffs c = dirac_recurrence_coeffs(n, k, m);
    const ParityRadialForm cn = gegenbauer_or_zero(n, k, m, 0);
    ParityRadialForm r = dirac(gegenbauer_or_zero(n + 1, k, m, 0));
    r -= cn * c.alpha;
    r -= dirac(gegenbauer_or_zero(n - 1, k, m, 0)) * c.beta;
    r += mul_x(dirac(cn)) * c.C;
    return r;
}

ParityRadialForm euler_lemma_residual(int n, int k, int m)
{
    const ParityRadialForm cn = gegenbauer_or_zero(n, k, m, 0);
    ParityRadialForm r = euler(cn);
    r -= cn * Rational(n + k);
    r += dirac(gegenbauer_or_zero(n - 1, k, m, 0)) * Rational(2 * n);
    return r;
}

ParityRadialForm gegenbauer_derivative_residual(int n, int k, int m, const Rational& alpha)
{
    const Rational a = 4 * (n + alpha + 1) * (n + alpha + k + make_rational(m, 2));
    const Rational b = 4 * (n + alpha + 1) * (n + alpha);
    ParityRadialForm r = dirac(gegenbauer_or_zero(n + 1, k, m, alpha));
    r -= gegenbauer_or_zero(n, k, m, alpha) * a;
    r -= mul_x(gegenbauer_or_zero(n - 1, k, m, alpha + 1)) * (a * 2 * alpha);
    r += dirac(gegenbauer_or_zero(n - 1, k, m, alpha)) * b;
    return r;
}

ParityRadialForm gegenbauer_derivative_residual_cleared(int n, int k, int m, const Rational& alpha)
{
    const RationalPoly w = RationalPoly::one_minus_t();
    const Rational a = 4 * (n + alpha + 1) * (n + alpha + k + make_rational(m, 2));
    const Rational b = 4 * (n + alpha + 1) * (n + alpha);
    ParityRadialForm r = w * dirac(gegenbauer_or_zero(n + 1, k, m, alpha));
    r -= w * gegenbauer_or_zero(n, k, m, alpha) * a;
    r -= w * mul_x(gegenbauer_or_zero(n - 1, k, m, alpha + 1)) * (a * 2 * alpha);
    r += w * dirac(gegenbauer_or_zero(n - 1, k, m, alpha)) * b;
    return r;
}

MixedResidual gegenbauer_derivative_residual_unshifted(int n, int k, int m, const Rational& alpha)
{
    const RationalPoly w = RationalPoly::one_minus_t();
    const Rational a = 4 * (n + alpha + 1) * (n + alpha + k + make_rational(m, 2));
    const Rational b = 4 * (n + alpha + 1) * (n + alpha);
    ParityRadialForm same = w * dirac(gegenbauer_or_zero(n + 1, k, m, alpha));
    same -= w * gegenbauer_or_zero(n, k, m, alpha) * a;
    same += w * dirac(gegenbauer_or_zero(n - 1, k, m, alpha)) * b;
    const ParityRadialForm other = gegenbauer_or_zero(n - 1, k, m, alpha) * (-a * 2 * alpha);
    return {same.poly, other.poly};
}

ParityRadialForm legendre_derivative_residual(int n, int k, int m)
{
    ParityRadialForm r = dirac(gegenbauer_or_zero(n + 1, k, m, 0));
    r -= gegenbauer_or_zero(n, k, m, 0) * (Rational(4 * (n + 1)) * (Rational(n + k) + make_rational(m, 2)));
    r += dirac(gegenbauer_or_zero(n - 1, k, m, 0)) * Rational(4 * (n + 1) * n);
    return r;
}

} // namespace cliffleg
