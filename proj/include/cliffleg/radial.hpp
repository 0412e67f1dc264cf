#pragma once

#include "cliffleg/rational_poly.hpp"

#include <string>

namespace cliffleg {

enum class Parity { Even, Odd };

constexpr Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
constexpr Parity parity_of(int n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }

/// poly(t) Y_k(x) when Even, x poly(t) Y_k(x) when Odd, with t = |x|^2.
struct ParityRadialForm {
    int m = 2;
    int k = 0;
    Parity parity = Parity::Even;
    RationalPoly poly;

    static ParityRadialForm unit(int m, int k) { return {m, k, Parity::Even, RationalPoly{1}}; }

    bool is_zero() const { return poly.is_zero(); }
    /// Total degree in x; zero_degree for the zero form.
    int x_degree() const;

    ParityRadialForm& operator+=(const ParityRadialForm& o);
    ParityRadialForm& operator-=(const ParityRadialForm& o);
    ParityRadialForm& operator*=(const Rational& s);

    friend ParityRadialForm operator+(ParityRadialForm a, const ParityRadialForm& b) { return a += b; }
    friend ParityRadialForm operator-(ParityRadialForm a, const ParityRadialForm& b) { return a -= b; }
    friend ParityRadialForm operator*(ParityRadialForm a, const Rational& s) { return a *= s; }
    friend ParityRadialForm operator*(const Rational& s, ParityRadialForm a) { return a *= s; }
    /// Multiplication by a scalar function of t.
    friend ParityRadialForm operator*(const RationalPoly& p, ParityRadialForm a)
    {
        a.poly = p * a.poly;
        return a;
    }
    /// Zero forms compare equal regardless of parity tag.
    friend bool operator==(const ParityRadialForm& a, const ParityRadialForm& b);

    std::string to_string() const;
};

ParityRadialForm dirac(const ParityRadialForm& f);
ParityRadialForm dirac_power(ParityRadialForm f, int times);
ParityRadialForm euler(const ParityRadialForm& f);
ParityRadialForm mul_x(const ParityRadialForm& f);

/// (1-t)^{-alpha} d_x [ (1-t)^{alpha+1} f ]
ParityRadialForm apply_D_alpha(const ParityRadialForm& f, const Rational& alpha);

/// D_alpha D_{alpha+1} ... D_{alpha+n-1} Y_k
ParityRadialForm gegenbauer_by_operators(int n, int k, int m, const Rational& alpha);

/// (1-t)^{-alpha} d_x^n [ (1-t)^{alpha+n} Y_k ] for integer alpha >= 0.
ParityRadialForm rodrigues_integer_alpha(int n, int k, int m, int alpha);

Rational eigenvalue_C(const Rational& alpha, int n, int m, int k);

/// D_alpha d_x f
ParityRadialForm apply_gegenbauer_operator(const ParityRadialForm& f, const Rational& alpha);

struct LeibnizCoeffs {
    Rational A, B, C;
};
LeibnizCoeffs leibniz_coeffs(int l, int m);

/// t(1-t)P'' + [(m/2+k) - (1+m/2+k)t]P' + C(0,2N,m,k)/4 P for the even form f.
RationalPoly radial_ode_residual(const ParityRadialForm& f, int N);

// Residual forms of the recurrences; each is identically zero when the identity holds.

/// d^l[(1-t)f] - A_l d^{l-2}f - B_l E d^{l-2}f - C_l x d^{l-1}f - (1-t) d^l f
ParityRadialForm leibniz_residual(const ParityRadialForm& f, int l);

struct DiracRecurrenceCoeffs {
    Rational alpha, beta, C;
};
DiracRecurrenceCoeffs dirac_recurrence_coeffs(int n, int k, int m);
ParityRadialForm dirac_recurrence_residual(int n, int k, int m);

/// E C_n - (n+k) C_n + 2n d C_{n-1}, at alpha = 0.
ParityRadialForm euler_lemma_residual(int n, int k, int m);

/// Derivative recurrence for C^alpha; the middle term is 2 alpha x C^{alpha+1}_{n-1}.
ParityRadialForm gegenbauer_derivative_residual(int n, int k, int m, const Rational& alpha);
/// The same identity multiplied through by (1-t).
ParityRadialForm gegenbauer_derivative_residual_cleared(int n, int k, int m, const Rational& alpha);

/// (1-t)-cleared variant whose middle term is 2 alpha C^alpha_{n-1}, without x and without the
/// parameter shift.  That term has the opposite parity, so both components are returned.
struct MixedResidual {
    RationalPoly same_parity;
    RationalPoly other_parity;
    bool is_zero() const { return same_parity.is_zero() && other_parity.is_zero(); }
};
MixedResidual gegenbauer_derivative_residual_unshifted(int n, int k, int m, const Rational& alpha);

/// d C_{n+1} - 4(n+1)[(n+k+m/2) C_n - n d C_{n-1}], at alpha = 0.
ParityRadialForm legendre_derivative_residual(int n, int k, int m);

} // namespace cliffleg
