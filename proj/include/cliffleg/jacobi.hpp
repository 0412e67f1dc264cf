#pragma once

#include "cliffleg/rational_poly.hpp"

#include <vector>

namespace cliffleg {

/// P_n^{(alpha, beta)}(x) with exact monomial coefficients in x.
struct JacobiPoly {
    int n = 0;
    Rational alpha;
    Rational beta;
    RationalPoly coeffs;

    /// Evaluation by the three-term recurrence, not from the monomial coefficients.
    double evaluate(double x) const;
    long double evaluate_ld(long double x) const;
};

JacobiPoly jacobi_build(int n, const Rational& alpha, const Rational& beta);

/// (1-x^2)y'' + [beta - alpha - (alpha+beta+2)x]y' + n(n+alpha+beta+1)y; zero for a Jacobi polynomial.
RationalPoly jacobi_ode_residual(const JacobiPoly& p);

/// Recurrence evaluation without building coefficients.
long double jacobi_evaluate(int n, long double alpha, long double beta, long double x);

struct JacobiRoot {
    long double value;
    long double lo, hi;    // final bracket, with a sign change of P across it
    long double residual;  // |P(value)|
};

/// The n simple zeros in (-1, 1), increasing.  Brackets come from the zeros of the derivative
/// (a Jacobi polynomial of degree n-1 with shifted parameters); each is bisected to adjacent long doubles.
std::vector<JacobiRoot> jacobi_roots(int n, const Rational& alpha, const Rational& beta);
std::vector<double> jacobi_zeros(int n, const Rational& alpha, const Rational& beta);

/// Strict pattern x_1 < t_1 < y_1 < x_2 < ... < y_n for three lists of equal length.
bool interlacing_check(const std::vector<double>& xs, const std::vector<double>& ts,
                       const std::vector<double>& ys);

/// Generalisation to lists whose lengths differ by at most one: the merged values are strictly
/// increasing and, read from the largest down, the labels cycle last list, ..., first list.
bool cyclic_interlacing(const std::vector<std::vector<double>>& lists);

/// Number of distinct real roots of p in the open interval (lo, hi), by a Sturm sequence.
int sturm_root_count(const RationalPoly& p, const Rational& lo, const Rational& hi);

/// Radii in (0,1) of the spheres where C^0_{n,m}(Y_k) vanishes, increasing (origin excluded).
std::vector<double> zero_radii(int n, int k, int m);

} // namespace cliffleg
