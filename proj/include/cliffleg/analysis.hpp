#pragma once

#include "cliffleg/legendre.hpp"

#include <span>
#include <vector>

namespace cliffleg {

/// nu = twice_nu / 2, so integer and half-integer orders are both exact.
struct BesselOrder {
    int twice_nu;
    double value() const { return twice_nu / 2.0; }
};

/// J_nu(x) for 0 <= nu <= 40 and 0 <= x <= 1e4; throws std::domain_error outside.
double bessel_j(BesselOrder nu, double x);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Product rule on the unit ball of R^m, m in {2, 3}.
struct QuadratureRule {
    int m = 2;
    int degree = 0;
    std::vector<double> radial_nodes;    // in (0, 1)
    std::vector<double> radial_weights;  // r^{m-1} absorbed
    std::vector<std::vector<double>> directions;  // points on S^{m-1}
    std::vector<double> angular_weights;

    /// Exact for polynomials of total degree <= degree.
    static QuadratureRule ball(int m, int degree);
    /// Enough nodes to resolve e^{-2 pi i <x, xi>} for |xi| <= xi_max as well.
    static QuadratureRule oscillatory(int m, int degree, double xi_max);

    std::size_t size() const { return radial_nodes.size() * directions.size(); }
    /// Calls f(point, weight) for every node, in a fixed order.
    template <class F>
    void for_each(F&& f) const
    {
        std::vector<double> x(static_cast<std::size_t>(m));
        for (std::size_t a = 0; a < directions.size(); ++a)
            for (std::size_t r = 0; r < radial_nodes.size(); ++r) {
                for (int j = 0; j < m; ++j)
                    x[static_cast<std::size_t>(j)] = radial_nodes[r] * directions[a][static_cast<std::size_t>(j)];
                f(std::span<const double>(x), radial_weights[r] * angular_weights[a]);
            }
    }
};

/// Quadrature of the defining integral of the Fourier transform over B(1).
/// Throws std::invalid_argument if the rule has fewer than 10 radial nodes per unit of |xi|.
ComplexMultivector numeric_fourier(const CliffordPolynomial& p, std::span<const double> xi, const QuadratureRule& rule);

/// Integral over B(1) of conj(p) q, by quadrature.
Multivector<double> ball_inner(const CliffordPolynomial& p, const CliffordPolynomial& q, const QuadratureRule& rule);

/// Exact integral over B(1) of conj(p) q: factor * raw, for any m.
struct ExactInner {
    Multivector<Rational> raw;
    Surd factor;
    bool is_zero() const { return raw.is_zero(); }
    /// True when the value is the scalar c.
    bool equals_scalar(const Rational& c) const;
    Multivector<double> to_double() const;
};
ExactInner ball_inner_exact(const CliffordPolynomial& p, const CliffordPolynomial& q);

struct GramReport {
    std::vector<std::vector<double>> scalar;  // scalar parts of the pairwise inner products
    double max_off_diagonal = 0;
    double max_diagonal_error = 0;  // against the expected squared norms
    double max_non_scalar = 0;      // largest non-scalar coefficient anywhere
};
/// expected[i] is the squared norm element i should have.
GramReport gram_report(const std::vector<CliffordPolynomial>& family, const std::vector<double>& expected,
                       const QuadratureRule& rule);

struct ExactGramReport {
    std::size_t size = 0;
    bool identity_on_diagonal = true;  // each diagonal equals its expected squared norm exactly
    bool zero_off_diagonal = true;
    std::size_t failures = 0;
};
ExactGramReport gram_report_exact(const std::vector<CliffordPolynomial>& family, const std::vector<Rational>& expected);

/// Integral of conj(p) x q over B(1), exactly.
ExactInner ball_inner_x_exact(const CliffordPolynomial& p, const CliffordPolynomial& q);

/// Every basis element of every degree k <= k_max, for each n <= n_max.
std::vector<CliffordPolynomial> legendre_family(int m, int n_max, int k_max, bool normalized);

struct PlancherelResult {
    double integral;   // truncated integral plus tail correction
    double truncated;  // integral over |xi| <= R only
    double tail;       // leading-order tail estimate 4^n n!^2 s^2 / (2 pi^2 R)
    double expected;
};
/// Integral over R^m of |F p|^2 using the closed form, truncated at |xi| = R.
PlancherelResult plancherel(const CliffordPolynomial& p, double R);

} // namespace cliffleg
