#pragma once

#include "cliffleg/rational.hpp"

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliffleg {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class RationalPoly {
public:
    static constexpr int zero_degree = std::numeric_limits<int>::min();

    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    RationalPoly(std::initializer_list<long> coeffs);

    static RationalPoly constant(const Rational& c);
    static RationalPoly monomial(const Rational& c, int power);
    /// 1 - t, the weight (1 + x^2) written in t = |x|^2.
    static RationalPoly one_minus_t();

    int degree() const { return c_.empty() ? zero_degree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of t^i; zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }
    std::span<const Rational> coefficients() const { return c_; }

    RationalPoly derivative() const;
    /// p(a t + b)
    RationalPoly compose_affine(const Rational& a, const Rational& b) const;
    RationalPoly pow(unsigned e) const;

    double evaluate(double t) const;
    Rational evaluate(const Rational& t) const;

    /// Long division; returns (quotient, remainder).
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;
    /// Throws InexactDivision when the remainder is nonzero.
    RationalPoly divide_exact(const RationalPoly& divisor) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& s);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const char* var = "t") const;

private:
    void trim();

    std::vector<Rational> c_;
};

} // namespace cliffleg
