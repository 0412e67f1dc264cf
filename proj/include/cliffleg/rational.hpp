#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace cliffleg {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q"; the result is canonicalised.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Rising product z (z+1) ... (z+count-1); equals Gamma(z+count)/Gamma(z).
Rational rising_factorial(const Rational& z, unsigned count);

/// True when value = root^2 for a rational root >= 0 (written to *root).
bool is_perfect_square(const Rational& value, Rational* root = nullptr);

/// A real number coeff * sqrt(radicand) with radicand >= 0, kept exact.
class Surd {
public:
    Surd() : coeff_(0), radicand_(1) {}
    Surd(Rational coeff) : coeff_(std::move(coeff)), radicand_(1) {}  // NOLINT: implicit by intent
    Surd(Rational coeff, Rational radicand);

    static Surd sqrt_of(const Rational& radicand) { return Surd(Rational(1), radicand); }

    const Rational& coeff() const noexcept { return coeff_; }
    const Rational& radicand() const noexcept { return radicand_; }

    bool is_zero() const { return coeff_ == 0 || radicand_ == 0; }
    int sign() const;
    /// The exact square, coeff^2 * radicand.
    Rational square() const { return coeff_ * coeff_ * radicand_; }
    bool is_rational() const;
    double to_double() const;

    Surd operator-() const { return Surd(-coeff_, radicand_); }
    friend Surd operator*(const Surd& a, const Surd& b);
    friend Surd operator/(const Surd& a, const Surd& b);
    friend bool operator==(const Surd& a, const Surd& b);

    /// "c*sqrt(r)" with the square part of r pulled out when it is a perfect square.
    std::string to_string() const;

private:
    void canonicalise();

    Rational coeff_;
    Rational radicand_;
};

} // namespace cliffleg
