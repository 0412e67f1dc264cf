#include "cliffleg/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffleg {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Rational r;
    if (r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational: " + std::string(text));
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value)
{
    return value.get_d();
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

Integer factorial(unsigned n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Rational rising_factorial(const Rational& z, unsigned count)
{
    Rational result(1);
    for (unsigned j = 0; j < count; ++j)
        result *= z + j;
    return result;
}

bool is_perfect_square(const Rational& value, Rational* root)
{
    if (value < 0)
        return false;
    const Integer& num = value.get_num();
    const Integer& den = value.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return false;
    if (root != nullptr) {
        Integer rn = sqrt(num);
        Integer rd = sqrt(den);
        *root = Rational(rn, rd);
        root->canonicalize();
    }
    return true;
}

Surd::Surd(Rational coeff, Rational radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand))
{
    if (radicand_ < 0)
        throw std::invalid_argument("negative radicand");
    canonicalise();
}

void Surd::canonicalise()
{
    Rational root;
    if (radicand_ == 0 || coeff_ == 0) {
        coeff_ = 0;
        radicand_ = 1;
    } else if (is_perfect_square(radicand_, &root)) {
        coeff_ *= root;
        radicand_ = 1;
    }
}

int Surd::sign() const
{
    return is_zero() ? 0 : sgn(coeff_);
}

bool Surd::is_rational() const
{
    return is_zero() || radicand_ == 1;
}

double Surd::to_double() const
{
    return coeff_.get_d() * std::sqrt(radicand_.get_d());
}

Surd operator*(const Surd& a, const Surd& b)
{
    return Surd(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
}

Surd operator/(const Surd& a, const Surd& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero surd");
    // c1 sqrt(r1) / (c2 sqrt(r2)) = (c1 / (c2 r2)) sqrt(r1 r2)
    return Surd(a.coeff_ / (b.coeff_ * b.radicand_), a.radicand_ * b.radicand_);
}

bool operator==(const Surd& a, const Surd& b)
{
    return a.sign() == b.sign() && a.square() == b.square();
}

std::string Surd::to_string() const
{
    if (radicand_ == 1)
        return cliffleg::to_string(coeff_);
    return cliffleg::to_string(coeff_) + "*sqrt(" + cliffleg::to_string(radicand_) + ")";
}

} // namespace cliffleg
