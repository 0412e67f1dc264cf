#include "cliffleg/rational_poly.hpp"

#include "cliffleg/errors.hpp"

#include <algorithm>

namespace cliffleg {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long c : coeffs)
        c_.emplace_back(c);
    trim();
}

RationalPoly RationalPoly::constant(const Rational& c)
{
    return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(const Rational& c, int power)
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
    coeffs.back() = c;
    return RationalPoly(std::move(coeffs));
}

RationalPoly RationalPoly::one_minus_t()
{
    return RationalPoly{1, -1};
}

void RationalPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational RationalPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

RationalPoly RationalPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::compose_affine(const Rational& a, const Rational& b) const
{
    // Horner in the composed variable.
    RationalPoly result;
    const RationalPoly inner{std::vector<Rational>{b, a}};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        result = result * inner;
        result += constant(*it);
    }
    return result;
}

RationalPoly RationalPoly::pow(unsigned e) const
{
    RationalPoly result = constant(Rational(1));
    for (unsigned i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

double RationalPoly::evaluate(double t) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + it->get_d();
    return acc;
}

Rational RationalPoly::evaluate(const Rational& t) const
{
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree())
        return {RationalPoly{}, *this};
    std::vector<Rational> rem = c_;
    const int dd = divisor.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
    for (int i = degree(); i >= dd; --i) {
        const Rational q = rem[static_cast<std::size_t>(i)] / divisor.leading();
        quot[static_cast<std::size_t>(i - dd)] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::divide_exact(const RationalPoly& divisor) const
{
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw InexactDivision("remainder " + r.to_string() + " dividing " + to_string() + " by " +
                              divisor.to_string());
    return q;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPoly(std::move(r));
}

std::string RationalPoly::to_string(const char* var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + cliffleg::to_string(c_[i]) + ")";
        if (i >= 1)
            out += std::string("*") + var;
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace cliffleg
