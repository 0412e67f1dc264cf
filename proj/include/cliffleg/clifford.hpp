#pragma once

#include "cliffleg/errors.hpp"
#include "cliffleg/rational.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cliffleg {

constexpr int max_dimension = 12;

/// Basis blade e_A of R_m, A encoded as a bitmask (bit j-1 set <=> e_j in A).
/// The empty mask is the identity e_0 = 1.
struct Blade {
    std::uint32_t mask = 0;

    constexpr int grade() const { return std::popcount(mask); }
    constexpr bool valid_for(int m) const { return mask < (std::uint32_t{1} << m); }
    static constexpr Blade generator(int j) { return Blade{std::uint32_t{1} << (j - 1)}; }

    friend constexpr bool operator==(Blade, Blade) = default;
};

struct SignedBlade {
    int sign;
    Blade blade;
};

/// e_A e_B = sign * e_{A xor B}, using e_j^2 = -1 and e_i e_j = -e_j e_i.
constexpr SignedBlade blade_product(Blade a, Blade b)
{
    // Sort the concatenated word: each generator of b passes every larger generator of a.
    int swaps = 0;
    for (std::uint32_t rest = b.mask; rest != 0; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(a.mask >> (j + 1));
    }
    swaps += std::popcount(a.mask & b.mask);  // each repeated generator squares to -1
    return {(swaps & 1) ? -1 : 1, Blade{a.mask ^ b.mask}};
}

SignedBlade blade_product(Blade a, Blade b, int m);

/// Sign s with conj(e_A) = s e_A: (-1)^|A| for the generators times the reversal sign.
constexpr int conjugation_sign(Blade a)
{
    const int g = a.grade();
    return ((g * (g + 1) / 2) & 1) ? -1 : 1;
}

std::string blade_name(Blade a);

inline void check_dimension(int m)
{
    if (m < 2 || m > max_dimension)
        throw std::invalid_argument("Clifford dimension out of range: " + std::to_string(m));
}

/// Dense element of R_m: 2^m coefficients indexed by blade mask.
template <class S>
class Multivector {
public:
    Multivector() = default;
    explicit Multivector(int m) : m_(m)
    {
        check_dimension(m);
        c_.assign(std::size_t{1} << m, S(0));
    }

    static Multivector scalar(int m, const S& value)
    {
        Multivector r(m);
        r.c_[0] = value;
        return r;
    }
    static Multivector blade(int m, Blade b, const S& value = S(1))
    {
        Multivector r(m);
        if (!b.valid_for(m))
            throw std::invalid_argument("blade outside R_m");
        r.c_[b.mask] = value;
        return r;
    }

    int dimension() const noexcept { return m_; }
    std::size_t size() const noexcept { return c_.size(); }
    const S& operator[](Blade b) const { return c_[b.mask]; }
    S& operator[](Blade b) { return c_[b.mask]; }
    std::span<const S> coefficients() const noexcept { return c_; }

    bool is_zero() const
    {
        for (const auto& v : c_)
            if (v != 0)
                return false;
        return true;
    }
    /// True when every non-scalar coefficient vanishes.
    bool is_scalar() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0)
                return false;
        return true;
    }
    const S& scalar_part() const { return c_[0]; }

    Multivector& operator+=(const Multivector& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Multivector& operator-=(const Multivector& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    Multivector& operator*=(const S& s)
    {
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(Multivector a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
    friend Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }
    friend bool operator==(const Multivector& a, const Multivector& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

    /// Adds sign * value to the coefficient of b.
    void accumulate(Blade b, int sign, const S& value)
    {
        if (sign > 0)
            c_[b.mask] += value;
        else
            c_[b.mask] -= value;
    }

    void require_same(const Multivector& o) const
    {
        if (m_ != o.m_)
            throw DimensionMismatch("multivectors from R_" + std::to_string(m_) + " and R_" + std::to_string(o.m_));
    }

private:
    int m_ = 0;
    std::vector<S> c_;
};

/// Bilinear extension of blade_product; zero coefficients are skipped.
template <class S>
Multivector<S> geometric_product(const Multivector<S>& u, const Multivector<S>& v)
{
    u.require_same(v);
    Multivector<S> r(u.dimension());
    std::vector<std::uint32_t> vnz;
    for (std::uint32_t b = 0; b < v.size(); ++b)
        if (v[Blade{b}] != 0)
            vnz.push_back(b);
    for (std::uint32_t a = 0; a < u.size(); ++a) {
        const S& ua = u[Blade{a}];
        if (ua == 0)
            continue;
        for (std::uint32_t b : vnz) {
            const auto [sign, blade] = blade_product(Blade{a}, Blade{b});
            S prod = ua * v[Blade{b}];
            r.accumulate(blade, sign, prod);
        }
    }
    return r;
}

template <class S>
Multivector<S> grade_project(const Multivector<S>& u, int k)
{
    if (k < 0 || k > u.dimension())
        throw std::invalid_argument("grade " + std::to_string(k) + " outside 0.." + std::to_string(u.dimension()));
    Multivector<S> r(u.dimension());
    for (std::uint32_t a = 0; a < u.size(); ++a)
        if (Blade{a}.grade() == k)
            r[Blade{a}] = u[Blade{a}];
    return r;
}

/// Antiautomorphism with conj(e_j) = -e_j.
template <class S>
Multivector<S> hermitian_conjugate(const Multivector<S>& u)
{
    Multivector<S> r(u.dimension());
    for (std::uint32_t a = 0; a < u.size(); ++a) {
        const Blade b{a};
        r[b] = conjugation_sign(b) > 0 ? u[b] : S(-u[b]);
    }
    return r;
}

template <class S>
struct CliffordInner {
    Multivector<S> full;  // conj(u) v
    S scalar;             // [conj(u) v]_0
};

template <class S>
CliffordInner<S> clifford_inner(const Multivector<S>& u, const Multivector<S>& v)
{
    Multivector<S> full = geometric_product(hermitian_conjugate(u), v);
    S scalar = full.scalar_part();
    return {std::move(full), std::move(scalar)};
}

/// |u|^2 = sum of squared coefficients.
template <class S>
S norm_sq(const Multivector<S>& u)
{
    S acc(0);
    for (const auto& v : u.coefficients())
        acc += v * v;
    return acc;
}

/// x = sum_j x_j e_j
template <class S>
Multivector<S> embed_vector(std::span<const S> coords)
{
    const int m = static_cast<int>(coords.size());
    Multivector<S> r(m);
    for (int j = 1; j <= m; ++j)
        r[Blade::generator(j)] = coords[static_cast<std::size_t>(j - 1)];
    return r;
}

Multivector<double> to_double(const Multivector<Rational>& u);

/// Complex-scalar-valued multivector re + i im, for Fourier kernels.
struct ComplexMultivector {
    Multivector<double> re;
    Multivector<double> im;

    explicit ComplexMultivector(int m) : re(m), im(m) {}
    ComplexMultivector(Multivector<double> r, Multivector<double> i) : re(std::move(r)), im(std::move(i))
    {
        re.require_same(im);
    }
    int dimension() const { return re.dimension(); }

    ComplexMultivector& operator+=(const ComplexMultivector& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend ComplexMultivector operator-(ComplexMultivector a, const ComplexMultivector& b)
    {
        a.re -= b.re;
        a.im -= b.im;
        return a;
    }
};

/// Sum of squared magnitudes over both parts.
double norm_sq(const ComplexMultivector& u);

} // namespace cliffleg
