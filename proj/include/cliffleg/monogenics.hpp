#pragma once

#include "cliffleg/clifford.hpp"
#include "cliffleg/rational.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cliffleg {

/// Exponents (a_1, ..., a_m) of x_1^{a_1} ... x_m^{a_m}.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& a);
/// All multi-indices of length m and total degree k, in lexicographically decreasing order.
std::vector<MultiIndex> monomials_of_degree(int m, int k);

/// coeff * pi^pi_power
struct PiMultiple {
    Rational coeff;
    int pi_power = 0;
    double to_double() const;
};

/// Integral of theta^a over the unit sphere S^{m-1}.
PiMultiple sphere_moment(const MultiIndex& a);
/// The closed form itself; sphere_moment memoises it.
PiMultiple sphere_moment_uncached(const MultiIndex& a);
/// The pi power shared by every nonzero moment in dimension m.
constexpr int sphere_pi_power(int m) { return m / 2; }

/// Polynomial in x_1..x_m with values in R_m (exact coefficients).
class MultivectorPolynomial {
public:
    using Terms = std::map<MultiIndex, Multivector<Rational>>;

    explicit MultivectorPolynomial(int m);
    static MultivectorPolynomial constant(const Multivector<Rational>& c);
    static MultivectorPolynomial monomial(const MultiIndex& a, const Multivector<Rational>& c);
    /// x = sum_j x_j e_j
    static MultivectorPolynomial vector_variable(int m);
    /// |x|^2 = sum_j x_j^2
    static MultivectorPolynomial norm_squared(int m);

    int dimension() const noexcept { return m_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int k) const;

    /// Adds c x^a, dropping the term when it cancels to zero.
    void add_term(const MultiIndex& a, const Multivector<Rational>& c);

    MultivectorPolynomial& operator+=(const MultivectorPolynomial& o);
    MultivectorPolynomial& operator-=(const MultivectorPolynomial& o);
    MultivectorPolynomial& operator*=(const Rational& s);

    friend MultivectorPolynomial operator+(MultivectorPolynomial a, const MultivectorPolynomial& b) { return a += b; }
    friend MultivectorPolynomial operator-(MultivectorPolynomial a, const MultivectorPolynomial& b) { return a -= b; }
    friend MultivectorPolynomial operator*(MultivectorPolynomial a, const Rational& s) { return a *= s; }
    friend MultivectorPolynomial operator*(const MultivectorPolynomial& a, const MultivectorPolynomial& b);
    friend bool operator==(const MultivectorPolynomial& a, const MultivectorPolynomial& b)
    {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    /// c p and p c for a constant c
    MultivectorPolynomial left_multiply(const Multivector<Rational>& c) const;
    MultivectorPolynomial right_multiply(const Multivector<Rational>& c) const;
    /// Coefficientwise Hermitian conjugate (the variables are real).
    MultivectorPolynomial conjugate() const;

    Multivector<Rational> evaluate(std::span<const Rational> x) const;
    Multivector<double> evaluate(std::span<const double> x) const;

    std::string to_string() const;

private:
    int m_;
    Terms terms_;
};

/// sum_j e_j d/dx_j p
MultivectorPolynomial dirac_on_polynomial(const MultivectorPolynomial& p);
/// sum_j x_j d/dx_j p
MultivectorPolynomial euler_on_polynomial(const MultivectorPolynomial& p);

/// Integral over S^{m-1} of p: the Clifford coefficient times pi^sphere_pi_power(m).
Multivector<Rational> sphere_integral(const MultivectorPolynomial& p);
/// sphere_integral(conj(p) q) without forming the product polynomial.
Multivector<Rational> sphere_product_integral(const MultivectorPolynomial& p, const MultivectorPolynomial& q);

/// Same polynomial with double coefficients, for fast repeated evaluation.
class NumericPolynomial {
public:
    NumericPolynomial() = default;
    NumericPolynomial(const MultivectorPolynomial& p, double scale);
    Multivector<double> evaluate(std::span<const double> x) const;
    int dimension() const noexcept { return m_; }

private:
    int m_ = 0;
    std::vector<MultiIndex> exps_;
    std::vector<std::vector<std::pair<Blade, double>>> coeffs_;
};

/// Spherical monogenic Y = unscaled / sqrt(norm_sq), norm_sq = norm_sq_coeff * pi^pi_power
/// being the sphere integral of conj(unscaled) unscaled.
class MonogenicPolynomial {
public:
    MonogenicPolynomial(int k, MultivectorPolynomial unscaled, PiMultiple norm_sq);

    int dimension() const noexcept { return unscaled_.dimension(); }
    int degree() const noexcept { return k_; }
    const MultivectorPolynomial& unscaled() const noexcept { return unscaled_; }
    const PiMultiple& norm_sq() const noexcept { return norm_sq_; }
    /// x * unscaled
    const MultivectorPolynomial& x_unscaled() const noexcept { return x_unscaled_; }

    Multivector<double> evaluate(std::span<const double> x) const { return numeric_.evaluate(x); }

private:
    int k_;
    MultivectorPolynomial unscaled_;
    PiMultiple norm_sq_;
    MultivectorPolynomial x_unscaled_;
    NumericPolynomial numeric_;
};

/// Sphere inner product of normalised monogenics: factor * raw, exactly; the pi powers cancel.
struct SphereInner {
    Multivector<Rational> raw;
    Surd factor;
    bool is_zero() const { return raw.is_zero(); }
    /// True when the value is the scalar 1.
    bool is_unit() const;
    Multivector<double> to_double() const;
};
SphereInner sphere_inner(const MonogenicPolynomial& a, const MonogenicPolynomial& b);
/// Integral of conj(Y_a) theta Y_b over the sphere (Y's normalised).
SphereInner sphere_inner_theta(const MonogenicPolynomial& a, const MonogenicPolynomial& b);

struct MonogenicBasis {
    int m;
    int k;
    std::vector<MonogenicPolynomial> elements;
    std::size_t size() const { return elements.size(); }
};

Integer monogenic_space_dim(int m, int k);

/// The single element e_1 Re(z^k) - e_2 Im(z^k), z = x_1 + i x_2, normalised by 1/sqrt(2 pi).
MonogenicBasis m2_basis(int k);

/// Orthonormal basis of the degree-k spherical monogenics for 2 <= m <= 6, 0 <= k <= 8.
/// Throws GramNotScalar when the constructed Gram matrix is not the scalar identity.
MonogenicBasis build_basis(int m, int k);

/// Cached build_basis (m2_basis when m = 2); thread-safe.
std::shared_ptr<const MonogenicBasis> basis_for(int m, int k);

} // namespace cliffleg
