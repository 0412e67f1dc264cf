#pragma once

#include "cliffleg/clifford.hpp"
#include "cliffleg/jacobi.hpp"
#include "cliffleg/monogenics.hpp"
#include "cliffleg/radial.hpp"

#include <memory>
#include <span>
#include <vector>

namespace cliffleg {

/// scale * radial(Y_k^i), with Y_k^i the i-th (1-based) element of the basis.
struct CliffordPolynomial {
    int n = 0;
    int m = 2;
    int k = 0;
    Rational alpha;
    int i = 1;
    bool normalized = false;
    ParityRadialForm radial;
    Surd scale = Surd(Rational(1));
    std::shared_ptr<const MonogenicBasis> basis;

    const MonogenicPolynomial& monogenic() const { return basis->elements.at(static_cast<std::size_t>(i - 1)); }
    Multivector<double> evaluate(std::span<const double> x) const;
};

/// p(|x|^2) as a scalar-valued polynomial in x.
MultivectorPolynomial radial_to_polynomial(const RationalPoly& p, int m);
/// f written out in coordinates, with y standing for Y_k.
MultivectorPolynomial form_to_polynomial(const ParityRadialForm& f, const MultivectorPolynomial& y);

/// C^alpha_{n,m}(Y_k^i) built by the operator product.
CliffordPolynomial clifford_polynomial(int n, int m, int k, int i = 1, const Rational& alpha = Rational(0));
/// The normalised Legendre polynomial (alpha = 0).
CliffordPolynomial normalized_legendre(int n, int m, int k, int i = 1);

ParityRadialForm explicit_even(int N, int k, int m);
ParityRadialForm explicit_odd(int N, int k, int m);
/// explicit_even / explicit_odd by the parity of n.
ParityRadialForm explicit_legendre(int n, int k, int m);

/// Squared L^2(B(1)) norm of C^0_{n,m}(Y_k^i): 2^{2n}(n!)^2/(2k+2n+m).
Rational norm_sq(int n, int k, int m);
/// sqrt(2k+2n+m) / (2^n n!)
Surd normalization_scale(int n, int k, int m);
/// Throws std::invalid_argument for alpha != 0; a normalised input is returned unchanged.
CliffordPolynomial normalize(const CliffordPolynomial& p);

struct BonnetPair {
    Rational alpha;
    Rational beta;
};
/// x C_{2N+1} = alpha C_{2N+2} + beta C_{2N}
BonnetPair bonnet_odd(int N, int k, int m);
/// x C_{2N} = alpha' C_{2N+1} + beta' C_{2N-1}
BonnetPair bonnet_even(int N, int k, int m);

struct SurdPair {
    Surd A;
    Surd B;
};
/// x Cbar_n = A Cbar_{n+1} + B Cbar_{n-1}, in closed form.
SurdPair bonnet_normalized(int n, int k, int m);

/// x C_n - a C_{n+1} - b C_{n-1} for the unnormalised pair.
ParityRadialForm bonnet_residual(int n, int k, int m);

/// Exact linear combination of surd-weighted polynomials; zero iff every radicand class cancels.
class SurdCombination {
public:
    void add(const Surd& weight, const RationalPoly& p);
    bool is_zero() const;
    /// Largest absolute coefficient, in double precision.
    double max_abs() const;

private:
    struct Group {
        Surd unit;
        RationalPoly poly;
    };
    std::vector<Group> groups_;
};

/// x Cbar_n - A Cbar_{n+1} - B Cbar_{n-1} on the radial polynomials.
SurdCombination bonnet_normalized_residual(int n, int k, int m);

struct JacobiIdentification {
    int sign;          // +1 or -1
    Rational scale_sq;  // 2(k + m/2 + 2N) for even n, 2(k + m/2 + 1 + 2N) for odd n
    int N;
    Rational beta;
};
JacobiIdentification jacobi_radial_id(int n, int k, int m);
/// Normalised radial poly minus sign * sqrt(scale_sq) * P_N^{(0,beta)}(2t-1).
SurdCombination jacobi_identification_residual(int n, int k, int m);

/// Closed-form Fourier transform of the restriction of p to B(1).  Throws std::domain_error at 0.
ComplexMultivector fourier_transform(const CliffordPolynomial& p, std::span<const double> xi);

struct DegeneracyResult {
    bool radial_zero;     // s_{2N+1}(k) Q_k + s_{2N}(k+1) P_{k+1} = 0
    bool coordinate_zero;  // Cbar_{2N+1}(Y_k^i) + e_1 Cbar_{2N}(Y_{k+1}^j) = 0 as a polynomial
    double max_sampled;    // largest residual magnitude over a fixed sample of points in B(1)
};
/// m = 2 only.
DegeneracyResult degeneracy_m2(int N, int k);
/// Any m, comparing Y_k^i against Y_{k+1}^j (1-based).
DegeneracyResult degeneracy_check(int m, int N, int k, int i, int j);
/// True when e_1^{-1} x Y_k^i is left monogenic.
bool shifted_monogenic(int m, int k, int i);

} // namespace cliffleg
