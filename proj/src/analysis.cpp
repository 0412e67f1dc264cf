#include "cliffleg/analysis.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace cliffleg {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

enum class SphereKind { Plain, Theta };

/// Cached sphere Gram entries of normalised monogenics.
const SphereInner& cached_sphere(int m, int k1, int i1, int k2, int i2, SphereKind kind)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int, int, int>, SphereInner> cache;
    const auto key = std::make_tuple(m, k1, i1, k2, i2, static_cast<int>(kind));
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    const auto b1 = basis_for(m, k1);
    const auto b2 = basis_for(m, k2);
    const auto& y1 = b1->elements.at(static_cast<std::size_t>(i1 - 1));
    const auto& y2 = b2->elements.at(static_cast<std::size_t>(i2 - 1));
    SphereInner s = kind == SphereKind::Plain ? sphere_inner(y1, y2) : sphere_inner_theta(y1, y2);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(s)).first->second;
}

void require_quadrature_dimension(int m)
{
    if (m != 2 && m != 3)
        throw std::invalid_argument("quadrature rules exist for m = 2 and m = 3 only");
}

} // namespace

double bessel_j(BesselOrder nu, double x)
{
    if (nu.twice_nu < 0 || nu.twice_nu > 80)
        throw std::domain_error("bessel_j: order outside [0, 40]");
    if (!(x >= 0) || x > 1e4)
        throw std::domain_error("bessel_j: argument outside [0, 1e4]");
    if (x == 0)
        return nu.twice_nu == 0 ? 1.0 : 0.0;
    return boost::math::cyl_bessel_j(nu.value(), x);
}

GaussRule gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: need n >= 1");
    GaussRule g;
    g.nodes.resize(static_cast<std::size_t>(n));
    g.weights.resize(static_cast<std::size_t>(n));
    auto legendre = [n](long double x, long double& deriv) {
        long double p0 = 1, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        deriv = n * (x * p1 - p0) / (x * x - 1);
        return p1;
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        long double dp = 0;
        for (int it = 0; it < 100; ++it) {
            const long double dx = legendre(x, dp) / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L)
                break;
        }
        legendre(x, dp);
        const long double w = 2 / ((1 - x * x) * dp * dp);
        g.nodes[static_cast<std::size_t>(i)] = static_cast<double>(-x);
        g.nodes[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(x);
        g.weights[static_cast<std::size_t>(i)] = static_cast<double>(w);
        g.weights[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(w);
    }
    return g;
}

QuadratureRule QuadratureRule::ball(int m, int degree)
{
    require_quadrature_dimension(m);
    if (degree < 0)
        throw std::invalid_argument("quadrature degree must be >= 0");
    QuadratureRule q;
    q.m = m;
    q.degree = degree;
    // radial integrand r^{m-1} * (degree <= d) needs 2 n_r - 1 >= d + m - 1
    const int n_r = (degree + m) / 2 + 1;
    const GaussRule gr = gauss_legendre(n_r);
    for (int i = 0; i < n_r; ++i) {
        const double r = (gr.nodes[static_cast<std::size_t>(i)] + 1) / 2;
        q.radial_nodes.push_back(r);
        q.radial_weights.push_back(gr.weights[static_cast<std::size_t>(i)] / 2 * std::pow(r, m - 1));
    }
    const int n_theta = degree + 1;
    if (m == 2) {
        for (int a = 0; a < n_theta; ++a) {
            const double th = two_pi * a / n_theta;
            q.directions.push_back({std::cos(th), std::sin(th)});
            q.angular_weights.push_back(two_pi / n_theta);
        }
    } else {
        const int n_u = degree / 2 + 1;
        const GaussRule gu = gauss_legendre(n_u);
        for (int b = 0; b < n_u; ++b) {
            const double u = gu.nodes[static_cast<std::size_t>(b)];
            const double s = std::sqrt(1 - u * u);
            for (int a = 0; a < n_theta; ++a) {
                const double th = two_pi * a / n_theta;
                q.directions.push_back({s * std::cos(th), s * std::sin(th), u});
                q.angular_weights.push_back(gu.weights[static_cast<std::size_t>(b)] * two_pi / n_theta);
            }
        }
    }
    return q;
}

QuadratureRule QuadratureRule::oscillatory(int m, int degree, double xi_max)
{
    const int extra = static_cast<int>(std::ceil(two_pi * std::numbers::e * xi_max)) + 30;
    const int d = std::max(degree + extra, static_cast<int>(std::ceil(20 * xi_max)));
    return ball(m, d);
}

ComplexMultivector numeric_fourier(const CliffordPolynomial& p, std::span<const double> xi, const QuadratureRule& rule)
{
    if (rule.m != p.m || static_cast<int>(xi.size()) != p.m)
        throw DimensionMismatch("numeric_fourier: dimension mismatch");
    double rho = 0;
    for (double v : xi)
        rho += v * v;
    rho = std::sqrt(rho);
    if (rho > 10)
        throw std::invalid_argument("numeric_fourier: |xi| above 10");
    if (static_cast<double>(rule.radial_nodes.size()) < 10 * rho)
        throw std::invalid_argument("numeric_fourier: rule too coarse for |xi|");
    ComplexMultivector out(p.m);
    rule.for_each([&](std::span<const double> x, double w) {
        double phase = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            phase += x[j] * xi[j];
        phase *= two_pi;
        const Multivector<double> f = p.evaluate(x);
        out.re += f * (w * std::cos(phase));
        out.im -= f * (w * std::sin(phase));
    });
    return out;
}

Multivector<double> ball_inner(const CliffordPolynomial& p, const CliffordPolynomial& q, const QuadratureRule& rule)
{
    if (p.m != q.m || rule.m != p.m)
        throw DimensionMismatch("ball_inner: dimension mismatch");
    Multivector<double> acc(p.m);
    rule.for_each([&](std::span<const double> x, double w) {
        acc += geometric_product(hermitian_conjugate(p.evaluate(x)), q.evaluate(x)) * w;
    });
    return acc;
}

bool ExactInner::equals_scalar(const Rational& c) const
{
    if (!raw.is_scalar())
        return false;
    const Rational& r = raw.scalar_part();
    if (c == 0)
        return r == 0;
    return r * r * factor.square() == c * c && sgn(r) * factor.sign() == sgn(c);
}

Multivector<double> ExactInner::to_double() const
{
    Multivector<double> d = cliffleg::to_double(raw);
    d *= factor.to_double();
    return d;
}

ExactInner ball_inner_exact(const CliffordPolynomial& p, const CliffordPolynomial& q)
{
    if (p.m != q.m)
        throw DimensionMismatch("ball_inner_exact: dimension mismatch");
    const bool po = p.radial.parity == Parity::Odd, qo = q.radial.parity == Parity::Odd;
    const int extra = (po && qo) ? 2 : (po != qo ? 1 : 0);
    const int e = p.m - 1 + p.k + q.k + extra;
    const RationalPoly pq = p.radial.poly * q.radial.poly;
    Rational radial = 0;
    for (int j = 0; j <= pq.degree(); ++j)
        radial += pq.coeff(j) / Rational(2 * j + e + 1);

    const SphereInner& s = cached_sphere(p.m, p.k, p.i, q.k, q.i, po == qo ? SphereKind::Plain : SphereKind::Theta);
    if (po && !qo)
        radial = -radial;
    ExactInner out{s.raw, p.scale * q.scale * s.factor};
    out.raw *= radial;
    return out;
}

ExactInner ball_inner_x_exact(const CliffordPolynomial& p, const CliffordPolynomial& q)
{
    CliffordPolynomial xq = q;
    xq.radial = mul_x(q.radial);
    return ball_inner_exact(p, xq);
}

GramReport gram_report(const std::vector<CliffordPolynomial>& family, const std::vector<double>& expected,
                       const QuadratureRule& rule)
{
    GramReport rep;
    const std::size_t n = family.size();
    if (expected.size() != n)
        throw std::invalid_argument("gram_report: expected norms size mismatch");
    rep.scalar.assign(n, std::vector<double>(n, 0.0));
    if (n == 0)
        return rep;
    // evaluate each element once per node, then form all products
    std::vector<std::vector<Multivector<double>>> values(n);
    std::vector<double> weights;
    rule.for_each([&](std::span<const double> x, double w) {
        weights.push_back(w);
        for (std::size_t a = 0; a < n; ++a)
            values[a].push_back(family[a].evaluate(x));
    });
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Multivector<double> acc(family[a].m);
            for (std::size_t s = 0; s < weights.size(); ++s)
                acc += geometric_product(hermitian_conjugate(values[a][s]), values[b][s]) * weights[s];
            rep.scalar[a][b] = rep.scalar[b][a] = acc.scalar_part();
            for (std::size_t c = 1; c < acc.size(); ++c)
                rep.max_non_scalar = std::max(rep.max_non_scalar, std::fabs(acc.coefficients()[c]));
            if (a == b)
                rep.max_diagonal_error = std::max(rep.max_diagonal_error, std::fabs(acc.scalar_part() - expected[a]));
            else
                rep.max_off_diagonal = std::max(rep.max_off_diagonal, std::fabs(acc.scalar_part()));
        }
    return rep;
}

ExactGramReport gram_report_exact(const std::vector<CliffordPolynomial>& family, const std::vector<Rational>& expected)
{
    if (expected.size() != family.size())
        throw std::invalid_argument("gram_report_exact: expected norms size mismatch");
    ExactGramReport rep;
    rep.size = family.size();
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a; b < family.size(); ++b) {
            const ExactInner g = ball_inner_exact(family[a], family[b]);
            if (a == b && !g.equals_scalar(expected[a])) {
                rep.identity_on_diagonal = false;
                ++rep.failures;
            } else if (a != b && !g.is_zero()) {
                rep.zero_off_diagonal = false;
                ++rep.failures;
            }
        }
    return rep;
}

std::vector<CliffordPolynomial> legendre_family(int m, int n_max, int k_max, bool normalized)
{
    std::vector<CliffordPolynomial> fam;
    for (int k = 0; k <= k_max; ++k) {
        const int dk = static_cast<int>(basis_for(m, k)->size());
        for (int i = 1; i <= dk; ++i)
            for (int n = 0; n <= n_max; ++n)
                fam.push_back(normalized ? normalized_legendre(n, m, k, i) : clifford_polynomial(n, m, k, i));
    }
    return fam;
}

PlancherelResult plancherel(const CliffordPolynomial& p, double R)
{
    require_quadrature_dimension(p.m);
    if (!(R > 0))
        throw std::invalid_argument("plancherel: R must be positive");
    const QuadratureRule ang = QuadratureRule::ball(p.m, 2 * p.k + 2);
    const GaussRule g = gauss_legendre(10);
    // J_nu(2 pi rho)^2 oscillates with period about 1/2 in rho
    const double h = 0.25;
    const int pieces = static_cast<int>(std::ceil(R / h));
    std::vector<double> xi(static_cast<std::size_t>(p.m));
    double total = 0;
    for (int piece = 0; piece < pieces; ++piece) {
        const double a = piece * h, b = std::min(R, a + h);
        double part = 0;
        for (std::size_t j = 0; j < g.nodes.size(); ++j) {
            const double rho = (a + b) / 2 + (b - a) / 2 * g.nodes[j];
            double shell = 0;
            for (std::size_t d = 0; d < ang.directions.size(); ++d) {
                for (int c = 0; c < p.m; ++c)
                    xi[static_cast<std::size_t>(c)] = rho * ang.directions[d][static_cast<std::size_t>(c)];
                shell += ang.angular_weights[d] * norm_sq(fourier_transform(p, xi));
            }
            part += g.weights[j] * (b - a) / 2 * std::pow(rho, p.m - 1) * shell;
        }
        total += part;
    }
    const double s = p.scale.to_double();
    const double lead = std::ldexp(std::pow(std::tgamma(p.n + 1.0), 2), 2 * p.n) * s * s;
    PlancherelResult res;
    res.truncated = total;
    res.tail = lead / (2 * std::numbers::pi * std::numbers::pi * R);
    res.integral = total + res.tail;
    res.expected = Rational(p.scale.square() * norm_sq(p.n, p.k, p.m)).get_d();
    return res;
}

} // namespace cliffleg
