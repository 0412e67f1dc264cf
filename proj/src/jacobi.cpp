#include "cliffleg/jacobi.hpp"

#include "cliffleg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cliffleg {

namespace {

void require_parameters(const Rational& alpha, const Rational& beta)
{
    if (alpha <= -1 || beta <= -1)
        throw std::invalid_argument("Jacobi parameters must exceed -1");
}

int sign_changes(const std::vector<RationalPoly>& seq, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        const int s = sgn(p.evaluate(x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

long double jacobi_evaluate(int n, long double a, long double b, long double x)
{
    if (n == 0)
        return 1.0L;
    long double p0 = 1.0L;
    long double p1 = (a + 1) + (a + b + 2) * (x - 1) / 2;
    for (int j = 2; j <= n; ++j) {
        const long double c = 2 * j + a + b;
        const long double a1 = 2 * j * (j + a + b) * (c - 2);
        const long double a2 = (c - 1) * (c * (c - 2) * x + a * a - b * b);
        const long double a3 = 2 * (j + a - 1) * (j + b - 1) * c;
        const long double p2 = (a2 * p1 - a3 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double JacobiPoly::evaluate(double x) const
{
    return static_cast<double>(evaluate_ld(x));
}

long double JacobiPoly::evaluate_ld(long double x) const
{
    return jacobi_evaluate(n, static_cast<long double>(alpha.get_d()), static_cast<long double>(beta.get_d()), x);
}

JacobiPoly jacobi_build(int n, const Rational& alpha, const Rational& beta)
{
    if (n < 0)
        throw std::invalid_argument("Jacobi degree must be >= 0");
    require_parameters(alpha, beta);
    const Rational& a = alpha;
    const Rational& b = beta;
    RationalPoly p0{1};
    RationalPoly p1(std::vector<Rational>{(a - b) / 2, (a + b + 2) / 2});
    if (n == 0)
        return {0, a, b, p0};
    const RationalPoly x{0, 1};
    for (int j = 2; j <= n; ++j) {
        const Rational c = 2 * j + a + b;
        const Rational a1 = 2 * j * (j + a + b) * (c - 2);
        const RationalPoly a2 = RationalPoly(std::vector<Rational>{a * a - b * b, c * (c - 2)}) * Rational(c - 1);
        const Rational a3 = 2 * (j + a - 1) * (j + b - 1) * c;
        RationalPoly p2 = (a2 * p1 - p0 * a3) * Rational(1 / a1);
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return {n, a, b, p1};
}

RationalPoly jacobi_ode_residual(const JacobiPoly& p)
{
    const RationalPoly& y = p.coeffs;
    const RationalPoly w{1, 0, -1};
    const RationalPoly lin(std::vector<Rational>{p.beta - p.alpha, -(p.alpha + p.beta + 2)});
    return w * y.derivative().derivative() + lin * y.derivative()
         + y * Rational(p.n * (p.n + p.alpha + p.beta + 1));
}

std::vector<JacobiRoot> jacobi_roots(int n, const Rational& alpha, const Rational& beta)
{
    if (n < 1)
        throw std::invalid_argument("jacobi_roots: degree must be >= 1");
    require_parameters(alpha, beta);
    std::vector<long double> edges{-1.0L};
    if (n > 1)
        for (const auto& z : jacobi_roots(n - 1, alpha + 1, beta + 1))
            edges.push_back(z.value);
    edges.push_back(1.0L);

    auto ld = [](const Rational& r) {
        return static_cast<long double>(r.get_num().get_d()) / static_cast<long double>(r.get_den().get_d());
    };
    const long double a = ld(alpha), b = ld(beta);
    auto f = [&](long double x) { return jacobi_evaluate(n, a, b, x); };
    std::vector<JacobiRoot> roots;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        long double lo = edges[i], hi = edges[i + 1];
        long double flo = f(lo), fhi = f(hi);
        if (flo == 0 || fhi == 0 || (flo < 0) == (fhi < 0))
            throw RootCountMismatch("no sign change on derivative bracket " + std::to_string(i));
        while (true) {
            const long double mid = lo + (hi - lo) / 2;
            if (mid <= lo || mid >= hi)
                break;
            const long double fm = f(mid);
            if (fm == 0) {
                lo = hi = mid;
                flo = fhi = 0;
                break;
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
        const bool take_lo = std::fabs(flo) <= std::fabs(fhi);
        roots.push_back({take_lo ? lo : hi, lo, hi, std::fabs(take_lo ? flo : fhi)});
    }
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (!(roots[i - 1].value < roots[i].value))
            throw RootCountMismatch("roots not strictly increasing");
    if (static_cast<int>(roots.size()) != n)
        throw RootCountMismatch("found " + std::to_string(roots.size()) + " roots, expected " + std::to_string(n));
    return roots;
}

std::vector<double> jacobi_zeros(int n, const Rational& alpha, const Rational& beta)
{
    std::vector<double> out;
    for (const auto& r : jacobi_roots(n, alpha, beta))
        out.push_back(static_cast<double>(r.value));
    return out;
}

bool interlacing_check(const std::vector<double>& xs, const std::vector<double>& ts,
                       const std::vector<double>& ys)
{
    if (xs.size() != ts.size() || ts.size() != ys.size())
        return false;
    return cyclic_interlacing({xs, ts, ys});
}

bool cyclic_interlacing(const std::vector<std::vector<double>>& lists)
{
    const int q = static_cast<int>(lists.size());
    std::vector<std::pair<double, int>> merged;
    for (int l = 0; l < q; ++l) {
        const auto& v = lists[static_cast<std::size_t>(l)];
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0 && !(v[i - 1] < v[i]))
                return false;
            merged.emplace_back(v[i], l);
        }
    }
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 1; i < merged.size(); ++i)
        if (!(merged[i - 1].first < merged[i].first))
            return false;
    int expect = q - 1;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
        if (it->second != expect)
            return false;
        expect = (expect + q - 1) % q;
    }
    return true;
}

int sturm_root_count(const RationalPoly& p, const Rational& lo, const Rational& hi)
{
    if (p.is_zero())
        throw std::invalid_argument("sturm_root_count: zero polynomial");
    if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0)
        throw std::invalid_argument("sturm_root_count: root at an interval end");
    std::vector<RationalPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        RationalPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
        seq.push_back(-r);
    }
    seq.pop_back();
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<double> zero_radii(int n, int k, int m)
{
    if (n < 0 || k < 0 || m < 2)
        throw std::invalid_argument("zero_radii: need n, k >= 0 and m >= 2");
    const int N = n / 2;
    if (N == 0)
        return {};
    const Rational beta = Rational(k) + make_rational(m, 2) - (n % 2 == 0 ? 1 : 0);
    std::vector<double> radii;
    for (double s : jacobi_zeros(N, Rational(0), beta))
        radii.push_back(std::sqrt((s + 1) / 2));
    return radii;
}

} // namespace cliffleg
