#include "cliffleg/monogenics.hpp"

#include "cliffleg/errors.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace cliffleg {

namespace {

MultiIndex add_indices(const MultiIndex& a, const MultiIndex& b)
{
    MultiIndex r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        r[j] = a[j] + b[j];
    return r;
}

bool all_even_sum(const MultiIndex& a, const MultiIndex& b)
{
    for (std::size_t j = 0; j < a.size(); ++j)
        if ((a[j] + b[j]) % 2 != 0)
            return false;
    return true;
}

void generate(int m, int k, int pos, MultiIndex& cur, std::vector<MultiIndex>& out)
{
    if (pos == m - 1) {
        cur[static_cast<std::size_t>(pos)] = k;
        out.push_back(cur);
        return;
    }
    for (int a = k; a >= 0; --a) {
        cur[static_cast<std::size_t>(pos)] = a;
        generate(m, k - a, pos + 1, cur, out);
    }
}

struct SparseTerm {
    const MultiIndex* exps;
    std::vector<std::pair<std::uint32_t, const Rational*>> nz;
};

std::vector<SparseTerm> sparse_terms(const MultivectorPolynomial& p)
{
    std::vector<SparseTerm> out;
    for (const auto& [a, c] : p.terms()) {
        SparseTerm t{&a, {}};
        for (std::uint32_t b = 0; b < c.size(); ++b)
            if (c[Blade{b}] != 0)
                t.nz.emplace_back(b, &c[Blade{b}]);
        out.push_back(std::move(t));
    }
    return out;
}

/// acc += w * conj(u) v
void accumulate_conj_product(Multivector<Rational>& acc, const Rational& w, const SparseTerm& u, const SparseTerm& v)
{
    Rational wa;
    for (const auto& [a, ua] : u.nz) {
        wa = w * *ua;
        if (conjugation_sign(Blade{a}) < 0)
            wa = -wa;
        for (const auto& [b, vb] : v.nz) {
            const auto [sign, blade] = blade_product(Blade{a}, Blade{b});
            acc.accumulate(blade, sign, wa * *vb);
        }
    }
}

Rational sphere_scalar_inner(const MultivectorPolynomial& p, const MultivectorPolynomial& q)
{
    const auto ps = sparse_terms(p), qs = sparse_terms(q);
    Rational s = 0;
    for (const auto& u : ps)
        for (const auto& v : qs) {
            if (!all_even_sum(*u.exps, *v.exps))
                continue;
            // the scalar part of conj(u) v pairs equal blades only
            Rational dot = 0;
            for (const auto& [a, ua] : u.nz)
                for (const auto& [b, vb] : v.nz)
                    if (a == b)
                        dot += *ua * *vb;
            if (dot != 0)
                s += sphere_moment(add_indices(*u.exps, *v.exps)).coeff * dot;
        }
    return s;
}

/// Rescales p so that its coefficients are coprime integers.
MultivectorPolynomial make_primitive(const MultivectorPolynomial& p)
{
    Integer den = 1, num = 0;
    for (const auto& [a, c] : p.terms())
        for (const auto& v : c.coefficients()) {
            if (v == 0)
                continue;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
        }
    if (num == 0)
        return p;
    Rational scale(den, num);
    scale.canonicalize();
    return p * scale;
}

/// Basis of the nullspace of a dense rational matrix (rows x cols), by reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, std::size_t cols)
{
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[row]);
        const Rational inv = 1 / a[row][col];
        for (auto& v : a[row])
            v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (a[row][c] != 0)
                    a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col)
        is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

PiMultiple unscaled_norm(const MultivectorPolynomial& p)
{
    const Multivector<Rational> g = sphere_product_integral(p, p);
    if (!g.is_scalar() || g.scalar_part() <= 0)
        throw std::logic_error("self inner product is not a positive scalar");
    return {g.scalar_part(), sphere_pi_power(p.dimension())};
}

} // namespace

int total_degree(const MultiIndex& a)
{
    int s = 0;
    for (int v : a)
        s += v;
    return s;
}

std::vector<MultiIndex> monomials_of_degree(int m, int k)
{
    std::vector<MultiIndex> out;
    if (k < 0)
        return out;
    MultiIndex cur(static_cast<std::size_t>(m), 0);
    generate(m, k, 0, cur, out);
    return out;
}

double PiMultiple::to_double() const
{
    return coeff.get_d() * std::pow(std::numbers::pi, pi_power);
}

PiMultiple sphere_moment(const MultiIndex& a)
{
    static std::mutex mu;
    static std::map<MultiIndex, PiMultiple> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(a); it != cache.end())
            return it->second;
    }
    PiMultiple v = sphere_moment_uncached(a);
    std::lock_guard lock(mu);
    return cache.emplace(a, std::move(v)).first->second;
}

PiMultiple sphere_moment_uncached(const MultiIndex& a)
{
    const int m = static_cast<int>(a.size());
    const int p = sphere_pi_power(m);
    for (int v : a)
        if (v % 2 != 0)
            return {Rational(0), p};
    // Gamma((a_j+1)/2) = sqrt(pi) (1/2)_{a_j/2}; the denominator Gamma((|a|+m)/2) supplies the rest.
    Rational num = 2;
    for (int v : a)
        num *= rising_factorial(Rational(1, 2), static_cast<unsigned>(v / 2));
    const int half = total_degree(a) / 2;
    Rational den;
    if (m % 2 == 0)
        den = Rational(factorial(static_cast<unsigned>(half + m / 2 - 1)));
    else
        den = rising_factorial(Rational(1, 2), static_cast<unsigned>(half + (m - 1) / 2));
    return {num / den, p};
}

MultivectorPolynomial::MultivectorPolynomial(int m) : m_(m)
{
    check_dimension(m);
}

MultivectorPolynomial MultivectorPolynomial::constant(const Multivector<Rational>& c)
{
    return monomial(MultiIndex(static_cast<std::size_t>(c.dimension()), 0), c);
}

MultivectorPolynomial MultivectorPolynomial::monomial(const MultiIndex& a, const Multivector<Rational>& c)
{
    MultivectorPolynomial p(c.dimension());
    p.add_term(a, c);
    return p;
}

MultivectorPolynomial MultivectorPolynomial::vector_variable(int m)
{
    MultivectorPolynomial p(m);
    for (int j = 1; j <= m; ++j) {
        MultiIndex a(static_cast<std::size_t>(m), 0);
        a[static_cast<std::size_t>(j - 1)] = 1;
        p.add_term(a, Multivector<Rational>::blade(m, Blade::generator(j)));
    }
    return p;
}

MultivectorPolynomial MultivectorPolynomial::norm_squared(int m)
{
    MultivectorPolynomial p(m);
    for (int j = 0; j < m; ++j) {
        MultiIndex a(static_cast<std::size_t>(m), 0);
        a[static_cast<std::size_t>(j)] = 2;
        p.add_term(a, Multivector<Rational>::scalar(m, Rational(1)));
    }
    return p;
}

int MultivectorPolynomial::degree() const
{
    int d = -1;
    for (const auto& [a, c] : terms_)
        d = std::max(d, total_degree(a));
    return d;
}

bool MultivectorPolynomial::is_homogeneous(int k) const
{
    for (const auto& [a, c] : terms_)
        if (total_degree(a) != k)
            return false;
    return true;
}

void MultivectorPolynomial::add_term(const MultiIndex& a, const Multivector<Rational>& c)
{
    if (static_cast<int>(a.size()) != m_)
        throw DimensionMismatch("multi-index length differs from m");
    c.require_same(Multivector<Rational>(m_));
    if (c.is_zero())
        return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

MultivectorPolynomial& MultivectorPolynomial::operator+=(const MultivectorPolynomial& o)
{
    if (m_ != o.m_)
        throw DimensionMismatch("polynomials over different R_m");
    for (const auto& [a, c] : o.terms_)
        add_term(a, c);
    return *this;
}

MultivectorPolynomial& MultivectorPolynomial::operator-=(const MultivectorPolynomial& o)
{
    if (m_ != o.m_)
        throw DimensionMismatch("polynomials over different R_m");
    for (const auto& [a, c] : o.terms_)
        add_term(a, -c);
    return *this;
}

MultivectorPolynomial& MultivectorPolynomial::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, c] : terms_)
        c *= s;
    return *this;
}

MultivectorPolynomial operator*(const MultivectorPolynomial& p, const MultivectorPolynomial& q)
{
    if (p.m_ != q.m_)
        throw DimensionMismatch("polynomials over different R_m");
    MultivectorPolynomial r(p.m_);
    for (const auto& [a, u] : p.terms_)
        for (const auto& [b, v] : q.terms_)
            r.add_term(add_indices(a, b), geometric_product(u, v));
    return r;
}

MultivectorPolynomial MultivectorPolynomial::left_multiply(const Multivector<Rational>& c) const
{
    MultivectorPolynomial r(m_);
    for (const auto& [a, u] : terms_)
        r.add_term(a, geometric_product(c, u));
    return r;
}

MultivectorPolynomial MultivectorPolynomial::right_multiply(const Multivector<Rational>& c) const
{
    MultivectorPolynomial r(m_);
    for (const auto& [a, u] : terms_)
        r.add_term(a, geometric_product(u, c));
    return r;
}

MultivectorPolynomial MultivectorPolynomial::conjugate() const
{
    MultivectorPolynomial r(m_);
    for (const auto& [a, u] : terms_)
        r.terms_.emplace(a, hermitian_conjugate(u));
    return r;
}

Multivector<Rational> MultivectorPolynomial::evaluate(std::span<const Rational> x) const
{
    if (static_cast<int>(x.size()) != m_)
        throw DimensionMismatch("point dimension differs from m");
    Multivector<Rational> r(m_);
    for (const auto& [a, c] : terms_) {
        Rational w = 1;
        for (std::size_t j = 0; j < a.size(); ++j)
            w *= pow(x[j], static_cast<unsigned>(a[j]));
        r += c * w;
    }
    return r;
}

Multivector<double> MultivectorPolynomial::evaluate(std::span<const double> x) const
{
    return NumericPolynomial(*this, 1.0).evaluate(x);
}

std::string MultivectorPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        for (std::uint32_t b = 0; b < c.size(); ++b) {
            const Rational& v = c[Blade{b}];
            if (v == 0)
                continue;
            if (!first)
                out << " + ";
            first = false;
            out << "(" << cliffleg::to_string(v) << ")";
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a[j] > 0)
                    out << "*x" << (j + 1) << (a[j] > 1 ? "^" + std::to_string(a[j]) : "");
            if (b != 0)
                out << "*" << blade_name(Blade{b});
        }
    }
    return out.str();
}

MultivectorPolynomial dirac_on_polynomial(const MultivectorPolynomial& p)
{
    const int m = p.dimension();
    MultivectorPolynomial r(m);
    for (const auto& [a, u] : p.terms())
        for (int j = 1; j <= m; ++j) {
            const int e = a[static_cast<std::size_t>(j - 1)];
            if (e == 0)
                continue;
            MultiIndex b = a;
            --b[static_cast<std::size_t>(j - 1)];
            r.add_term(b, geometric_product(Multivector<Rational>::blade(m, Blade::generator(j)), u) * Rational(e));
        }
    return r;
}

MultivectorPolynomial euler_on_polynomial(const MultivectorPolynomial& p)
{
    MultivectorPolynomial r(p.dimension());
    for (const auto& [a, u] : p.terms())
        r.add_term(a, u * Rational(total_degree(a)));
    return r;
}

Multivector<Rational> sphere_integral(const MultivectorPolynomial& p)
{
    Multivector<Rational> r(p.dimension());
    for (const auto& [a, u] : p.terms()) {
        const PiMultiple mom = sphere_moment(a);
        if (mom.coeff != 0)
            r += u * mom.coeff;
    }
    return r;
}

Multivector<Rational> sphere_product_integral(const MultivectorPolynomial& p, const MultivectorPolynomial& q)
{
    if (p.dimension() != q.dimension())
        throw DimensionMismatch("polynomials over different R_m");
    const auto ps = sparse_terms(p), qs = sparse_terms(q);
    Multivector<Rational> r(p.dimension());
    for (const auto& u : ps)
        for (const auto& v : qs) {
            if (!all_even_sum(*u.exps, *v.exps))
                continue;
            accumulate_conj_product(r, sphere_moment(add_indices(*u.exps, *v.exps)).coeff, u, v);
        }
    return r;
}

NumericPolynomial::NumericPolynomial(const MultivectorPolynomial& p, double scale) : m_(p.dimension())
{
    for (const auto& [a, c] : p.terms()) {
        exps_.push_back(a);
        std::vector<std::pair<Blade, double>> nz;
        for (std::uint32_t b = 0; b < c.size(); ++b)
            if (c[Blade{b}] != 0)
                nz.emplace_back(Blade{b}, c[Blade{b}].get_d() * scale);
        coeffs_.push_back(std::move(nz));
    }
}

Multivector<double> NumericPolynomial::evaluate(std::span<const double> x) const
{
    if (static_cast<int>(x.size()) != m_)
        throw DimensionMismatch("point dimension differs from m");
    Multivector<double> r(m_);
    for (std::size_t t = 0; t < exps_.size(); ++t) {
        double w = 1.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            for (int e = 0; e < exps_[t][j]; ++e)
                w *= x[j];
        for (const auto& [b, v] : coeffs_[t])
            r[b] += w * v;
    }
    return r;
}

MonogenicPolynomial::MonogenicPolynomial(int k, MultivectorPolynomial unscaled, PiMultiple norm_sq)
    : k_(k), unscaled_(std::move(unscaled)), norm_sq_(std::move(norm_sq)),
      x_unscaled_(MultivectorPolynomial::vector_variable(unscaled_.dimension()) * unscaled_),
      numeric_(unscaled_, 1.0 / std::sqrt(norm_sq_.to_double()))
{
}

bool SphereInner::is_unit() const
{
    if (!raw.is_scalar())
        return false;
    const Rational& r = raw.scalar_part();
    return r * r * factor.square() == 1 && r * factor.sign() > 0;
}

Multivector<double> SphereInner::to_double() const
{
    Multivector<double> d = cliffleg::to_double(raw);
    d *= factor.to_double();
    return d;
}

SphereInner sphere_inner(const MonogenicPolynomial& a, const MonogenicPolynomial& b)
{
    Multivector<Rational> raw = sphere_product_integral(a.unscaled(), b.unscaled());
    return {std::move(raw), Surd(Rational(1), 1 / (a.norm_sq().coeff * b.norm_sq().coeff))};
}

SphereInner sphere_inner_theta(const MonogenicPolynomial& a, const MonogenicPolynomial& b)
{
    Multivector<Rational> raw = sphere_product_integral(a.unscaled(), b.x_unscaled());
    return {std::move(raw), Surd(Rational(1), 1 / (a.norm_sq().coeff * b.norm_sq().coeff))};
}

Integer monogenic_space_dim(int m, int k)
{
    if (m < 2 || k < 0)
        throw std::invalid_argument("monogenic_space_dim: need m >= 2, k >= 0");
    return binomial(static_cast<unsigned>(m + k - 2), static_cast<unsigned>(k));
}

MonogenicBasis m2_basis(int k)
{
    if (k < 0)
        throw std::invalid_argument("m2_basis: k must be >= 0");
    const auto e1 = Multivector<Rational>::blade(2, Blade::generator(1));
    const auto e2 = Multivector<Rational>::blade(2, Blade::generator(2));
    MultivectorPolynomial p(2);
    // (x_1 + i x_2)^k = sum_j binom(k, j) i^j x_1^{k-j} x_2^j
    for (int j = 0; j <= k; ++j) {
        const Rational c(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)));
        const int sign = ((j / 2) % 2 == 0) ? 1 : -1;
        const MultiIndex a{k - j, j};
        if (j % 2 == 0)
            p.add_term(a, e1 * Rational(c * sign));
        else
            p.add_term(a, e2 * Rational(-c * sign));
    }
    PiMultiple nrm = unscaled_norm(p);
    MonogenicBasis basis{2, k, {}};
    basis.elements.emplace_back(k, std::move(p), std::move(nrm));
    return basis;
}

MonogenicBasis build_basis(int m, int k)
{
    if (m < 2 || m > 6 || k < 0 || k > 8)
        throw std::invalid_argument("build_basis: supported range is 2 <= m <= 6, 0 <= k <= 8");

    // The Dirac operator maps the span of {x^a e_{A(a)}} with A(a)_j = c_j xor (a_j mod 2)
    // into itself (with c flipped), so the kernel can be found one reflection class at a time.
    std::uint32_t cls = (k % 2 == 1) ? 1u : 0u;
    auto blade_of = [&](const MultiIndex& a, std::uint32_t c) {
        std::uint32_t mask = c;
        for (int j = 0; j < m; ++j)
            if (a[static_cast<std::size_t>(j)] % 2 != 0)
                mask ^= std::uint32_t{1} << j;
        return Blade{mask};
    };

    const std::vector<MultiIndex> cols = monomials_of_degree(m, k);
    const std::vector<MultiIndex> rows = monomials_of_degree(m, k - 1);
    std::map<MultiIndex, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_of.emplace(rows[r], r);

    std::vector<std::vector<Rational>> mat(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Blade A = blade_of(cols[c], cls);
        for (int j = 1; j <= m; ++j) {
            const int e = cols[c][static_cast<std::size_t>(j - 1)];
            if (e == 0)
                continue;
            MultiIndex b = cols[c];
            --b[static_cast<std::size_t>(j - 1)];
            const int sign = blade_product(Blade::generator(j), A).sign;
            mat[row_of.at(b)][c] += Rational(sign * e);
        }
    }

    std::vector<MultivectorPolynomial> accepted;
    std::vector<Rational> norms;
    for (const auto& v : nullspace(std::move(mat), cols.size())) {
        MultivectorPolynomial p(m);
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (v[c] != 0)
                p.add_term(cols[c], Multivector<Rational>::blade(m, blade_of(cols[c], cls), v[c]));
        for (std::size_t j = 0; j < accepted.size(); ++j) {
            const Rational proj = sphere_scalar_inner(accepted[j], p) / norms[j];
            if (proj != 0)
                p -= accepted[j] * proj;
        }
        p = make_primitive(p);
        const Rational nrm = sphere_scalar_inner(p, p);
        if (nrm == 0)
            continue;
        accepted.push_back(std::move(p));
        norms.push_back(nrm);
    }

    const Integer dk = monogenic_space_dim(m, k);
    if (Integer(static_cast<long>(accepted.size())) != dk)
        throw std::logic_error("build_basis: kernel dimension differs from d_k");

    MonogenicBasis basis{m, k, {}};
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        if (!dirac_on_polynomial(accepted[i]).is_zero())
            throw std::logic_error("build_basis: constructed element is not monogenic");
        for (std::size_t j = 0; j < accepted.size(); ++j) {
            const Multivector<Rational> g = sphere_product_integral(accepted[i], accepted[j]);
            const Rational expected = (i == j) ? norms[i] : Rational(0);
            if (!g.is_scalar() || g.scalar_part() != expected)
                throw GramNotScalar(m, k, "sphere Gram entry (" + std::to_string(i) + ", " + std::to_string(j)
                                              + ") is not " + (i == j ? "a positive scalar" : "zero"));
        }
        basis.elements.emplace_back(k, accepted[i], PiMultiple{norms[i], sphere_pi_power(m)});
    }
    return basis;
}

std::shared_ptr<const MonogenicBasis> basis_for(int m, int k)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonogenicBasis>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{m, k}];
    if (!slot)
        slot = std::make_shared<const MonogenicBasis>(m == 2 ? m2_basis(k) : build_basis(m, k));
    return slot;
}

} // namespace cliffleg
