#include "cliffleg/analysis.hpp"
#include "cliffleg/checks.hpp"
#include "cliffleg/jacobi.hpp"
#include "cliffleg/legendre.hpp"
#include "cliffleg/monogenics.hpp"
#include "cliffleg/radial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace cliffleg;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::monostate, long, double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

std::string decimal(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0)
        v = 0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const Cell& c)
{
    struct V {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return decimal(v); }
        std::string operator()(const std::string& s) const
        {
            if (s.find_first_of(",\"\r\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char ch : s) {
                if (ch == '"')
                    out += '"';
                out += ch;
            }
            return out + "\"";
        }
    };
    return std::visit(V{}, c);
}

void write_csv(std::ostream& os, const Table& t)
{
    for (std::size_t j = 0; j < t.header.size(); ++j)
        os << (j ? "," : "") << csv_field(t.header[j]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? "," : "") << csv_field(row[j]);
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& t)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t j = 0; j < row.size(); ++j) {
            auto& slot = obj[t.header[j]];
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>)
                        slot = nullptr;
                    else if constexpr (std::is_same_v<T, double>)
                        slot = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(decimal(v));
                    else
                        slot = v;
                },
                row[j]);
        }
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
}

struct Config {
    std::optional<int> m, n, k, i;
    std::string alpha = "0";
    int res = 101;
    std::string format = "csv";
    std::string out;
    std::optional<double> tol;
    bool check = false;
    std::string suite;
    std::string kind;
    std::string component;
    std::string range = "0.05:5";
};

void in_range(const char* name, const std::optional<int>& v, int lo, int hi)
{
    if (v && (*v < lo || *v > hi))
        throw UsageError(std::string("--") + name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void validate(const Config& c)
{
    in_range("m", c.m, 2, 6);
    in_range("n", c.n, 0, 20);
    in_range("k", c.k, 0, 8);
    in_range("i", c.i, 1, 1 << 20);
    if (c.res < 2 || c.res > 2048)
        throw UsageError("--res must lie in [2, 2048]");
    if (c.tol && !(*c.tol > 0))
        throw UsageError("--tol must be positive");
}

std::string rational_cell(const Rational& r) { return to_string(r); }

void emit(const Config& c, const Table& t)
{
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!c.out.empty()) {
        file.open(c.out, std::ios::binary);
        if (!file)
            throw UsageError("cannot open " + c.out);
        os = &file;
    }
    if (c.format == "json")
        write_json(*os, t);
    else
        write_csv(*os, t);
}

int cmd_verify(const Config& c)
{
    if (!is_suite(c.suite))
        throw UsageError("unknown suite '" + c.suite + "'");
    VerifyOptions opts{c.m, c.tol};
    const auto results = run_suite(c.suite, opts);
    long failed = 0, skipped = 0;
    for (const auto& r : results) {
        if (r.skipped)
            ++skipped;
        else if (!r.passed)
            ++failed;
    }
    if (!c.out.empty() || c.format == "json") {
        Table t{{"check", "status", "max_residual", "detail"}, {}};
        for (const auto& r : results)
            t.rows.push_back({r.name, std::string(r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL")), r.max_residual, r.detail});
        emit(c, t);
    } else {
        for (const auto& r : results)
            std::cout << (r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL")) << "  " << r.name
                      << "  max_residual=" << decimal(r.max_residual) << "  " << r.detail << "\n";
        std::cout << results.size() - static_cast<std::size_t>(failed + skipped) << " passed, " << failed << " failed, "
                  << skipped << " skipped\n";
    }
    return failed == 0 ? exit_pass : exit_fail;
}

int cmd_table(const Config& c)
{
    const std::vector<int> ms = c.m ? std::vector<int>{*c.m} : std::vector<int>{2, 3, 4, 5, 6};
    const int n_max = c.n.value_or(6);
    const int k_max = c.k.value_or(4);
    Table t;
    if (c.kind == "dims") {
        t.header = {"m", "k", "dim"};
        for (int m : ms)
            for (int k = 0; k <= k_max; ++k)
                t.rows.push_back({long(m), long(k), monogenic_space_dim(m, k).get_si()});
    } else if (c.kind == "norms") {
        t.header = {"n", "k", "m", "norm_sq", "norm_sq_decimal"};
        for (int m : ms)
            for (int k = 0; k <= k_max; ++k)
                for (int n = 0; n <= n_max; ++n) {
                    const Rational v = norm_sq(n, k, m);
                    t.rows.push_back({long(n), long(k), long(m), rational_cell(v), v.get_d()});
                }
    } else if (c.kind == "eigenvalues") {
        Rational alpha;
        try {
            alpha = parse_rational(c.alpha);
        } catch (const std::exception&) {
            throw UsageError("--alpha must be a rational p or p/q");
        }
        t.header = {"alpha", "n", "m", "k", "eigenvalue", "eigenvalue_decimal"};
        for (int m : ms)
            for (int k = 0; k <= k_max; ++k)
                for (int n = 0; n <= n_max; ++n) {
                    const Rational v = eigenvalue_C(alpha, n, m, k);
                    t.rows.push_back({rational_cell(alpha), long(n), long(m), long(k), rational_cell(v), v.get_d()});
                }
    } else if (c.kind == "bonnet") {
        t.header = {"n", "k", "m", "a", "a_decimal", "b", "b_decimal", "a_normalized", "a_normalized_decimal",
                    "b_normalized", "b_normalized_decimal"};
        for (int m : ms)
            for (int k = 0; k <= k_max; ++k)
                for (int n = 0; n <= n_max; ++n) {
                    const BonnetPair p = n % 2 == 0 ? bonnet_even(n / 2, k, m) : bonnet_odd(n / 2, k, m);
                    const SurdPair s = bonnet_normalized(n, k, m);
                    t.rows.push_back({long(n), long(k), long(m), rational_cell(p.alpha), p.alpha.get_d(),
                                      rational_cell(p.beta), p.beta.get_d(), s.A.to_string(), s.A.to_double(),
                                      s.B.to_string(), s.B.to_double()});
                }
    } else {
        throw UsageError("unknown table '" + c.kind + "' (norms, eigenvalues, bonnet, dims)");
    }
    emit(c, t);
    return exit_pass;
}

int cmd_zeros(const Config& c)
{
    const int n = c.n.value_or(2), k = c.k.value_or(0), m = c.m.value_or(2);
    const auto radii = zero_radii(n, k, m);
    std::string verdict;
    if (n >= 1)
        verdict = cyclic_interlacing({zero_radii(n - 1, k, m), radii, zero_radii(n + 1, k, m)}) ? "true" : "false";
    Table t{{"n", "k", "m", "index", "radius", "interlaced"}, {}};
    for (std::size_t j = 0; j < radii.size(); ++j)
        t.rows.push_back({long(n), long(k), long(m), long(j + 1), radii[j], verdict});
    emit(c, t);
    return exit_pass;
}

std::optional<Blade> parse_component(const std::string& s)
{
    if (s == "1" || s == "scalar")
        return Blade{0};
    if (s == "e1")
        return Blade::generator(1);
    if (s == "e2")
        return Blade::generator(2);
    if (s == "e12")
        return Blade{3};
    return std::nullopt;
}

int cmd_plotgrid(const Config& c)
{
    if (c.m && *c.m != 2)
        throw UsageError("plotgrid is defined for m = 2 only");
    const int n = c.n.value_or(0), k = c.k.value_or(1);
    const bool even = n % 2 == 0;
    const std::string comp = c.component.empty() ? (even ? "e1" : "1") : c.component;
    const auto blade = parse_component(comp);
    if (!blade)
        throw UsageError("unknown component '" + comp + "' (1, e1, e2, e12)");
    if (even != (blade->grade() == 1))
        throw UsageError("component " + comp + " vanishes identically for n = " + std::to_string(n)
                         + (even ? " (even n has e1, e2 parts)" : " (odd n has scalar, e12 parts)"));
    const auto p = normalized_legendre(n, 2, k);
    Table t{{"x1", "x2", "value"}, {}};
    const int r = c.res;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            const double x1 = -1 + 2.0 * b / (r - 1), x2 = -1 + 2.0 * a / (r - 1);
            const double pt[2] = {x1, x2};
            Cell v;
            if (x1 * x1 + x2 * x2 <= 1)
                v = p.evaluate(pt)[*blade];
            t.rows.push_back({x1, x2, v});
        }
    emit(c, t);
    return exit_pass;
}

std::pair<double, double> parse_interval(const std::string& s)
{
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw UsageError("--range must be LO:HI");
    try {
        std::size_t used = 0;
        const std::string lo_s = s.substr(0, colon), hi_s = s.substr(colon + 1);
        const double lo = std::stod(lo_s, &used);
        if (used != lo_s.size())
            throw UsageError("bad --range");
        const double hi = std::stod(hi_s, &used);
        if (used != hi_s.size())
            throw UsageError("bad --range");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--range must be LO:HI with numeric bounds");
    }
}

int cmd_ft(const Config& c)
{
    const int n = c.n.value_or(0), k = c.k.value_or(0), m = c.m.value_or(2);
    if (m != 2 && m != 3)
        throw UsageError("ft is defined for m in {2, 3}");
    const auto [lo, hi] = parse_interval(c.range);
    if (!(lo > 0 && hi >= lo))
        throw UsageError("--range must satisfy 0 < LO <= HI; the grid may not contain 0");
    if (c.check && hi > 10)
        throw UsageError("--check supports |xi| <= 10");
    const int i = c.i.value_or(1);
    const int dk = static_cast<int>(basis_for(m, k)->size());
    if (i > dk)
        throw UsageError("--i exceeds the basis size " + std::to_string(dk));
    const auto p = normalized_legendre(n, m, k, i);
    const std::size_t blades = std::size_t{1} << m;

    Table t;
    t.header = {"rho", "profile"};
    for (std::size_t b = 0; b < blades; ++b) {
        t.header.push_back("re_" + blade_name(Blade{static_cast<std::uint32_t>(b)}));
        t.header.push_back("im_" + blade_name(Blade{static_cast<std::uint32_t>(b)}));
    }
    if (c.check) {
        for (std::size_t b = 0; b < blades; ++b) {
            t.header.push_back("quad_re_" + blade_name(Blade{static_cast<std::uint32_t>(b)}));
            t.header.push_back("quad_im_" + blade_name(Blade{static_cast<std::uint32_t>(b)}));
        }
        t.header.push_back("relative_error");
    }
    std::optional<QuadratureRule> rule;
    if (c.check)
        rule = QuadratureRule::oscillatory(m, n + k, hi);
    const BesselOrder nu{2 * k + m + 2 * n};
    const double lead = std::ldexp(std::tgamma(n + 1.0), n) * p.scale.to_double();
    const int steps = c.res;
    for (int s = 0; s < steps; ++s) {
        const double rho = steps == 1 ? lo : lo + (hi - lo) * s / (steps - 1);
        // sampled along e_1
        std::vector<double> xi(static_cast<std::size_t>(m), 0.0);
        xi[0] = rho;
        const auto ft = fourier_transform(p, xi);
        std::vector<Cell> row{rho, lead * bessel_j(nu, 2 * std::numbers::pi * rho) / std::pow(rho, m / 2.0)};
        for (std::size_t b = 0; b < blades; ++b) {
            row.emplace_back(ft.re[Blade{static_cast<std::uint32_t>(b)}]);
            row.emplace_back(ft.im[Blade{static_cast<std::uint32_t>(b)}]);
        }
        if (c.check) {
            const auto q = numeric_fourier(p, xi, *rule);
            for (std::size_t b = 0; b < blades; ++b) {
                row.emplace_back(q.re[Blade{static_cast<std::uint32_t>(b)}]);
                row.emplace_back(q.im[Blade{static_cast<std::uint32_t>(b)}]);
            }
            const double scale = std::sqrt(norm_sq(ft));
            row.emplace_back(std::sqrt(norm_sq(ft - q)) / std::max(scale, 1e-300));
        }
        t.rows.push_back(std::move(row));
    }
    emit(c, t);
    return exit_pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Clifford-Gegenbauer and Clifford-Legendre polynomials: verification and tables", "cliffleg"};
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* s) {
        s->add_option("--m", c.m, "dimension m (2..6)");
        s->add_option("--n", c.n, "polynomial degree n, or n_max for tables");
        s->add_option("--k", c.k, "monogenic degree k, or k_max for tables");
        s->add_option("--alpha", c.alpha, "Gegenbauer parameter as p or p/q");
        s->add_option("--i", c.i, "basis index of Y_k (1-based)");
        s->add_option("--res", c.res, "grid resolution");
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
        s->add_option("--out", c.out, "write output to PATH");
        s->add_option("--tol", c.tol, "tolerance override for floating-point checks");
        s->add_flag("--check", c.check, "append quadrature oracle columns (ft)");
    };

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", c.suite, "algebra, radial, recurrence, bonnet, jacobi, fourier, degeneracy or all")->required();
    common(verify);
    auto* table = app.add_subcommand("table", "coefficient tables");
    table->add_option("kind", c.kind, "norms, eigenvalues, bonnet or dims")->required();
    common(table);
    auto* zeros = app.add_subcommand("zeros", "radii of the vanishing spheres");
    common(zeros);
    auto* plot = app.add_subcommand("plotgrid", "m = 2 evaluation grid of one blade component");
    common(plot);
    plot->add_option("--component", c.component, "blade: 1, e1, e2 or e12");
    auto* ft = app.add_subcommand("ft", "radial Fourier profile");
    common(ft);
    ft->add_option("--range", c.range, "|xi| interval LO:HI, excluding 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        validate(c);
        if (verify->parsed())
            return cmd_verify(c);
        if (table->parsed())
            return cmd_table(c);
        if (zeros->parsed())
            return cmd_zeros(c);
        if (plot->parsed())
            return cmd_plotgrid(c);
        return cmd_ft(c);
    } catch (const UsageError& e) {
        std::cerr << "cliffleg: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cliffleg: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "cliffleg: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "cliffleg: error: " << e.what() << "\n";
        return exit_fail;
    }
}
