// hexatile: count, verify, fit, render and bench from the command line.
//
// Exit codes: 0 success, 1 usage error or unsupported request,
// 2 mathematical disagreement (methods differ, a check fails, a fit is
// inconsistent).

#include "hexatile/formulas.hpp"
#include "hexatile/identities.hpp"
#include "hexatile/lgv.hpp"
#include "hexatile/oracle.hpp"
#include "hexatile/qfit.hpp"
#include "hexatile/render.hpp"
#include "hexatile/schur.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace hexatile;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_disagree = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecArgs {
    long a = 0, b = 0, c = 0, d = 0, p = 0;
    std::string parity = "even";

    void add(CLI::App* cmd)
    {
        cmd->add_option("--a", a, "side a")->required();
        cmd->add_option("--b", b, "side b")->required();
        cmd->add_option("--c", c, "side c")->required();
        cmd->add_option("--d", d, "intrusion length")->default_val(0);
        cmd->add_option("--p", p, "intrusion position")->default_val(0);
        cmd->add_option("--parity", parity, "even or odd")->default_val("even")->check(CLI::IsMember({"even", "odd"}));
    }

    HexSpec spec() const { return HexSpec{a, b, c, d, p, parse_parity(parity)}; }

    json to_json() const { return {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"p", p}, {"parity", parity}}; }
};

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct MethodValue {
    BigInt value;
    bool is_signed = true; // false for formulas that count tilings only
};

MethodValue evaluate(const std::string& method, const HexSpec& s)
{
    const bool even = s.parity == Parity::Even;
    auto need_even = [&] {
        if (!even)
            throw usage_error(method + " applies to even intrusions only");
    };
    if (method == "det")
        return {count(s, DetKernel::Bareiss).value};
    if (method == "modular")
        return {count(s, DetKernel::Modular).value};
    if (method == "condense")
        return {even ? even_count_by_condensation(s.a, s.b, s.c, s.d, s.p)
                     : odd_count_by_condensation(s.a, s.b, s.c, s.d, s.p)};
    if (method == "oracle")
        return {signed_count(s)};
    if (method.rfind("formula:", 0) != 0)
        throw usage_error("unknown method '" + method + "'");
    const std::string f = method.substr(8);
    if (f == "macmahon") {
        if (s.d != 0)
            throw usage_error("formula:macmahon needs d = 0");
        return {macmahon(s.a, s.b, s.c)};
    }
    if (f == "byun_even") {
        need_even();
        if (s.a != 2 * s.p)
            throw usage_error("formula:byun_even needs a = 2p");
        return {byun_even(s.p, s.b, s.c, s.d)};
    }
    if (f == "byun_odd") {
        if (even || s.a != 2 * s.p + 1)
            throw usage_error("formula:byun_odd needs an odd intrusion with a = 2p+1");
        return {byun_odd(s.p, s.b, s.c, s.d), false};
    }
    if (f == "reflection_a1") {
        need_even();
        if (s.a != 1)
            throw usage_error("formula:reflection_a1 needs a = 1");
        return {count_a1_reflection(s.b, s.c, s.d, s.p)};
    }
    if (f == "p1md_simple" || f == "p1md_sum" || f == "p1md_polynomial") {
        need_even();
        if (s.p != 1 - s.d)
            throw usage_error("formula:" + f + " needs p = 1-d");
        if (f == "p1md_simple")
            return {p_one_minus_d_simple(s.a, s.b, s.c, s.d)};
        return {p_one_minus_d_alt(s.a, s.b, s.c, s.d, f == "p1md_sum" ? P1mdVariant::Sum : P1mdVariant::Polynomial)};
    }
    if (f == "d1_corollary") {
        need_even();
        if (s.d != 1 || s.p != 0)
            throw usage_error("formula:d1_corollary needs d = 1, p = 0");
        return {d1_corollary(s.a, s.b, s.c)};
    }
    if (f == "ansatz") {
        need_even();
        return {to_integer(prefactor_P(s.a, s.b, s.c, s.d, s.p) * q_known(s.a, s.b, s.c, s.d, s.p), "ansatz")};
    }
    if (f == "via_F") {
        need_even();
        return {count_via_F(s.a, s.b, s.c, s.d, s.p)};
    }
    throw usage_error("unknown formula '" + f + "'");
}

int cmd_count(const SpecArgs& args, const std::vector<std::string>& methods)
{
    const HexSpec s = args.spec();
    s.validate();
    std::vector<MethodValue> values;
    for (const auto& m : methods) {
        const auto t0 = std::chrono::steady_clock::now();
        MethodValue v = evaluate(m, s);
        const double elapsed = ms_since(t0);
        std::cout << json{{"spec", args.to_json()},
                          {"method", m},
                          {"value", v.value.get_str()},
                          {"sign", sgn(v.value)},
                          {"matrix_dim", s.dimension()},
                          {"elapsed_ms", elapsed}}
                         .dump()
                  << "\n";
        values.push_back(std::move(v));
    }
    for (const auto& v : values) {
        if (abs(v.value) != abs(values.front().value))
            return exit_disagree;
    }
    const MethodValue* ref = nullptr;
    for (const auto& v : values) {
        if (!v.is_signed)
            continue;
        if (ref && ref->value != v.value)
            return exit_disagree;
        ref = &v;
    }
    return exit_ok;
}

int cmd_verify(const std::string& suite, const Ranges& ranges)
{
    const IdentityReport rep = verify_identities(suite, ranges);
    json j = rep.to_json();
    j["ranges"] = {{"amax", ranges.amax}, {"bmax", ranges.bmax}, {"cmax", ranges.cmax}, {"dmax", ranges.dmax}};
    std::cout << j.dump() << "\n";
    return rep.passed() ? exit_ok : exit_disagree;
}

int cmd_fit(long d, std::optional<int> degree, std::string out)
{
    if (d < 1)
        throw usage_error("fit needs d >= 1");
    FitOptions opt;
    opt.degree = degree;
    const FitResult r = fit(d, opt);
    if (out.empty())
        out = "q_d" + std::to_string(d) + ".json";
    std::ofstream(out) << to_json(r.q, d).dump() << "\n";
    std::cout << "Q(a,b,c," << d << ",p) = " << r.q.to_string() << "\n";
    for (const auto& line : r.log)
        std::cout << "# " << line << "\n";
    std::cout << "# holdout " << r.validation.checked - r.validation.failures << "/" << r.validation.checked
              << " exact\n";
    for (const auto& cd : coefficient_degrees(r.q))
        std::cout << "# coefficient of b^" << cd.i << " c^" << cd.j << ": degree " << cd.deg_a << " in a, "
                  << cd.deg_p << " in p\n";
    std::cout << "# Q(a,b,c,d,p) == Q(p,c,b,d,p): " << (swapped_argument_pattern_holds(r.q) ? "yes" : "no") << "\n";
    if (d == 3) {
        size_t agree = 0, total = 0;
        for (long a = 0; a <= 6; ++a)
            for (long p = 0; p <= a; ++p, ++total)
                if (r.q.eval(a, d + 1, d + p + 1, p) == q_printed_d3(a))
                    ++agree;
        std::cout << "# typeset d=3 expression agrees at " << agree << "/" << total
                  << " points with b = d+1, c = d+p+1\n";
    }
    std::cout << "# wrote " << out << "\n";
    return r.validation.passed() ? exit_ok : exit_disagree;
}

int cmd_render(const SpecArgs& args, bool with_tiling, const std::string& out)
{
    const HexSpec s = args.spec();
    s.validate();
    std::optional<PathFamily> family;
    if (with_tiling) {
        family = first_tiling(s);
        if (!family)
            throw usage_error("no tiling exists for " + s.describe());
    }
    std::ofstream(out) << render_svg(s, family);
    std::cout << json{{"spec", args.to_json()}, {"out", out}, {"with_tiling", with_tiling}}.dump() << "\n";
    return exit_ok;
}

int cmd_bench(const std::vector<long>& dims, const std::string& kernel, const std::string& csv)
{
    std::ofstream file;
    if (!csv.empty())
        file.open(csv);
    std::ostream& os = csv.empty() ? std::cout : file;
    os << "dim,kernel,elapsed_ms,result_digits\n";
    int rc = exit_ok;
    for (long n : dims) {
        if (n < 0)
            throw usage_error("dims must be nonnegative");
        const IntMatrix m = build_matrix(even_spec(n, n, n, 0, 0));
        const BigInt expect = macmahon(n, n, n);
        std::vector<DetKernel> ks;
        if (kernel == "bareiss" || kernel == "both")
            ks.push_back(DetKernel::Bareiss);
        if (kernel == "modular" || kernel == "both")
            ks.push_back(DetKernel::Modular);
        for (DetKernel k : ks) {
            const auto t0 = std::chrono::steady_clock::now();
            const BigInt v = determinant(m, k);
            const double elapsed = ms_since(t0);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f", elapsed);
            os << n << "," << to_string(k) << "," << buf << "," << BigInt(abs(v)).get_str().size() << "\n";
            if (v != expect) {
                std::cerr << "kernel " << to_string(k) << " disagrees with the product at n=" << n << "\n";
                rc = exit_disagree;
            }
        }
    }
    return rc;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lozenge tilings of hexagons with intrusions"};
    app.require_subcommand(1);

    SpecArgs count_args;
    std::vector<std::string> methods;
    auto* count_cmd = app.add_subcommand("count", "count tilings by one or more methods");
    count_args.add(count_cmd);
    count_cmd->add_option("--method", methods,
                          "det | modular | condense | oracle | formula:<macmahon|byun_even|byun_odd|reflection_a1|"
                          "p1md_simple|p1md_sum|p1md_polynomial|d1_corollary|ansatz|via_F> (repeatable)")
        ->default_val(std::vector<std::string>{"det"});

    std::string suite;
    Ranges ranges;
    auto* verify_cmd = app.add_subcommand("verify", "run identity sweeps");
    std::vector<std::string> suites = identity_suites();
    suites.push_back("all");
    verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
    verify_cmd->add_option("--amax", ranges.amax)->default_val(ranges.amax);
    verify_cmd->add_option("--bmax", ranges.bmax)->default_val(ranges.bmax);
    verify_cmd->add_option("--cmax", ranges.cmax)->default_val(ranges.cmax);
    verify_cmd->add_option("--dmax", ranges.dmax)->default_val(ranges.dmax);

    long fit_d = 1;
    std::optional<int> fit_degree;
    std::string fit_out;
    auto* fit_cmd = app.add_subcommand("fit", "recover the polynomial Q for fixed d");
    fit_cmd->add_option("--d", fit_d, "intrusion length")->required();
    fit_cmd->add_option("--degree", fit_degree, "fixed total degree bound");
    fit_cmd->add_option("--out", fit_out, "JSON output path (default q_d<d>.json)");

    SpecArgs render_args;
    bool with_tiling = false;
    std::string render_out = "hexagon.svg";
    auto* render_cmd = app.add_subcommand("render", "draw a damaged hexagon as SVG");
    render_args.add(render_cmd);
    render_cmd->add_flag("--with-tiling", with_tiling, "draw one tiling");
    render_cmd->add_option("--out", render_out)->default_val(render_out);

    std::vector<long> dims{10, 20, 30};
    std::string kernel = "both";
    std::string csv;
    auto* bench_cmd = app.add_subcommand("bench", "time determinant kernels on a=b=c=n, d=0");
    bench_cmd->add_option("--dims", dims)->delimiter(',')->default_val(dims);
    bench_cmd->add_option("--kernel", kernel)->default_val(kernel)->check(CLI::IsMember({"bareiss", "modular", "both"}));
    bench_cmd->add_option("--csv", csv, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*count_cmd)
            return cmd_count(count_args, methods);
        if (*verify_cmd)
            return cmd_verify(suite, ranges);
        if (*fit_cmd)
            return cmd_fit(fit_d, fit_degree, fit_out);
        if (*render_cmd)
            return cmd_render(render_args, with_tiling, render_out);
        if (*bench_cmd)
            return cmd_bench(dims, kernel, csv);
    } catch (const fit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_disagree;
    } catch (const integrality_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_disagree;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
