#pragma once

// Grid sweeps over every identity the library relies on.  Each check
// evaluates both sides exactly; parameter tuples where a side has a pole or
// leaves its validity window are counted as skipped, not failed.

#include "hexatile/formulas.hpp"
#include "hexatile/lgv.hpp"
#include "hexatile/parallel.hpp"
#include "hexatile/qfit.hpp"
#include "hexatile/schur.hpp"

#include <json.hpp>

#include <functional>

namespace hexatile {

struct Ranges {
    long amax = 4;
    long bmax = 5;
    long cmax = 5;
    long dmax = 3;
};

struct IdentityCheck {
    std::string name;
    std::string grid;
    size_t cases = 0;
    size_t skipped = 0;
    size_t failures = 0;
    std::vector<std::string> examples; // first failing tuples

    bool passed() const { return failures == 0; }
};

struct IdentityReport {
    std::string suite;
    std::vector<IdentityCheck> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
    }

    const IdentityCheck* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name},
                           {"grid", c.grid},
                           {"cases", c.cases},
                           {"skipped", c.skipped},
                           {"failures", c.failures},
                           {"passed", c.passed()},
                           {"examples", c.examples}});
        return {{"suite", suite}, {"passed", passed()}, {"checks", arr}};
    }
};

using Tuple = std::array<long, 5>;

namespace detail {

inline std::string tuple_str(const Tuple& t, size_t n)
{
    std::string s = "(";
    for (size_t i = 0; i < n; ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

/// Runs fn over all tuples.  fn returns true on success; pole_error and
/// validity_error mark the tuple as skipped; any other exception is a
/// failure.
inline IdentityCheck run_check(const std::string& name, const std::string& grid, const std::vector<Tuple>& cases,
                               size_t arity, const std::function<bool(const Tuple&)>& fn, unsigned threads)
{
    enum : char { Ok, Fail, Skip };
    std::vector<char> status(cases.size(), Ok);
    std::vector<std::string> why(cases.size());
    parallel_for(
        cases.size(),
        [&](size_t i) {
            try {
                status[i] = fn(cases[i]) ? Ok : Fail;
            } catch (const pole_error&) {
                status[i] = Skip;
            } catch (const validity_error&) {
                status[i] = Skip;
            } catch (const std::exception& e) {
                status[i] = Fail;
                why[i] = e.what();
            }
        },
        threads);
    IdentityCheck c{name, grid, 0, 0, 0, {}};
    for (size_t i = 0; i < cases.size(); ++i) {
        if (status[i] == Skip) {
            ++c.skipped;
            continue;
        }
        ++c.cases;
        if (status[i] == Fail) {
            ++c.failures;
            if (c.examples.size() < 5)
                c.examples.push_back(tuple_str(cases[i], arity) + (why[i].empty() ? "" : " " + why[i]));
        }
    }
    return c;
}

inline std::string range(const char* v, long lo, long hi)
{
    return std::string(v) + " in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

inline BigInt E(long a, long b, long c, long d, long p) { return lgv_determinant(even_spec(a, b, c, d, p)); }
inline BigInt O(long a, long b, long c, long d, long p) { return lgv_determinant(odd_spec(a, b, c, d, p)); }

inline std::vector<Tuple> abc_grid(const Ranges& r, long amin = 0, long bmin = 0, long cmin = 0)
{
    std::vector<Tuple> out;
    for (long a = amin; a <= r.amax; ++a)
        for (long b = bmin; b <= r.bmax; ++b)
            for (long c = cmin; c <= r.cmax; ++c)
                out.push_back({a, b, c, 0, 0});
    return out;
}

/// (a,b,c,d,p) with p in [plo(a,d), phi(a,d)].
inline std::vector<Tuple> abcdp_grid(const Ranges& r, long amin, long dmin, const std::function<long(long, long)>& plo,
                                     const std::function<long(long, long)>& phi, long bmin = 0, long cmin = 0)
{
    std::vector<Tuple> out;
    for (long a = amin; a <= r.amax; ++a)
        for (long b = bmin; b <= r.bmax; ++b)
            for (long c = cmin; c <= r.cmax; ++c)
                for (long d = dmin; d <= r.dmax; ++d)
                    for (long p = plo(a, d); p <= phi(a, d); ++p)
                        out.push_back({a, b, c, d, p});
    return out;
}

inline std::string abc_desc(const Ranges& r, long amin = 0, long bmin = 0, long cmin = 0)
{
    return range("a", amin, r.amax) + ", " + range("b", bmin, r.bmax) + ", " + range("c", cmin, r.cmax);
}

// ---------------------------------------------------------------------------

inline void suite_macmahon(IdentityReport& rep, const Ranges& r, unsigned th)
{
    const auto g = abc_grid(r);
    const auto desc = abc_desc(r);
    rep.checks.push_back(run_check("det_vs_product", desc, g, 3, [](const Tuple& t) {
        return E(t[0], t[1], t[2], 0, 0) == macmahon(t[0], t[1], t[2]);
    }, th));
    rep.checks.push_back(run_check("triple_product", desc, g, 3, [](const Tuple& t) {
        return macmahon_triple_product(t[0], t[1], t[2]) == Rational(macmahon(t[0], t[1], t[2]));
    }, th));
    rep.checks.push_back(run_check("symmetry_bc", desc, g, 3, [](const Tuple& t) {
        return macmahon(t[0], t[1], t[2]) == macmahon(t[0], t[2], t[1]);
    }, th));
    const auto gp = abcdp_grid(r, 0, 0, [](long, long) { return -1L; }, [](long a, long) { return a + 1; });
    rep.checks.push_back(run_check("general_factor_d0", desc + ", p in [-1,a+1]", gp, 5, [](const Tuple& t) {
        return t[3] != 0 || general_factor(t[0], t[1], t[2], 0, t[4]) == 1;
    }, th));
    const auto gr = abcdp_grid(r, 2, 0, [](long, long d) { return -d; }, [](long a, long d) { return a + d; }, 1, 1);
    const auto gdesc = abc_desc(r, 2, 1, 1) + ", " + range("d", 0, r.dmax) + ", p in [-d,a+d]";
    rep.checks.push_back(run_check("general_ansatz_recursion", gdesc, gr, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        auto G = [d = d](long aa, long bb, long cc, long pp) { return general_factor(aa, bb, cc, d, pp); };
        return Rational(a - 1) * Rational(a + b + c - 1) * G(a - 2, b, c, p - 1) * G(a, b, c, p) ==
               Rational((a + b - 1) * (a + c - 1)) * G(a - 1, b, c, p - 1) * G(a - 1, b, c, p) -
                   Rational(b * c) * G(a - 1, b - 1, c + 1, p) * G(a - 1, b + 1, c - 1, p - 1);
    }, th));
    rep.checks.push_back(run_check("general_recursion", gdesc, gr, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        auto G = [d = d](long aa, long bb, long cc, long pp) { return general_factor(aa, bb, cc, d, pp); };
        const Rational den = Rational(a - 1) * Rational(a + b + c - 1) * G(a - 2, b, c, p - 1);
        const Rational num = Rational((a + b - 1) * (a + c - 1)) * G(a - 1, b, c, p - 1) * G(a - 1, b, c, p) -
                             Rational(b * c) * G(a - 1, b - 1, c + 1, p) * G(a - 1, b + 1, c - 1, p - 1);
        return G(a, b, c, p) == checked_div(num, den);
    }, th));
}

inline void suite_byun(IdentityReport& rep, const Ranges& r, unsigned th)
{
    std::vector<Tuple> ge, go;
    for (long p = 0; 2 * p <= r.amax; ++p)
        for (long b = 0; b <= r.bmax; ++b)
            for (long c = 0; c <= r.cmax; ++c)
                for (long d = 1; d <= std::min(b, c); ++d) {
                    ge.push_back({p, b, c, d, 0});
                    if (2 * p + 1 <= r.amax)
                        go.push_back({p, b, c, d, 0});
                }
    const std::string desc = "2p <= " + std::to_string(r.amax) + ", " + range("b", 0, r.bmax) + ", " +
                             range("c", 0, r.cmax) + ", 1 <= d <= min(b,c)";
    rep.checks.push_back(run_check("byun_even", desc, ge, 4, [](const Tuple& t) {
        return byun_even(t[0], t[1], t[2], t[3]) == E(2 * t[0], t[1], t[2], t[3], t[0]);
    }, th));
    rep.checks.push_back(run_check("byun_odd", "2p+1 <= " + std::to_string(r.amax) + desc.substr(desc.find(',')), go, 4,
                                   [](const Tuple& t) {
                                       return byun_odd(t[0], t[1], t[2], t[3]) ==
                                              abs(O(2 * t[0] + 1, t[1], t[2], t[3], t[0]));
                                   }, th));
}

inline void suite_p1md(IdentityReport& rep, const Ranges& r, unsigned th)
{
    std::vector<Tuple> g;
    for (long a = 0; a <= r.amax; ++a)
        for (long b = 0; b <= r.bmax; ++b)
            for (long c = 0; c <= r.cmax; ++c)
                for (long d = 1; d <= r.dmax; ++d)
                    g.push_back({a, b, c, d, 0});
    const std::string desc = abc_desc(r) + ", " + range("d", 1, r.dmax);
    auto target = [](const Tuple& t) { return E(t[0], t[1], t[2], t[3], 1 - t[3]); };
    rep.checks.push_back(run_check("p1md_simple", desc, g, 4, [&](const Tuple& t) {
        return p_one_minus_d_simple(t[0], t[1], t[2], t[3]) == target(t);
    }, th));
    rep.checks.push_back(run_check("p1md_damage_free_branch", desc + ", 2d >= b+2", g, 4, [](const Tuple& t) {
        if (2 * t[3] < t[1] + 2)
            throw validity_error("branch not taken");
        return p_one_minus_d_simple(t[0], t[1], t[2], t[3]) == macmahon(t[0], t[1], t[2]);
    }, th));
    rep.checks.push_back(run_check("p1md_sum", desc + ", d <= ceil(b/2)", g, 4, [&](const Tuple& t) {
        return p_one_minus_d_alt(t[0], t[1], t[2], t[3], P1mdVariant::Sum) == target(t);
    }, th));
    rep.checks.push_back(run_check("p1md_polynomial", desc + ", b > d", g, 4, [&](const Tuple& t) {
        return p_one_minus_d_alt(t[0], t[1], t[2], t[3], P1mdVariant::Polynomial) == target(t);
    }, th));
    rep.checks.push_back(run_check("p1md_aux", desc + ", a >= 1", g, 4, [&](const Tuple& t) {
        return p_one_minus_d_aux(t[0], t[1], t[2], t[3]) == Rational(target(t));
    }, th));
    rep.checks.push_back(run_check("p1md_d1_bracket", abc_desc(r, 1, 0, 0), abc_grid(r, 1), 3, [](const Tuple& t) {
        const auto [a, b, c, d_, p_] = t;
        for (long k = 0; k < a; ++k) {
            const long n = a + c - k - 1;
            const BigInt full = binom(b + c, n);
            if (full == 0 || n == 0)
                throw pole_error("bracket");
            if (make_rational(full - binom(b + c - 1, n), full * n) != make_rational(1, b + c))
                return false;
        }
        return true;
    }, th));
    rep.checks.push_back(run_check("f_sum_boundary", desc, g, 4, [](const Tuple& t) {
        const auto [a, b, c, d, p_] = t;
        if (f_sum(0, b, c, d) != 0)
            return false;
        return f_sum(1, b, c, d) == factorial(2 * d - 2);
    }, th));
    rep.checks.push_back(run_check("f_recursion", desc + ", a >= 1", g, 4, [](const Tuple& t) {
        const auto [a, b, c, d, p_] = t;
        if (a < 1)
            throw validity_error("a >= 1");
        auto f = [d = d](long aa, long bb, long cc) { return f_sum(aa, bb, cc, d); };
        return (a - 1) * f(a, b, c) == (a + b - 1) * (a + c - 1) * f(a - 1, b, c) - c * (b - 2 * d + 1) * f(a - 1, b - 1, c + 1);
    }, th));
    rep.checks.push_back(run_check("f_recursion2", desc + ", a >= 1", g, 4, [](const Tuple& t) {
        const auto [a, b, c, d, p_] = t;
        if (a < 1)
            throw validity_error("a >= 1");
        auto f = [d = d](long aa, long bb, long cc) { return f_sum(aa, bb, cc, d); };
        return (a - 1) * f(a, b, c) == (a - 1) * (a + b + c - 1) * f(a - 1, b, c) +
                                           b * c * (f(a - 1, b, c) - f(a - 1, b - 1, c + 1)) +
                                           c * (2 * d - 1) * f(a - 1, b - 1, c + 1);
    }, th));
    rep.checks.push_back(run_check("f_zeilberger", desc + ", a,c >= 1", g, 4, [](const Tuple& t) {
        const auto [a, b, c, d, p_] = t;
        if (a < 1 || c < 1)
            throw validity_error("a,c >= 1");
        Rational s(0);
        for (long k = 1; k < a; ++k)
            s += pochhammer(b + c + k, a - k - 1) * pochhammer(c, k - 1) * pochhammer(k, 2 * d - 2) *
                 (Rational(b * c) * (1 - make_rational(c + k - 1, c)) + Rational((2 * d - 1) * (c + k - 1)));
        return s == Rational(a - 1) * pochhammer(c, a - 1) * pochhammer(a, 2 * d - 2);
    }, th));
    rep.checks.push_back(run_check("f_d_recursion", desc + ", d >= 2", g, 4, [](const Tuple& t) {
        const auto [a, b, c, d, p_] = t;
        if (d < 2)
            throw validity_error("d >= 2");
        const Rational lhs = Rational((b - 2 * d + 2) * (b - 2 * d + 3)) * Rational(f_sum(a, b, c, d));
        const Rational rhs = Rational(2 * (d - 1) * (2 * d - 3) * (b + c - 2 * d + 2) * (b + c - 2 * d + 3)) *
                                 Rational(f_sum(a, b, c, d - 1)) +
                             Rational((a + c - 1) * (a + 2 * d - 4)) * pochhammer(c, a - 1) * pochhammer(a, 2 * d - 4) *
                                 p1md_quartic(a, b, c, d);
        return lhs == rhs;
    }, th));
    rep.checks.push_back(run_check("f_alternative", desc + ", b > d", g, 4, [](const Tuple& t) {
        return f_alternative(t[0], t[1], t[2], t[3]) == Rational(f_sum(t[0], t[1], t[2], t[3]));
    }, th));

    std::vector<Tuple> ga;
    for (long b = 0; b <= r.bmax; ++b)
        for (long c = 0; c <= r.cmax; ++c)
            for (long d = 0; 2 * d <= b + c + 1 && d <= std::max(r.dmax, (b + c + 1) / 2); ++d)
                for (long p = -d - 1; p <= 0; ++p)
                    ga.push_back({b, c, d, p, 0});
    const std::string adesc = range("b", 0, r.bmax) + ", " + range("c", 0, r.cmax) + ", 2d <= b+c+1, p in [-d-1,0]";
    rep.checks.push_back(run_check("reflection_a1", adesc, ga, 4, [](const Tuple& t) {
        return count_a1_reflection(t[0], t[1], t[2], t[3]) == E(1, t[0], t[1], t[2], t[3]);
    }, th));
    rep.checks.push_back(run_check("rewritten_a1", adesc, ga, 4, [](const Tuple& t) {
        return count_a1_rewritten(t[0], t[1], t[2], t[3]) == count_a1_reflection(t[0], t[1], t[2], t[3]);
    }, th));
    rep.checks.push_back(run_check("p1md_simple_a1", adesc + ", p = 1-d", ga, 4, [](const Tuple& t) {
        if (t[2] < 1 || t[3] != 1 - t[2])
            throw validity_error("p = 1-d, d >= 1");
        return p_one_minus_d_simple(1, t[0], t[1], t[2]) == count_a1_reflection(t[0], t[1], t[2], t[3]);
    }, th));

    const auto gs = abcdp_grid(r, 0, 1, [](long, long d) { return -d - 1; }, [](long, long) { return 0L; });
    const std::string sdesc = abc_desc(r) + ", " + range("d", 1, r.dmax) + ", p in [-d-1,0]";
    rep.checks.push_back(run_check("special_trivial", sdesc + ", p <= -d", gs, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        if (p > -d)
            throw validity_error("p <= -d");
        return special_prefactor(a, b, c, d, p) == 1 && special_factor(a, b, c, d, p) == 1;
    }, th));
    rep.checks.push_back(run_check("special_a0", sdesc, gs, 5, [](const Tuple& t) {
        const auto [a_, b, c, d, p] = t;
        Rational v(1);
        for (long k = 0; k <= d + p - 1; ++k)
            v *= checked_div(pochhammer(b + c - 2 * d + 2 * k + 2, 2 * d - 2 - 3 * k), pochhammer(c - k, -d - p + 1 + 2 * k));
        return special_factor(0, b, c, d, p) == v;
    }, th));
    rep.checks.push_back(run_check("special_recursion", sdesc + ", a >= 2", gs, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        if (a < 2 || b < 1 || c < 1)
            throw validity_error("a >= 2, b,c >= 1");
        auto R = [d = d](long aa, long bb, long cc, long pp) { return special_factor(aa, bb, cc, d, pp); };
        return Rational(a - 1) * R(a, b, c, p) * R(a - 2, b, c, p - 1) ==
               Rational(a + b - 1) * R(a - 1, b, c, p - 1) * R(a - 1, b, c, p) -
                   Rational(b) * R(a - 1, b - 1, c + 1, p) * R(a - 1, b + 1, c - 1, p - 1);
    }, th));
    rep.checks.push_back(run_check("special_x1", desc + ", a >= 1", g, 4, [](const Tuple& t) {
        const auto [a, b, c, d, p_] = t;
        if (a < 1)
            throw validity_error("a >= 1");
        Rational s(0);
        for (long k = 0; k < a; ++k) {
            const Rational coef = Rational(neg1_pow(a + k - 1)) * pochhammer(-a + b + k + 2, a - 1) * Rational(binom(a - 1, k));
            if (coef != 0)
                s += coef * r1_closed(b, c, d, -a + k + 1);
        }
        return special_factor(a, b, c, d, 1 - d) == s / factorial_q(a - 1);
    }, th));
    rep.checks.push_back(run_check("special_x1_recursion", desc + ", a >= 2", g, 4, [](const Tuple& t) {
        const auto [a, b, c, d, p_] = t;
        if (a < 2 || b < 1)
            throw validity_error("a >= 2, b >= 1");
        auto R = [d = d](long aa, long bb, long cc) { return special_factor(aa, bb, cc, d, 1 - d); };
        return R(a, b, c) == (Rational(a + b - 1) * R(a - 1, b, c) - Rational(b) * R(a - 1, b - 1, c + 1)) / Rational(a - 1);
    }, th));
}

inline void suite_d1(IdentityReport& rep, const Ranges& r, unsigned th)
{
    rep.checks.push_back(run_check("d1_corollary", abc_desc(r, 0, 0, 1), abc_grid(r, 0, 0, 1), 3, [](const Tuple& t) {
        const BigInt e = E(t[0], t[1], t[2], 1, 0);
        return e == d1_corollary(t[0], t[1], t[2]) && e == macmahon(t[0], t[1], t[2] - 1);
    }, th));
    rep.checks.push_back(run_check("prefactor_d1_p0", abc_desc(r, 0, 2, 2), abc_grid(r, 0, 2, 2), 3, [](const Tuple& t) {
        return prefactor_P(t[0], t[1], t[2], 1, 0) == Rational(macmahon(t[0], t[1], t[2] - 1));
    }, th));
    const auto gw = abcdp_grid(r, 0, 1, [](long, long) { return 0L; }, [](long a, long) { return a; });
    const std::string wdesc = abc_desc(r) + ", " + range("d", 1, r.dmax) + ", 0 <= p <= a, b > d, c > d+p";
    rep.checks.push_back(run_check("modified_ansatz_d1", wdesc + ", d = 1", gw, 5, [](const Tuple& t) {
        if (t[3] != 1)
            throw validity_error("d = 1");
        return sample_ratio(t[0], t[1], t[2], 1, t[4]) == 1;
    }, th));
    rep.checks.push_back(run_check("conjecture_d2", wdesc + ", d = 2", gw, 5, [](const Tuple& t) {
        if (t[3] != 2)
            throw validity_error("d = 2");
        return sample_ratio(t[0], t[1], t[2], 2, t[4]) == q_known(t[0], t[1], t[2], 2, t[4]);
    }, th));
    rep.checks.push_back(run_check("q_integral", wdesc, gw, 5, [](const Tuple& t) {
        return is_integral(sample_ratio(t[0], t[1], t[2], t[3], t[4]));
    }, th));
    rep.checks.push_back(run_check("conjecture_prefactor", wdesc, gw, 5, [](const Tuple& t) {
        return conjecture_prefactor(t[0], t[1], t[2], t[3], t[4]) == prefactor_P(t[0], t[1], t[2], t[3], t[4]);
    }, th));
    rep.checks.push_back(run_check("dogson_cancelled", wdesc + ", a >= 2, p >= 1", gw, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        if (a < 2 || p < 1)
            throw validity_error("a >= 2, p >= 1");
        auto Q = [d = d](long aa, long bb, long cc, long pp) { return sample_ratio(aa, bb, cc, d, pp); };
        return Q(a, b, c, p) * Q(a - 2, b, c, p - 1) * Rational((a + b + c - d - 1) * (a + d - 1)) ==
               Q(a - 1, b, c, p) * Q(a - 1, b, c, p - 1) * Rational((a + c - 1) * (a + b - 1)) -
                   Q(a - 1, b - 1, c + 1, p) * Q(a - 1, b + 1, c - 1, p - 1) * Rational((c - d) * (b - d));
    }, th));
}

inline void suite_lu(IdentityReport& rep, const Ranges& r, unsigned th)
{
    const auto g = abc_grid(r, 1);
    const auto desc = abc_desc(r, 1);
    rep.checks.push_back(run_check("factorization", desc, g, 3, [](const Tuple& t) {
        return verify_factorization(build_bundle(t[0], t[1], t[2]));
    }, th));
    rep.checks.push_back(run_check("inverse", desc, g, 3, [](const Tuple& t) {
        return verify_inverse(build_bundle(t[0], t[1], t[2]));
    }, th));
    rep.checks.push_back(run_check("det_U", desc, g, 3, [](const Tuple& t) {
        const MacMahonBundle m = build_bundle(t[0], t[1], t[2]);
        Rational prod(1);
        for (size_t i = 0; i < m.U.rows(); ++i)
            prod *= m.U(i, i);
        return prod == Rational(macmahon(t[0], t[1], t[2])) && det_rational(m.M) == prod;
    }, th));
}

inline void suite_schur(IdentityReport& rep, const Ranges& r, unsigned th)
{
    const auto g = abcdp_grid(r, 1, 1, [](long, long) { return 0L; }, [](long a, long) { return a; });
    const std::string desc = abc_desc(r, 1) + ", " + range("d", 1, r.dmax) + ", 0 <= p <= a";
    rep.checks.push_back(run_check("blocks_assemble", desc, g, 5, [](const Tuple& t) {
        return build_blocks(t[0], t[1], t[2], t[3], t[4]).assemble() == build_matrix(even_spec(t[0], t[1], t[2], t[3], t[4]));
    }, th));
    rep.checks.push_back(run_check("count_via_F", desc, g, 5, [](const Tuple& t) {
        return count_via_F(t[0], t[1], t[2], t[3], t[4]) == E(t[0], t[1], t[2], t[3], t[4]);
    }, th));
    rep.checks.push_back(run_check("F_d_independent", desc + ", d < dmax", g, 5, [dmax = r.dmax](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        if (d >= dmax)
            throw validity_error("needs d+1 <= dmax");
        const RatMatrix f = build_blocks(a, b, c, d, p).F, g2 = build_blocks(a, b, c, dmax, p).F;
        return g2.block(0, 0, f.rows(), f.cols()) == f;
    }, th));
    rep.checks.push_back(run_check("triple_sum", desc, g, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        for (long i = 1; i <= d; ++i)
            for (long j = 1; j <= d; ++j)
                if (!verify_triple_sum(a, b, c, p, i, j))
                    return false;
        return true;
    }, th));
    rep.checks.push_back(run_check("detF_factorized", desc + ", a = 2p", g, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        if (a != 2 * p)
            throw validity_error("a = 2p");
        return det_rational(build_blocks(a, b, c, d, p).F) == detF_factorized(p, b, c, d);
    }, th));
}

inline void suite_sums(IdentityReport& rep, const Ranges& r, unsigned th)
{
    const auto g = abc_grid(r);
    const auto desc = abc_desc(r);
    std::vector<Tuple> gp;
    for (long a = 1; a <= r.amax; ++a)
        for (long b = 0; b <= r.bmax; ++b)
            for (long c = 0; c <= r.cmax; ++c)
                for (long p = 0; p <= a; ++p)
                    gp.push_back({a, b, c, p, 0});
    rep.checks.push_back(run_check("sum_formula", abc_desc(r, 1) + ", 0 <= p <= a", gp, 4, [](const Tuple& t) {
        return verify_sum_formula(t[0], t[1], t[2], t[3]);
    }, th));
    rep.checks.push_back(run_check("s_a_closed", desc + ", a,c >= 1", g, 3, [](const Tuple& t) {
        return s_a_sum(t[0], t[1], t[2]) == s_a_closed(t[0], t[1], t[2]);
    }, th));
    rep.checks.push_back(run_check("s_a_recursion", desc + ", a,c >= 1", g, 3, [](const Tuple& t) {
        const auto [a, b, c, d_, p_] = t;
        return s_a_sum(a + 1, b, c) == make_rational(a * (a + b + c), a + c) * s_a_sum(a, b, c);
    }, th));
    rep.checks.push_back(run_check("factorial_sum", desc + ", a >= 1", g, 3, [](const Tuple& t) {
        const auto [a, b, c_, d_, p_] = t;
        if (a < 1)
            throw validity_error("a >= 1");
        Rational s(0);
        for (long k = 0; k < a; ++k)
            s += Rational(neg1_pow(a + k - 1)) * pochhammer(-a + b + k + 2, a - 1) * Rational(binom(a - 1, k));
        return s == factorial_q(a - 1);
    }, th));
    rep.checks.push_back(run_check("cancel1", desc + ", a >= 1", g, 3, [](const Tuple& t) {
        const auto [a, b, c, d_, p_] = t;
        if (a < 1)
            throw validity_error("a >= 1");
        return macmahon_q(a, b, c) / macmahon_q(a - 1, b, c) ==
               make_rational(factorial(a - 1) * factorial(a + b + c - 1), factorial(a + b - 1) * factorial(a + c - 1));
    }, th));
    rep.checks.push_back(run_check("cancel2", desc + ", b >= 1", g, 3, [](const Tuple& t) {
        const auto [a, b, c, d_, p_] = t;
        if (b < 1)
            throw validity_error("b >= 1");
        return macmahon_q(a, b - 1, c + 1) / macmahon_q(a, b, c) ==
               make_rational(factorial(c) * factorial(a + b - 1), factorial(a + c) * factorial(b - 1));
    }, th));
    rep.checks.push_back(run_check("cancel3", desc + ", a,b >= 1", g, 3, [](const Tuple& t) {
        const auto [a, b, c, d_, p_] = t;
        if (a < 1 || b < 1)
            throw validity_error("a,b >= 1");
        return macmahon_q(a, b - 1, c + 1) / macmahon_q(a - 1, b, c) ==
               make_rational(factorial(a - 1) * factorial(c) * factorial(a + b + c - 1),
                             factorial(a + c) * factorial(a + c - 1) * factorial(b - 1));
    }, th));
    rep.checks.push_back(run_check("elementary", desc, g, 3, [](const Tuple& t) {
        const auto [a, b, c, d_, p_] = t;
        return (a + b - 1) * (a + c - 1) - b * c == (a - 1) * (a + b + c - 1);
    }, th));
}

inline void suite_condense(IdentityReport& rep, const Ranges& r, unsigned th)
{
    const auto ge = abcdp_grid(r, 2, 0, [](long, long d) { return -d - 1; }, [](long a, long d) { return a + d + 1; });
    const auto go = abcdp_grid(r, 2, 0, [](long, long) { return -1L; }, [](long a, long) { return a + 1; });
    const std::string base = abc_desc(r, 2) + ", " + range("d", 0, r.dmax);
    rep.checks.push_back(run_check("dodgson_even", base + ", p in [-d-1,a+d+1]", ge, 5, [](const Tuple& t) {
        return verify_dodgson(t[0], t[1], t[2], t[3], t[4], Parity::Even);
    }, th));
    rep.checks.push_back(run_check("dodgson_odd", base + ", p in [-1,a+1]", go, 5, [](const Tuple& t) {
        return verify_dodgson_odd(t[0], t[1], t[2], t[3], t[4]);
    }, th));
    const auto ee = abcdp_grid(r, 0, 0, [](long, long d) { return -d - 1; }, [](long a, long d) { return a + d + 1; });
    const auto eo = abcdp_grid(r, 0, 0, [](long, long) { return -1L; }, [](long a, long) { return a + 1; });
    const std::string all = abc_desc(r) + ", " + range("d", 0, r.dmax);
    rep.checks.push_back(run_check("engine_even", all, ee, 5, [](const Tuple& t) {
        return even_count_by_condensation(t[0], t[1], t[2], t[3], t[4]) == E(t[0], t[1], t[2], t[3], t[4]);
    }, th));
    rep.checks.push_back(run_check("engine_odd", all, eo, 5, [](const Tuple& t) {
        return odd_count_by_condensation(t[0], t[1], t[2], t[3], t[4]) == O(t[0], t[1], t[2], t[3], t[4]);
    }, th));
    rep.checks.push_back(run_check("desnanot_jacobi", all + ", corner minors", ee, 5, [](const Tuple& t) {
        const IntMatrix m = build_matrix(even_spec(t[0], t[1], t[2], t[3], t[4]));
        const size_t n = m.rows();
        if (n < 2)
            throw validity_error("needs a 2x2 matrix");
        return verify_jacobi(m, 0, n - 1, 0, n - 1) && verify_jacobi(m, 0, 1, 0, 1);
    }, th));
}

inline void suite_symmetry(IdentityReport& rep, const Ranges& r, unsigned th)
{
    const auto ge = abcdp_grid(r, 0, 0, [](long, long d) { return -d - 1; }, [](long a, long d) { return a + d + 1; });
    const auto go = abcdp_grid(r, 0, 0, [](long, long) { return -2L; }, [](long a, long) { return a + 1; });
    const std::string base = abc_desc(r) + ", " + range("d", 0, r.dmax);
    rep.checks.push_back(run_check("even_reflection", base + ", p in [-d-1,a+d+1]", ge, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        return E(a, b, c, d, p) == E(a, c, b, d, reflected_position(a, p, Parity::Even));
    }, th));
    rep.checks.push_back(run_check("odd_reflection", base + ", p in [-2,a+1]", go, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        return O(a, b, c, d, p) == O(a, c, b, d, reflected_position(a, p, Parity::Odd));
    }, th));
    rep.checks.push_back(run_check("odd_support", base + ", p in [-2,a+1], d >= 1", go, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        if (d < 1)
            throw validity_error("d >= 1");
        return (p >= 0 && p <= a - 1) || O(a, b, c, d, p) == 0;
    }, th));
    rep.checks.push_back(run_check("damage_free", base + ", p in [-d-1,a+d+1]", ge, 5, [](const Tuple& t) {
        const auto [a, b, c, d, p] = t;
        return !is_damage_free(even_spec(a, b, c, d, p)) || E(a, b, c, d, p) == macmahon(a, b, c);
    }, th));
}

} // namespace detail

inline const std::vector<std::string>& identity_suites()
{
    static const std::vector<std::string> names = {"macmahon", "byun", "p1md",     "d1",      "lu",
                                                   "schur",    "sums", "condense", "symmetry"};
    return names;
}

/// Runs one suite, or all of them for "all".
inline IdentityReport verify_identities(const std::string& suite, const Ranges& ranges = {}, unsigned threads = 0)
{
    using Runner = void (*)(IdentityReport&, const Ranges&, unsigned);
    static const std::map<std::string, Runner> runners = {
        {"macmahon", detail::suite_macmahon}, {"byun", detail::suite_byun},   {"p1md", detail::suite_p1md},
        {"d1", detail::suite_d1},             {"lu", detail::suite_lu},       {"schur", detail::suite_schur},
        {"sums", detail::suite_sums},         {"condense", detail::suite_condense},
        {"symmetry", detail::suite_symmetry}};
    IdentityReport rep{suite, {}};
    if (suite == "all") {
        for (const auto& name : identity_suites()) {
            IdentityReport part{name, {}};
            runners.at(name)(part, ranges, threads);
            for (auto& c : part.checks) {
                c.name = name + "." + c.name;
                rep.checks.push_back(std::move(c));
            }
        }
        return rep;
    }
    auto it = runners.find(suite);
    if (it == runners.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    it->second(rep, ranges, threads);
    return rep;
}

} // namespace hexatile
