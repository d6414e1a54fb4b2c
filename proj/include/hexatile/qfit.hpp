#pragma once

// Exact recovery of the polynomial factor Q(a,b,c,d,p) = E / P for fixed d.
//
// Samples live in the shifted coordinates
//   x = (a-p, b-d-1, c-d-p-1, p),
// which range over the nonnegative orthant exactly where P is defined.  A
// polynomial of total degree <= D is determined by its values on the
// simplex |x| <= D through its Newton expansion
//   f(x) = sum_{|k|<=D} (Delta^k f)(0) prod_i binom(x_i, k_i).

#include "hexatile/detkernel.hpp"
#include "hexatile/formulas.hpp"
#include "hexatile/multipoly.hpp"
#include "hexatile/parallel.hpp"

#include <json.hpp>

#include <random>
#include <set>

namespace hexatile {

class fit_error : public std::runtime_error {
public:
    enum class Kind { Inconsistent, Underdetermined };

    fit_error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct SamplePoint {
    long a = 0, b = 0, c = 0, p = 0;
    auto operator<=>(const SamplePoint&) const = default;
};

using Shifted = std::array<long, 4>;

inline SamplePoint from_shifted(long d, const Shifted& x)
{
    return {x[0] + x[3], x[1] + d + 1, x[2] + d + x[3] + 1, x[3]};
}

inline Shifted to_shifted(long d, const SamplePoint& s)
{
    return {s.a - s.p, s.b - d - 1, s.c - d - s.p - 1, s.p};
}

/// E(a,b,c,d,p) / P(a,b,c,d,p).
inline Rational sample_ratio(long a, long b, long c, long d, long p)
{
    return modified_factor(a, b, c, d, p);
}

/// All x >= 0 with |x| == layer.
inline std::vector<Shifted> simplex_layer(long layer)
{
    std::vector<Shifted> out;
    for (long x0 = layer; x0 >= 0; --x0)
        for (long x1 = layer - x0; x1 >= 0; --x1)
            for (long x2 = layer - x0 - x1; x2 >= 0; --x2)
                out.push_back({x0, x1, x2, layer - x0 - x1 - x2});
    return out;
}

inline std::map<SamplePoint, Rational> sample_points(long d, const std::vector<SamplePoint>& pts,
                                                     unsigned threads = 0)
{
    std::vector<Rational> vals(pts.size());
    parallel_for(
        pts.size(), [&](size_t i) { vals[i] = sample_ratio(pts[i].a, pts[i].b, pts[i].c, d, pts[i].p); }, threads);
    std::map<SamplePoint, Rational> out;
    for (size_t i = 0; i < pts.size(); ++i)
        out.emplace(pts[i], vals[i]);
    return out;
}

namespace detail {

/// Coefficients of binom(x, k) as a polynomial in x, lowest power first.
inline std::vector<Rational> binomial_poly(long k)
{
    std::vector<Rational> c{Rational(1)};
    for (long t = 0; t < k; ++t) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * Rational(t);
        }
        for (auto& v : next)
            v /= Rational(t + 1);
        c = std::move(next);
    }
    return c;
}

/// Newton interpolant on the simplex of degree D, as a polynomial in (a,b,c,p).
inline MultiPoly newton_interpolant(long d, long D, const std::map<Shifted, Rational>& values)
{
    std::map<Shifted, Rational> delta = values;
    for (size_t axis = 0; axis < 4; ++axis) {
        std::map<Shifted, Rational> next;
        for (const auto& [k, v] : delta) {
            Rational s(0);
            Shifted j = k;
            for (long t = 0; t <= k[axis]; ++t) {
                j[axis] = t;
                s += Rational(neg1_pow(k[axis] - t) * binom(k[axis], t)) * delta.at(j);
            }
            next.emplace(k, s);
        }
        delta = std::move(next);
    }
    std::vector<std::vector<Rational>> bp;
    for (long k = 0; k <= D; ++k)
        bp.push_back(binomial_poly(k));
    MultiPoly in_x; // variables stand for x_0..x_3
    for (const auto& [k, v] : delta) {
        if (v == 0)
            continue;
        for (size_t e0 = 0; e0 < bp[size_t(k[0])].size(); ++e0)
            for (size_t e1 = 0; e1 < bp[size_t(k[1])].size(); ++e1)
                for (size_t e2 = 0; e2 < bp[size_t(k[2])].size(); ++e2)
                    for (size_t e3 = 0; e3 < bp[size_t(k[3])].size(); ++e3) {
                        const Rational c = bp[size_t(k[0])][e0] * bp[size_t(k[1])][e1] * bp[size_t(k[2])][e2] *
                                           bp[size_t(k[3])][e3];
                        if (c != 0)
                            in_x.add_term({int(e0), int(e1), int(e2), int(e3)}, v * c);
                    }
    }
    const MultiPoly A = MultiPoly::variable(0), B = MultiPoly::variable(1), C = MultiPoly::variable(2),
                    P = MultiPoly::variable(3);
    const Rational dd(d);
    return compose(in_x, {A - P, B - MultiPoly::constant(dd + 1), C - P - MultiPoly::constant(dd + 1), P});
}

inline std::vector<Exponents> monomials_up_to(int D)
{
    std::vector<Exponents> out;
    for (int t = 0; t <= D; ++t)
        for (int e0 = t; e0 >= 0; --e0)
            for (int e1 = t - e0; e1 >= 0; --e1)
                for (int e2 = t - e0 - e1; e2 >= 0; --e2)
                    out.push_back({e0, e1, e2, t - e0 - e1 - e2});
    return out;
}

} // namespace detail

/// Polynomial of total degree <= D through every sample, by an exact
/// linear solve in the monomial basis.
inline MultiPoly fit_on_points(long d, int D, const std::vector<SamplePoint>& pts, unsigned threads = 0)
{
    const auto mons = detail::monomials_up_to(D);
    if (pts.size() <= mons.size())
        throw fit_error(fit_error::Kind::Underdetermined, "need more than " + std::to_string(mons.size()) +
                                                              " samples for degree " + std::to_string(D));
    const auto vals = sample_points(d, pts, threads);
    RatMatrix A(pts.size(), mons.size());
    std::vector<Rational> rhs;
    size_t row = 0;
    for (const auto& [s, v] : vals) {
        const std::array<long, 4> x{s.a, s.b, s.c, s.p};
        for (size_t j = 0; j < mons.size(); ++j) {
            BigInt m(1);
            for (size_t i = 0; i < 4; ++i)
                m *= pow_int(x[i], static_cast<unsigned long>(mons[j][i]));
            A(row, j) = Rational(m);
        }
        rhs.push_back(v);
        ++row;
    }
    const SystemSolution sol = solve_system(A, rhs);
    if (sol.status == SystemStatus::Inconsistent)
        throw fit_error(fit_error::Kind::Inconsistent, "no polynomial of degree " + std::to_string(D) + " fits");
    if (sol.status == SystemStatus::Underdetermined)
        throw fit_error(fit_error::Kind::Underdetermined, "samples do not determine a degree " + std::to_string(D) +
                                                              " polynomial (rank " + std::to_string(sol.rank) + ")");
    MultiPoly q;
    for (size_t j = 0; j < mons.size(); ++j)
        q.add_term(mons[j], sol.x[j]);
    return q;
}

enum class FitMethod { Newton, LinearSolve };

/// The fitting grid for degree D: the simplex |x| <= D in shifted
/// coordinates, plus the layer |x| = D+1 that serves as the consistency
/// check and, for the linear solve, sizes the system beyond the basis.
inline std::vector<SamplePoint> fitting_grid(long d, int D)
{
    std::vector<SamplePoint> out;
    for (long t = 0; t <= D + 1; ++t)
        for (const Shifted& x : simplex_layer(t))
            out.push_back(from_shifted(d, x));
    return out;
}

/// Fixed-degree fit on fitting_grid(d, D).  Throws fit_error(Inconsistent)
/// when the samples are not a polynomial of degree <= D.
inline MultiPoly fit_degree(long d, int D, FitMethod method = FitMethod::Newton, unsigned threads = 0)
{
    if (d < 1 || D < 0)
        throw std::invalid_argument("fit needs d >= 1 and degree >= 0");
    const auto grid = fitting_grid(d, D);
    if (method == FitMethod::LinearSolve)
        return fit_on_points(d, D, grid, threads);
    const auto vals = sample_points(d, grid, threads);
    std::map<Shifted, Rational> inner;
    for (const auto& [s, v] : vals) {
        const Shifted x = to_shifted(d, s);
        if (x[0] + x[1] + x[2] + x[3] <= D)
            inner.emplace(x, v);
    }
    MultiPoly q = detail::newton_interpolant(d, D, inner);
    for (const auto& [s, v] : vals)
        if (q.eval(s.a, s.b, s.c, s.p) != v)
            throw fit_error(fit_error::Kind::Inconsistent,
                            "degree " + std::to_string(D) + " interpolant misses (" + std::to_string(s.a) + "," +
                                std::to_string(s.b) + "," + std::to_string(s.c) + "," + std::to_string(s.p) + ")");
    return q;
}

struct ValidationReport {
    size_t checked = 0;
    size_t failures = 0;
    std::vector<std::string> examples; // first few failing points

    bool passed() const { return checked > 0 && failures == 0; }
};

/// Checks P * poly == E exactly at every holdout point.
inline ValidationReport cross_validate(const MultiPoly& poly, long d, const std::vector<SamplePoint>& holdout,
                                       unsigned threads = 0)
{
    std::vector<char> ok(holdout.size(), 0);
    parallel_for(
        holdout.size(),
        [&](size_t i) {
            const SamplePoint& s = holdout[i];
            const BigInt e = even_count(s.a, s.b, s.c, d, s.p).value;
            ok[i] = prefactor_P(s.a, s.b, s.c, d, s.p) * poly.eval(s.a, s.b, s.c, s.p) == Rational(e);
        },
        threads);
    ValidationReport r;
    for (size_t i = 0; i < holdout.size(); ++i) {
        ++r.checked;
        if (!ok[i]) {
            ++r.failures;
            if (r.examples.size() < 5) {
                const SamplePoint& s = holdout[i];
                r.examples.push_back(detail::args({s.a, s.b, s.c, d, s.p}));
            }
        }
    }
    return r;
}

/// n distinct valid points outside fitting_grid(d, D), drawn from the
/// shifted box [0, D+4]^4 with a fixed seed.
inline std::vector<SamplePoint> holdout_points(long d, int D, size_t n, std::uint64_t seed = 20231)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, D + 4);
    std::set<Shifted> seen;
    std::vector<SamplePoint> out;
    size_t attempts = 0;
    while (out.size() < n && attempts++ < 1000 * n) {
        const Shifted x{coord(rng), coord(rng), coord(rng), coord(rng)};
        if (x[0] + x[1] + x[2] + x[3] <= D + 1 || !seen.insert(x).second)
            continue;
        out.push_back(from_shifted(d, x));
    }
    return out;
}

struct FitOptions {
    std::optional<int> degree; // fixed degree; otherwise search from 2(d-1)
    int max_degree = 16;
    size_t holdout = 50;
    FitMethod method = FitMethod::Newton;
    unsigned threads = 0;
};

struct FitResult {
    long d = 0;
    int degree = 0; // degree bound used for the accepted fit
    MultiPoly q;
    ValidationReport validation;
    std::vector<std::string> log;
};

/// Fits Q for fixed d.  Without a fixed degree, the bound starts at 2(d-1)
/// and grows until the interpolant matches the extra layer and a stable
/// refit at the next degree, and passes holdout validation.
inline FitResult fit(long d, const FitOptions& opt = {})
{
    FitResult r;
    r.d = d;
    auto attempt = [&](int D) -> std::optional<MultiPoly> {
        try {
            return fit_degree(d, D, opt.method, opt.threads);
        } catch (const fit_error& e) {
            if (e.kind() != fit_error::Kind::Inconsistent)
                throw;
            r.log.push_back("degree " + std::to_string(D) + ": " + e.what());
            return std::nullopt;
        }
    };
    if (opt.degree) {
        auto q = attempt(*opt.degree);
        if (!q)
            throw fit_error(fit_error::Kind::Inconsistent, r.log.back());
        r.degree = *opt.degree;
        r.q = std::move(*q);
    } else {
        bool accepted = false;
        for (int D = std::max<int>(0, 2 * int(d - 1)); D <= opt.max_degree && !accepted; ++D) {
            auto q = attempt(D);
            if (!q)
                continue;
            const ValidationReport v = cross_validate(*q, d, holdout_points(d, D, opt.holdout), opt.threads);
            if (!v.passed()) {
                r.log.push_back("degree " + std::to_string(D) + ": holdout failures " + std::to_string(v.failures));
                continue;
            }
            if (D + 1 <= opt.max_degree) {
                auto next = attempt(D + 1);
                if (!next || !(*next == *q)) {
                    r.log.push_back("degree " + std::to_string(D) + ": refit at degree " + std::to_string(D + 1) +
                                    " differs");
                    continue;
                }
            }
            r.degree = D;
            r.q = std::move(*q);
            accepted = true;
        }
        if (!accepted)
            throw fit_error(fit_error::Kind::Inconsistent,
                            "no stable fit up to degree " + std::to_string(opt.max_degree));
    }
    r.log.push_back("accepted degree bound " + std::to_string(r.degree) + ", total degree " +
                    std::to_string(r.q.total_degree()));
    r.validation = cross_validate(r.q, d, holdout_points(d, r.degree, opt.holdout), opt.threads);
    return r;
}

inline nlohmann::json to_json(const MultiPoly& q, long d)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, coef] : q.terms())
        terms.push_back({{"exponents", {e[0], e[1], e[2], e[3]}},
                         {"num", coef.get_num().get_str()},
                         {"den", coef.get_den().get_str()}});
    return {{"d", d}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const nlohmann::json& j)
{
    MultiPoly q;
    for (const auto& t : j.at("terms")) {
        const auto& e = t.at("exponents");
        q.add_term({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>()},
                   make_rational(BigInt(t.at("num").get<std::string>()), BigInt(t.at("den").get<std::string>())));
    }
    return q;
}

/// The d = 2 polynomial from q_known as a MultiPoly.
inline MultiPoly q_known_poly(long d)
{
    const MultiPoly A = MultiPoly::variable(0), B = MultiPoly::variable(1), C = MultiPoly::variable(2),
                    P = MultiPoly::variable(3), one = MultiPoly::constant(1);
    if (d == 1)
        return one;
    if (d == 2)
        return B * (A - P + one) + C * (P + one) + (A * P - P * P - one) * Rational(2);
    throw validity_error("unknown Q for d=" + std::to_string(d) + " (use qfit)");
}

/// For the coefficient of b^i c^j: the degree in a and in p.
struct CoefficientDegrees {
    int i = 0, j = 0, deg_a = 0, deg_p = 0;
};

inline std::vector<CoefficientDegrees> coefficient_degrees(const MultiPoly& q)
{
    std::map<std::pair<int, int>, CoefficientDegrees> m;
    for (const auto& [e, coef] : q.terms()) {
        auto& cd = m[{e[1], e[2]}];
        cd.i = e[1];
        cd.j = e[2];
        cd.deg_a = std::max(cd.deg_a, e[0]);
        cd.deg_p = std::max(cd.deg_p, e[3]);
    }
    std::vector<CoefficientDegrees> out;
    for (auto& [k, v] : m)
        out.push_back(v);
    return out;
}

/// Whether Q(a,b,c,d,p) == Q(p,c,b,d,p) as polynomials.
inline bool swapped_argument_pattern_holds(const MultiPoly& q)
{
    const MultiPoly B = MultiPoly::variable(1), C = MultiPoly::variable(2), P = MultiPoly::variable(3);
    return compose(q, {P, C, B, P}) == q;
}

} // namespace hexatile
