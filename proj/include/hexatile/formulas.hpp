#pragma once

// Closed-form evaluators for tiling counts of damaged hexagons and for the
// ansatz factors that relate them to MacMahon's number.  Each evaluator
// carries the parameter window in which its formula is stated and throws
// validity_error outside it; pole_error signals a vanishing denominator.
// Results claimed to be integers are checked with to_integer().

#include "hexatile/exactmath.hpp"
#include "hexatile/lgv.hpp"

#include <optional>
#include <string>

namespace hexatile {

namespace detail {

inline std::string args(std::initializer_list<long> xs)
{
    std::string s = "(";
    bool first = true;
    for (long x : xs) {
        if (!first)
            s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw validity_error(what);
}

} // namespace detail

// ---------------------------------------------------------------------------
// MacMahon

/// prod_{i=0}^{a-1} i! (b+c+i)! / ((b+i)! (c+i)!) as an exact rational.
inline Rational macmahon_q(long a, long b, long c)
{
    detail::require(a >= 0 && b >= 0 && c >= 0, "macmahon" + detail::args({a, b, c}));
    BigInt num(1), den(1);
    for (long i = 0; i < a; ++i) {
        num *= factorial(i) * factorial(b + c + i);
        den *= factorial(b + i) * factorial(c + i);
    }
    return make_rational(num, den);
}

/// Number of lozenge tilings of the (a,b,c)-hexagon.
inline BigInt macmahon(long a, long b, long c)
{
    return to_integer(macmahon_q(a, b, c), "macmahon" + detail::args({a, b, c}));
}

/// MacMahon's triple product prod_{i,j,k} (i+j+k-1)/(i+j+k-2), kept as an
/// independent route to the same number.
inline Rational macmahon_triple_product(long a, long b, long c)
{
    Rational r(1);
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k)
                r *= make_rational(i + j + k - 1, i + j + k - 2);
    return r;
}

// ---------------------------------------------------------------------------
// Byun's product formulas

/// Tilings of the (2p,b,c)-hexagon with an even intrusion of length d at the
/// central position p.
inline BigInt byun_even(long p, long b, long c, long d)
{
    detail::require(p >= 0 && b >= 0 && c >= 0 && d >= 0, "byun_even" + detail::args({p, b, c, d}));
    Rational r = macmahon_q(2 * p, b, c);
    const Rational half(1, 2);
    const BigInt four_p = pow_int(4, static_cast<unsigned long>(p));
    for (long k = 1; k <= d; ++k) {
        Rational num = Rational(four_p) * pochhammer(1 + b - k, p) * pochhammer(1 + c - k, p) *
                       pochhammer(Rational(k) - half, p);
        Rational den = pochhammer(2 + b + c - 2 * k, 2 * p) * pochhammer(k, p);
        if (den == 0)
            throw pole_error("byun_even" + detail::args({p, b, c, d}));
        r *= num / den;
    }
    return to_integer(r, "byun_even" + detail::args({p, b, c, d}));
}

/// How the free symbol `a` inside the odd product is read.
///   Position: `a` is the intrusion position p (this matches the
///             determinants on every tested case);
///   Literal:  `a` is the side length 2p+1.
enum class ByunOddReading { Position, Literal };

/// The odd product formula as an exact rational, without integrality check.
inline Rational byun_odd_value(long p, long b, long c, long d,
                               ByunOddReading reading = ByunOddReading::Position)
{
    detail::require(p >= 0 && b >= 0 && c >= 0 && d >= 0, "byun_odd" + detail::args({p, b, c, d}));
    const long A = reading == ByunOddReading::Position ? p : 2 * p + 1;
    const long fl = floor_div(c - b, 2);
    const Rational half(1, 2);
    Rational r = macmahon_q(2 * p + 1, b, c) / Rational(pow_int(4, static_cast<unsigned long>(d)));
    for (long k = 0; k < d; ++k) {
        const Rational num = pochhammer(A + k + 1, c - 2 * k) *
                             pochhammer(Rational(k) + Rational(3, 2), c - 2 * k - 2) *
                             pochhammer(b - k, fl) * pochhammer(Rational(c - k) - half, -fl);
        const Rational den = pochhammer(k + 1, c - 2 * k - 1) *
                             pochhammer(Rational(A + k) + Rational(3, 2), c - 2 * k - 1) *
                             pochhammer(A + b - k + 1, fl) * pochhammer(Rational(A + c - k) + half, -fl);
        r *= checked_div(num, den);
    }
    return r;
}

/// Tilings of the (2p+1,b,c)-hexagon with a central odd intrusion, i.e.
/// |O(2p+1,b,c,d,p)| in the coordinates of hexmodel.hpp.
inline BigInt byun_odd(long p, long b, long c, long d,
                       ByunOddReading reading = ByunOddReading::Position)
{
    return to_integer(byun_odd_value(p, b, c, d, reading), "byun_odd" + detail::args({p, b, c, d}));
}

// ---------------------------------------------------------------------------
// a = 1, p <= 0: reflection principle

inline BigInt count_a1_reflection(long b, long c, long d, long p)
{
    detail::require(b >= 0 && c >= 0 && d >= 0 && p <= 0 && 2 * d <= b + c + 1,
                    "count_a1_reflection" + detail::args({b, c, d, p}));
    BigInt r = binom(b + c, b);
    for (long i = 0; i <= d + p - 1; ++i) {
        const long m = -p + i;
        r -= binom(b + c - 2 * m - 1, b + 2 * p - i - 1) * (binom(2 * m, -2 * p + i) - binom(2 * m, i - 1));
    }
    return r;
}

/// The rewritten single sum for a = 1; the subscripted factor is a falling
/// factorial (2i-2p)(2i-2p-1)...(i-2p+2), with the i = 0 term 1/(1-2p).
inline BigInt count_a1_rewritten(long b, long c, long d, long p)
{
    detail::require(b >= 0 && c >= 0 && d >= 0 && p <= 0 && 2 * d <= b + c + 1,
                    "count_a1_rewritten" + detail::args({b, c, d, p}));
    Rational s(0);
    for (long i = 0; i <= d + p - 1; ++i)
        s += falling_factorial(2 * i - 2 * p, i - 1) * Rational(binom(b + c - 2 * i + 2 * p - 1, b - i + 2 * p - 1)) /
             factorial_q(i);
    const Rational r = Rational(binom(b + c, b)) - Rational(1 - 2 * p) * s;
    return to_integer(r, "count_a1_rewritten" + detail::args({b, c, d, p}));
}

// ---------------------------------------------------------------------------
// p = 1 - d

/// f(a,b,c,d) = sum_{k=1}^a (b+c+k)_{a-k} (k)_{2d-2} (c)_{k-1}.
inline BigInt f_sum(long a, long b, long c, long d)
{
    detail::require(a >= 0 && d >= 1, "f_sum" + detail::args({a, b, c, d}));
    Rational s(0);
    for (long k = 1; k <= a; ++k)
        s += pochhammer(b + c + k, a - k) * pochhammer(k, 2 * d - 2) * pochhammer(c, k - 1);
    return to_integer(s, "f_sum" + detail::args({a, b, c, d}));
}

inline Rational p1md_quartic(long a, long b, long c, long k)
{
    return Rational(-a * (b - 2 * k + 3) + b * (5 - 4 * k) - 2 * c * k + 2 * c + 8 * k * k - 20 * k + 13);
}

/// Alternative closed expression for f obtained from its recursion in d;
/// stated for b > d.
inline Rational f_alternative(long a, long b, long c, long d)
{
    detail::require(b > d && d >= 1, "f_alternative" + detail::args({a, b, c, d}));
    Rational inner(0);
    for (long k = 1; k <= d; ++k)
        inner += pochhammer(b + c - 2 * d + 2, 2 * d - 2 * k) * pochhammer(b - 2 * k + 4, 2 * k - 3) *
                 pochhammer(a, 2 * k - 3) * p1md_quartic(a, b, c, k) / factorial_q(2 * k - 2);
    const Rational pre = checked_div(factorial_q(2 * d - 2), pochhammer(b - 2 * d + 2, 2 * d - 1));
    return pre * (pochhammer(b + c - 2 * d + 2, a + 2 * d - 2) + pochhammer(c, a) * inner);
}

/// E(a,b,c,d,1-d) by the alternating single sum.  Returns M(a,b,c) when
/// d >= b/2 + 1, where the intrusion does no damage.
inline BigInt p_one_minus_d_simple(long a, long b, long c, long d)
{
    const std::string id = "p_one_minus_d_simple" + detail::args({a, b, c, d});
    detail::require(a >= 0 && b >= 0 && c >= 0 && d > 0, id);
    const Rational m = macmahon_q(a, b, c);
    if (2 * d >= b + 2 || a == 0)
        return to_integer(m, id);
    Rational s(0);
    for (long k = 0; k < a; ++k) {
        if (a + c - k - 1 == 0)
            throw pole_error(id);
        s += Rational(neg1_pow(a + k - 1)) * Rational(binom(a - 1, k)) *
             pochhammer(-a + b - 2 * d + k + 3, a + 2 * d - 2) / Rational(a + c - k - 1);
    }
    const Rational den = factorial_q(a - 1) * pochhammer(b + c - 2 * d + 2, a + 2 * d - 2);
    return to_integer(m * (1 - checked_div(pochhammer(c, a), den) * s), id);
}

/// The intermediate form with the difference-of-binomials bracket.  The
/// leading factor is 1/(b+c+1)_{a-1}; at d = 1 each bracket is 1/(b+c).
inline Rational p_one_minus_d_aux(long a, long b, long c, long d, bool printed_prefactor = false)
{
    const std::string id = "p_one_minus_d_aux" + detail::args({a, b, c, d});
    detail::require(a >= 1 && b >= 0 && c >= 0 && d > 0, id);
    Rational s(0);
    for (long k = 0; k < a; ++k) {
        const long n = a + c - k - 1;
        const BigInt full = binom(b + c, n);
        if (full == 0 || n == 0)
            throw pole_error(id);
        s += Rational(neg1_pow(a + k - 1)) * Rational(binom(a - 1, k)) * pochhammer(-a + b + k + 2, a - 1) *
             make_rational(full - binom(b + c - 2 * d + 1, n), full * n);
    }
    const Rational lead = printed_prefactor ? pochhammer(b + c - 1, a - 1) : pochhammer(b + c + 1, a - 1);
    return checked_div(macmahon_q(a, b, c) * pochhammer(c, a), factorial_q(a - 1) * lead) * s;
}

/// S_a = sum_k (-1)^{a+k-1} binom(a-1,k) (-a+b+k+2)_{a-1} / (a+c-k-1).
inline Rational s_a_sum(long a, long b, long c)
{
    detail::require(a >= 1 && c >= 1, "s_a_sum" + detail::args({a, b, c}));
    Rational s(0);
    for (long k = 0; k < a; ++k)
        s += Rational(neg1_pow(a + k - 1)) * Rational(binom(a - 1, k)) * pochhammer(-a + b + k + 2, a - 1) /
             Rational(a + c - k - 1);
    return s;
}

inline Rational s_a_closed(long a, long b, long c)
{
    detail::require(a >= 1 && c >= 1 && b >= 0, "s_a_closed" + detail::args({a, b, c}));
    return make_rational(factorial(a - 1) * factorial(c - 1) * factorial(a + b + c - 1),
                         factorial(a + c - 1) * factorial(b + c));
}

enum class P1mdVariant {
    Sum,               // M (1 - (b-2d+2)_c / ((2d-2)! (b+1)_{a+c-1}) f), d <= ceil(b/2)
    Polynomial,        // the form whose bracket is polynomial in a,b,c; b > d
    PolynomialPrinted, // same, with the prefactor (b+c-2d-2)_{a+2d-2} exactly as typeset
};

inline BigInt p_one_minus_d_alt(long a, long b, long c, long d, P1mdVariant variant)
{
    const std::string id = "p_one_minus_d_alt" + detail::args({a, b, c, d});
    detail::require(a >= 0 && b >= 0 && c >= 0 && d > 0, id);
    const Rational m = macmahon_q(a, b, c);
    if (variant == P1mdVariant::Sum) {
        detail::require(d <= ceil_div(b, 2), id + " needs d <= ceil(b/2)");
        const Rational ratio = checked_div(pochhammer(b - 2 * d + 2, c),
                                           factorial_q(2 * d - 2) * pochhammer(b + 1, a + c - 1));
        return to_integer(m * (1 - ratio * Rational(f_sum(a, b, c, d))), id);
    }
    detail::require(b > d, id + " needs b > d");
    Rational bracket = pochhammer(b + c - 2 * d + 2, 2 * d - 2);
    for (long k = 2; k <= d; ++k)
        bracket -= pochhammer(b + c - 2 * d + 2, 2 * d - 2 * k) * pochhammer(b - 2 * k + 4, 2 * k - 3) *
                   pochhammer(a, 2 * k - 3) * p1md_quartic(a, b, c, k) / factorial_q(2 * k - 2);
    const long shift = variant == P1mdVariant::Polynomial ? 2 : -2;
    const Rational lead = checked_div(pochhammer(c, a) * m, pochhammer(b + c - 2 * d + shift, a + 2 * d - 2));
    return to_integer(lead * bracket, id);
}

// ---------------------------------------------------------------------------
// d = 1, p = 0

/// E(a,b,c,1,0) = M(a,b,c) (c)_a / (b+c)_a; equals M(a,b,c-1).
inline BigInt d1_corollary(long a, long b, long c)
{
    const std::string id = "d1_corollary" + detail::args({a, b, c});
    detail::require(a >= 0 && b >= 0 && c >= 1, id);
    return to_integer(macmahon_q(a, b, c) * checked_div(pochhammer(c, a), pochhammer(b + c, a)), id);
}

// ---------------------------------------------------------------------------
// Ansatz prefactors

inline bool prefactor_window(long a, long b, long c, long d, long p)
{
    return 0 <= p && p <= a && b > d && d > 0 && c > d + p;
}

/// P(a,b,c,d,p) = B_p * B_a * B_d for 0 <= p <= a, b > d > 0, c > d+p.
inline Rational prefactor_P(long a, long b, long c, long d, long p)
{
    detail::require(prefactor_window(a, b, c, d, p), "prefactor_P" + detail::args({a, b, c, d, p}));
    BigInt num(1), den(1);
    for (long i = 0; i < p; ++i) {
        num *= factorial(i) * factorial(b + c - d + i);
        den *= factorial(b - d + i) * factorial(a + c - p + i);
    }
    for (long i = p; i < a; ++i) {
        num *= factorial(i) * factorial(b + c - d + i);
        den *= factorial(b + i) * factorial(c - d - p + i);
    }
    Rational r = make_rational(num, den);
    for (long i = 0; i < d; ++i)
        r *= checked_div(pochhammer(a - p + 1 + i, p),
                         factorial_q(p + i) * pochhammer(b + c - 2 * d + 1 + i, i));
    return r;
}

/// The product written in front of Q in the general conjecture; the same
/// window as prefactor_P, and equal to it.
inline Rational conjecture_prefactor(long a, long b, long c, long d, long p)
{
    detail::require(prefactor_window(a, b, c, d, p), "conjecture_prefactor" + detail::args({a, b, c, d, p}));
    Rational r(1);
    for (long i = 0; i < d; ++i)
        r *= checked_div(pochhammer(a - p + i + 1, p), pochhammer(b + c - d - i, d - i - 1) * factorial_q(p + i));
    BigInt num(1), den(1);
    for (long i = 0; i < p; ++i) {
        num *= factorial(i) * factorial(b + c - d + i);
        den *= factorial(b - d + i) * factorial(a + c - i - 1);
    }
    for (long i = p; i < a; ++i) {
        num *= factorial(i) * factorial(b + c - d + i);
        den *= factorial(b + i) * factorial(a + c - d - i - 1);
    }
    return r * make_rational(num, den);
}

/// Prefactor of the specialized ansatz for p <= 0:
/// prod_{k=0}^{d+p-1} (c-k)_{a-d-p+1+2k} / (b+c-2d+2k+2)_{a+2d-2-3k}.
inline Rational special_prefactor(long a, long b, long c, long d, long p)
{
    const std::string id = "special_prefactor" + detail::args({a, b, c, d, p});
    detail::require(p <= 0 && d > 0 && a >= 0, id);
    Rational r(1);
    for (long k = 0; k <= d + p - 1; ++k)
        r *= checked_div(pochhammer(c - k, a - d - p + 1 + 2 * k), pochhammer(b + c - 2 * d + 2 * k + 2, a + 2 * d - 2 - 3 * k));
    return r;
}

/// The known polynomial factors Q(a,b,c,d,p) for d = 1 and d = 2.
inline Rational q_known(long a, long b, long c, long d, long p)
{
    if (d == 1)
        return Rational(1);
    if (d == 2)
        return Rational(b * (a - p + 1) + c * (p + 1) + 2 * (a * p - p * p - 1));
    throw validity_error("unknown Q for d=" + std::to_string(d) + " (use qfit)");
}

/// The d = 3 expression exactly as typeset; it depends on a only and is
/// kept for side-by-side reporting against a fitted polynomial.
inline Rational q_printed_d3(long a)
{
    const BigInt A(a);
    const BigInt v = 98 * A * A * A + 621 * A * A + 1243 * A + (A + 3) * (2 * A + 5) * (125 * A + 250) -
                     (A + 3) * (4 * A + 13) * (75 * A + 150) + (A + 3) * (375 * A + 750) + 786;
    return Rational(v);
}

/// det F at a = 2p in product form.
inline Rational detF_factorized(long p, long b, long c, long d)
{
    const std::string id = "detF_factorized" + detail::args({p, b, c, d});
    detail::require(p >= 0 && b >= 0 && c >= 0 && d >= 0, id);
    Rational r(pow_int(4, static_cast<unsigned long>(d * p)));
    const Rational half(1, 2);
    for (long k = 1; k <= d; ++k)
        r *= checked_div(pochhammer(Rational(k) - half, p) * pochhammer(b - k + 1, p) * pochhammer(c - k + 1, p),
                         pochhammer(k, p) * pochhammer(b + c - 2 * k + 2, 2 * p));
    return r;
}

// ---------------------------------------------------------------------------
// Ansatz factors from computed determinants

struct AnsatzFactors {
    std::optional<Rational> G;                 // E / M
    std::optional<Rational> R;                 // E / (M * special_prefactor), p <= 0
    std::optional<Rational> Q;                 // E / prefactor_P, 0 <= p <= a
    std::optional<Rational> prefactor_P;
    std::optional<Rational> special_prefactor;
};

inline Rational general_factor(long a, long b, long c, long d, long p)
{
    return make_rational(even_count(a, b, c, d, p).value, macmahon(a, b, c));
}

inline Rational special_factor(long a, long b, long c, long d, long p)
{
    const Rational sp = special_prefactor(a, b, c, d, p);
    return checked_div(general_factor(a, b, c, d, p), sp);
}

inline Rational modified_factor(long a, long b, long c, long d, long p)
{
    return checked_div(Rational(even_count(a, b, c, d, p).value), prefactor_P(a, b, c, d, p));
}

inline AnsatzFactors ansatz_factors(long a, long b, long c, long d, long p)
{
    AnsatzFactors f;
    const BigInt e = even_count(a, b, c, d, p).value;
    const Rational m = macmahon_q(a, b, c);
    f.G = Rational(e) / m;
    if (p <= 0 && d > 0) {
        try {
            f.special_prefactor = special_prefactor(a, b, c, d, p);
            if (*f.special_prefactor != 0)
                f.R = *f.G / *f.special_prefactor;
        } catch (const pole_error&) {
        }
    }
    if (prefactor_window(a, b, c, d, p)) {
        f.prefactor_P = prefactor_P(a, b, c, d, p);
        f.Q = Rational(e) / *f.prefactor_P;
    }
    return f;
}

/// r(1,i,1) = R(1, b+i, c-i, d, 1-d) in closed form, from the a = 1 count
/// binom(B+C,C) - binom(B+C-2d+1,C) and the one-factor special prefactor.
inline Rational r1_closed(long b, long c, long d, long i)
{
    const long C = c - i;
    const BigInt full = binom(b + c, C);
    if (full == 0 || C == 0)
        throw pole_error("r1_closed" + detail::args({b, c, d, i}));
    return make_rational(full - binom(b + c - 2 * d + 1, C), full * C) * pochhammer(b + c - 2 * d + 2, 2 * d - 1);
}

} // namespace hexatile
