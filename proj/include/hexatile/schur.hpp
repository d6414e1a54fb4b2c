#pragma once

// Structure of MacMahon's matrix M_{i,j} = binom(b+c, b+i-j): the
// factorization U = L*M, the inverse M^{-1} = T*D*L, and the reduction of
// the even-intrusion matrix to the d x d matrix F = Q4 - Q3*Q2^{-1}*Q1.

#include "hexatile/detkernel.hpp"
#include "hexatile/formulas.hpp"
#include "hexatile/lgv.hpp"

namespace hexatile {

struct MacMahonBundle {
    long a = 0, b = 0, c = 0;
    RatMatrix M, L, T, D, U;
};

inline MacMahonBundle build_bundle(long a, long b, long c)
{
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("build_bundle" + detail::args({a, b, c}));
    const size_t n = static_cast<size_t>(a);
    MacMahonBundle m{a, b, c, RatMatrix(n, n), RatMatrix(n, n), RatMatrix(n, n), RatMatrix(n, n), RatMatrix(n, n)};
    for (long i = 1; i <= a; ++i) {
        for (long j = 1; j <= a; ++j) {
            const size_t r = static_cast<size_t>(i - 1), s = static_cast<size_t>(j - 1);
            const Rational sgn(neg1_pow(i + j));
            m.M(r, s) = Rational(binom(b + c, b + i - j));
            if (i >= j)
                m.L(r, s) = sgn * Rational(binom(i - 1, j - 1)) * checked_div(pochhammer(c, i - j), pochhammer(b + j, i - j));
            if (j >= i)
                m.T(r, s) = sgn * Rational(binom(j - 1, i - 1)) * checked_div(pochhammer(b, j - i), pochhammer(c + i, j - i));
            if (i == j)
                m.D(r, s) = make_rational(factorial(b + i - 1) * factorial(c + i - 1),
                                          factorial(b + c + i - 1) * factorial(i - 1));
            if (b + i - j >= 0)
                m.U(r, s) = pochhammer(-i + j + 1, i - 1) *
                            make_rational(factorial(b) * factorial(b + c + i - 1),
                                          factorial(b + i - 1) * factorial(c + j - 1) * factorial(b + i - j));
        }
    }
    return m;
}

/// The double-sign sum for the (i,j) entry of M^{-1} (1-based); summands
/// with k < max(i,j) vanish.
inline Rational macmahon_inverse_entry(long a, long b, long c, long i, long j)
{
    Rational s(0);
    for (long k = std::max(i, j); k <= a; ++k)
        s += Rational(binom(k - 1, i - 1) * binom(k - 1, j - 1)) * pochhammer(b, k - i) * pochhammer(c, k - j) /
             Rational(factorial(k - 1) * factorial(b + c + k - 1));
    return Rational(neg1_pow(i + j)) * Rational(factorial(b + j - 1) * factorial(c + i - 1)) * s;
}

inline bool verify_factorization(const MacMahonBundle& m) { return m.U == m.L * m.M; }

inline bool verify_inverse(const MacMahonBundle& m)
{
    const RatMatrix inv = m.T * m.D * m.L;
    if (!(m.M * inv == RatMatrix::identity(static_cast<size_t>(m.a))))
        return false;
    for (long i = 1; i <= m.a; ++i)
        for (long j = 1; j <= m.a; ++j)
            if (inv(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) != macmahon_inverse_entry(m.a, m.b, m.c, i, j))
                return false;
    return true;
}

struct BlockDecomposition {
    long a = 0, b = 0, c = 0, d = 0, p = 0;
    IntMatrix Q1, Q2, Q3, Q4;
    RatMatrix F;

    /// [[Q2, Q1], [Q3, Q4]]
    IntMatrix assemble() const
    {
        const size_t n = static_cast<size_t>(a + d);
        IntMatrix q(n, n);
        q.set_block(0, 0, Q2);
        q.set_block(0, static_cast<size_t>(a), Q1);
        q.set_block(static_cast<size_t>(a), 0, Q3);
        q.set_block(static_cast<size_t>(a), static_cast<size_t>(a), Q4);
        return q;
    }
};

inline BlockDecomposition build_blocks(long a, long b, long c, long d, long p)
{
    if (a < 1 || d < 1 || b < 0 || c < 0)
        throw std::invalid_argument("build_blocks needs a,d >= 1 and b,c >= 0" + detail::args({a, b, c, d, p}));
    const size_t na = static_cast<size_t>(a), nd = static_cast<size_t>(d);
    BlockDecomposition q{a, b, c, d, p, IntMatrix(na, nd), IntMatrix(na, na), IntMatrix(nd, na), IntMatrix(nd, nd), {}};
    auto idx = [](long i) { return static_cast<size_t>(i - 1); };
    for (long i = 1; i <= a; ++i) {
        for (long j = 1; j <= d; ++j)
            q.Q1(idx(i), idx(j)) = binom(2 * j - 1, -i + j + p);
        for (long j = 1; j <= a; ++j)
            q.Q2(idx(i), idx(j)) = binom(b + c, c - i + j);
    }
    for (long i = 1; i <= d; ++i) {
        for (long j = 1; j <= a; ++j)
            q.Q3(idx(i), idx(j)) = binom(b + c - 2 * i + 1, c - i + j - p);
        for (long j = 1; j <= d; ++j)
            q.Q4(idx(i), idx(j)) = binom(2 * (j - i), j - i);
    }
    // det Q2 = M(a,b,c) >= 1, so the solve cannot be singular
    const RatMatrix x = solve_exact(q.Q2, q.Q1);
    q.F = to_rational(q.Q4) - to_rational(q.Q3) * x;
    return q;
}

/// det F * M(a,b,c); equals E(a,b,c,d,p).
inline BigInt count_via_F(long a, long b, long c, long d, long p)
{
    if (d == 0)
        return macmahon(a, b, c);
    if (a == 0)
        return det_bareiss(build_matrix(even_spec(0, b, c, d, p)));
    const BlockDecomposition q = build_blocks(a, b, c, d, p);
    return to_integer(det_rational(q.F) * macmahon_q(a, b, c), "count_via_F" + detail::args({a, b, c, d, p}));
}

/// (Q2^{-1} Q1)_{i,j} by its double sum.
inline Rational q2inv_q1_entry(long a, long b, long c, long p, long i, long j)
{
    Rational s(0);
    for (long l = 1; l <= a; ++l)
        s += macmahon_inverse_entry(a, b, c, i, l) * Rational(binom(2 * j - 1, l + j - p - 1));
    return s;
}

/// (Q3 Q2^{-1} Q1)_{i,j} by the triple sum.
inline Rational q3_q2inv_q1_entry(long a, long b, long c, long p, long i, long j)
{
    Rational s(0);
    for (long t = 1; t <= a; ++t)
        s += Rational(binom(b + c - 2 * i + 1, c - i + t - p)) * q2inv_q1_entry(a, b, c, p, t, j);
    return s;
}

/// Both sum formulas against the matrix products.  `i` indexes rows of
/// Q2^{-1}Q1 (i <= a) for the double sum and rows of Q3 for the triple sum;
/// checks are done where each index pair is in range.
inline bool verify_triple_sum(long a, long b, long c, long p, long i, long j)
{
    if (a < 1 || i < 1 || j < 1)
        throw std::out_of_range("verify_triple_sum: indices start at 1");
    const long d = std::max(i, j);
    const BlockDecomposition q = build_blocks(a, b, c, d, p);
    const RatMatrix x = solve_exact(q.Q2, q.Q1);
    const RatMatrix y = to_rational(q.Q3) * x;
    const size_t r = static_cast<size_t>(i - 1), s = static_cast<size_t>(j - 1);
    bool ok = y(r, s) == q3_q2inv_q1_entry(a, b, c, p, i, j);
    if (i <= a)
        ok = ok && x(r, s) == q2inv_q1_entry(a, b, c, p, i, j);
    return ok;
}

namespace detail {

inline Rational sum_formula_rhs(long a, long b, long c, long p)
{
    return 1 - Rational(binom(a, a - p)) * checked_div(pochhammer(b, p) * pochhammer(c, a - p), pochhammer(b + c, a));
}

inline Rational sum_formula_lhs(long a, long b, long c, long p, bool p_positive_form)
{
    Rational total(0);
    for (long t = 1; t <= a; ++t) {
        Rational inner(0);
        for (long k = 1; k <= a; ++k) {
            const BigInt b1 = binom(k - 1, p), b2 = binom(k - 1, p - 1), bt = binom(k - 1, t - 1);
            if (bt == 0 || (b1 == 0 && b2 == 0) || (p_positive_form && b2 == 0))
                continue;
            Rational coeff;
            if (p_positive_form)
                coeff = (Rational(-b * k, p) + Rational(b + c - 1)) * Rational(b2);
            else
                coeff = Rational(-(b + p) * b1 + (c + k - p - 1) * b2);
            inner += coeff * Rational(bt) * pochhammer(b, k - t) * pochhammer(c, k - p - 1) /
                     Rational(factorial(k - 1) * factorial(b + c + k - 1));
        }
        total += Rational(neg1_pow(t) * binom(b + c - 1, c - p + t - 1) * factorial(c + t - 1)) * inner;
    }
    return Rational(neg1_pow(p) * factorial(b + p - 1)) * total;
}

inline Rational sum_formula_p0_lhs(long a, long b, long c)
{
    Rational total(0);
    for (long t = 0; t < a; ++t) {
        Rational inner(0);
        for (long k = t; k < a; ++k)
            inner += pochhammer(b, k - t) * Rational(binom(k, t) * binom(c + k - 1, k)) / Rational(factorial(b + c + k));
        total += Rational(neg1_pow(t)) * pochhammer(b - t, c + t) * inner;
    }
    return Rational(factorial(b)) * total;
}

} // namespace detail

/// The summation formula obtained by comparing det F at d = 1 with the
/// known count, plus its p = 0 and p > 0 forms.  Needs b + p >= 1; the
/// p = 0 form additionally needs c >= 1.  Summands whose binomial
/// factors vanish are zero for every c and are not evaluated.  pole_error propagates.
inline bool verify_sum_formula(long a, long b, long c, long p)
{
    detail::require(a >= 1 && b >= 0 && c >= 0 && 0 <= p && p <= a && b + p >= 1,
                    "verify_sum_formula" + detail::args({a, b, c, p}));
    const Rational rhs = detail::sum_formula_rhs(a, b, c, p);
    bool ok = detail::sum_formula_lhs(a, b, c, p, false) == rhs;
    if (p > 0)
        ok = ok && detail::sum_formula_lhs(a, b, c, p, true) == rhs;
    if (p == 0 && c >= 1)
        ok = ok && detail::sum_formula_p0_lhs(a, b, c) == 1 - checked_div(pochhammer(c, a), pochhammer(b + c, a));
    return ok;
}

} // namespace hexatile
