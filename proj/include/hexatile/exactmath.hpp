#pragma once

// Exact integers, rationals and the combinatorial primitives used by every
// other header.  BigInt and Rational are GMP's C++ classes; everything in
// this header keeps values canonical (mpq always reduced, den > 0).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hexatile {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an expression needs division by zero, e.g. a Pochhammer
/// symbol with negative index whose denominator vanishes.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error("pole: " + what) {}
};

/// Raised when a closed-form evaluator is called outside the parameter
/// window in which the formula is stated.
class validity_error : public std::domain_error {
public:
    explicit validity_error(const std::string& what)
        : std::domain_error("out of validity: " + what) {}
};

/// Raised when a quantity that must be an integer is not.  Always a bug
/// (or a wrong formula), never an input problem.
class integrality_error : public std::logic_error {
public:
    explicit integrality_error(const std::string& what)
        : std::logic_error("integrality assertion failed: " + what) {}
};

inline BigInt big(long v) { return BigInt(v); }

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw pole_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(BigInt(num), BigInt(den));
}

inline Rational checked_div(const Rational& num, const Rational& den)
{
    if (den == 0)
        throw pole_error("division by zero");
    return Rational(num / den);
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline BigInt to_integer(const Rational& r, const std::string& what)
{
    if (r.get_den() != 1)
        throw integrality_error(what + " = " + r.get_str());
    return r.get_num();
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline int sign_of(const BigInt& v) { return sgn(v); }

/// n!  Rejects negative n.
inline BigInt factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative number " + std::to_string(n));
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Binomial coefficient with the lattice-path convention: zero whenever
/// k < 0 or k > n, so in particular zero for every negative n.
inline BigInt binom(long n, long k)
{
    if (k < 0 || k > n)
        return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Rational factorial_q(long n) { return Rational(factorial(n)); }

/// Rising factorial (x)_n = x(x+1)...(x+n-1).  For n = -m < 0 it is
/// 1/(x-m)_m, the extension satisfying (x)_{m+n} = (x)_m (x+m)_n.
inline Rational pochhammer(const Rational& x, long n)
{
    Rational r(1);
    if (n >= 0) {
        Rational t = x;
        for (long i = 0; i < n; ++i) {
            r *= t;
            t += 1;
        }
        return r;
    }
    const long m = -n;
    Rational t = x - m;
    for (long i = 0; i < m; ++i) {
        r *= t;
        t += 1;
    }
    if (r == 0)
        throw pole_error("(" + x.get_str() + ")_" + std::to_string(n));
    return Rational(1 / r);
}

inline Rational pochhammer(long x, long n) { return pochhammer(Rational(x), n); }

/// Falling factorial x(x-1)...(x-n+1); for n = -m < 0 it is
/// 1/((x+1)(x+2)...(x+m)).
inline Rational falling_factorial(const Rational& x, long n)
{
    Rational r(1);
    if (n >= 0) {
        Rational t = x;
        for (long i = 0; i < n; ++i) {
            r *= t;
            t -= 1;
        }
        return r;
    }
    Rational t = x + 1;
    for (long i = 0; i < -n; ++i) {
        r *= t;
        t += 1;
    }
    if (r == 0)
        throw pole_error("falling (" + x.get_str() + ")_" + std::to_string(n));
    return Rational(1 / r);
}

inline Rational falling_factorial(long x, long n) { return falling_factorial(Rational(x), n); }

inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

/// (-1)^n as +1/-1.
inline long neg1_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Ceiling of sqrt(v) for v >= 0.
inline BigInt isqrt_ceil(const BigInt& v)
{
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r < v)
        ++r;
    return r;
}

inline BigInt pow_int(long base, unsigned long exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && (exp & 1))
        r = -r;
    return r;
}

} // namespace hexatile
