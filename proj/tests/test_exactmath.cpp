#include "hexatile/exactmath.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hexatile;

TEST(Binom, OutsideRangeIsZero)
{
    EXPECT_EQ(binom(-1, 3), 0);
    EXPECT_EQ(binom(-5, 0), 0);
    EXPECT_EQ(binom(4, -1), 0);
    EXPECT_EQ(binom(4, 5), 0);
}

TEST(Binom, SmallValues)
{
    EXPECT_EQ(binom(5, 2), 10);
    EXPECT_EQ(binom(0, 0), 1);
    EXPECT_EQ(binom(80, 40), BigInt("107507208733336176461620"));
}

TEST(Binom, PascalRecursionRandom)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> nd(1, 200);
    for (int t = 0; t < 2000; ++t) {
        const long n = nd(rng);
        const long k = std::uniform_int_distribution<long>(0, n)(rng);
        ASSERT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k)) << n << "," << k;
    }
}

TEST(Factorial, Values)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
    EXPECT_THROW(factorial(-1), std::invalid_argument);
}

TEST(Pochhammer, Examples)
{
    EXPECT_EQ(pochhammer(3, 2), 12);
    EXPECT_EQ(pochhammer(Rational(7, 3), 0), 1);
    EXPECT_EQ(pochhammer(-4, 0), 1);
    EXPECT_EQ(pochhammer(Rational(1, 2), 2), Rational(3, 4));
    EXPECT_EQ(pochhammer(5, -2), Rational(1, 12));
}

TEST(Pochhammer, NegativeIndexPole)
{
    // (2)_{-2} = 1/((0)(1))
    EXPECT_THROW(pochhammer(2, -2), pole_error);
    EXPECT_EQ(pochhammer(2, -1), 1);
}

TEST(Pochhammer, ZeroFactorIsNotAPole)
{
    EXPECT_EQ(pochhammer(-2, 3), 0);
    EXPECT_EQ(pochhammer(0, 1), 0);
}

TEST(Pochhammer, OneGivesFactorial)
{
    for (long n = 0; n <= 30; ++n)
        EXPECT_EQ(pochhammer(1, n), Rational(factorial(n)));
}

TEST(Pochhammer, Splicing)
{
    size_t checked = 0;
    for (long xn = -12; xn <= 12; ++xn) {
        const Rational x = make_rational(xn, 2);
        for (long m = -5; m <= 5; ++m)
            for (long n = -5; n <= 5; ++n) {
                Rational lhs, rhs;
                try {
                    lhs = pochhammer(x, m + n);
                    rhs = pochhammer(x, m) * pochhammer(x + m, n);
                } catch (const pole_error&) {
                    continue;
                }
                ASSERT_EQ(lhs, rhs) << x << " " << m << " " << n;
                ++checked;
            }
    }
    EXPECT_GT(checked, 2000u);
}

TEST(FallingFactorial, Values)
{
    EXPECT_EQ(falling_factorial(5, 2), 20);
    EXPECT_EQ(falling_factorial(5, 0), 1);
    // (x)_{(-m)} = 1/((x+1)...(x+m))
    EXPECT_EQ(falling_factorial(2, -2), Rational(1, 12));
    EXPECT_THROW(falling_factorial(-1, -1), pole_error);
}

TEST(Rational, Canonical)
{
    const Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(r * make_rational(-2, 3), 1);
    EXPECT_EQ(Rational(0).get_den(), 1);
    EXPECT_THROW(make_rational(1, 0), pole_error);
    EXPECT_THROW(checked_div(Rational(1), Rational(0)), pole_error);
}

TEST(Rational, FieldAxiomsRandom)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> v(-1000, 1000);
    auto rnd = [&] {
        long den = 0;
        while (den == 0)
            den = v(rng);
        return make_rational(v(rng), den);
    };
    for (int t = 0; t < 500; ++t) {
        const Rational x = rnd(), y = rnd(), z = rnd();
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x * (y + z), x * y + x * z);
        if (x != 0)
            ASSERT_EQ(x * checked_div(Rational(1), x), 1);
    }
}

TEST(ToInteger, RejectsFractions)
{
    EXPECT_EQ(to_integer(make_rational(10, 2), "x"), 5);
    EXPECT_THROW(to_integer(Rational(1, 2), "x"), integrality_error);
}

TEST(IntegerHelpers, FloorCeilSign)
{
    EXPECT_EQ(floor_div(-3, 2), -2);
    EXPECT_EQ(floor_div(3, 2), 1);
    EXPECT_EQ(ceil_div(3, 2), 2);
    EXPECT_EQ(ceil_div(-3, 2), -1);
    EXPECT_EQ(neg1_pow(-3), -1);
    EXPECT_EQ(neg1_pow(4), 1);
    EXPECT_EQ(pow_int(4, 3), 64);
    EXPECT_EQ(pow_int(7, 0), 1);
}
