#include "hexatile/detkernel.hpp"
#include "hexatile/formulas.hpp"
#include "hexatile/schur.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hexatile;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, size_t n, long lo, long hi)
{
    std::uniform_int_distribution<long> v(lo, hi);
    return IntMatrix::generate(n, n, [&](size_t, size_t) { return BigInt(v(rng)); });
}

IntMatrix macmahon_matrix(long a, long b, long c)
{
    return IntMatrix::generate(static_cast<size_t>(a), static_cast<size_t>(a), [&](size_t i, size_t j) {
        return binom(b + c, b + static_cast<long>(i) - static_cast<long>(j));
    });
}

} // namespace

TEST(Bareiss, Examples)
{
    EXPECT_EQ(det_bareiss(IntMatrix(2, 2, {1, 2, 3, 4})), -2);
    EXPECT_EQ(det_bareiss(IntMatrix::identity(5)), 1);
    EXPECT_EQ(det_bareiss(macmahon_matrix(3, 1, 1)), 4);
    EXPECT_EQ(det_bareiss(IntMatrix(0, 0)), 1);
    EXPECT_THROW(det_bareiss(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Bareiss, NeedsPivoting)
{
    EXPECT_EQ(det_bareiss(IntMatrix(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})), -1);
    EXPECT_EQ(det_bareiss(IntMatrix(3, 3, {0, 0, 1, 0, 2, 0, 3, 0, 0})), -6);
}

TEST(Modular, Examples)
{
    EXPECT_EQ(det_modular(IntMatrix(3, 3)), 0);
    EXPECT_EQ(det_modular(IntMatrix(2, 2, {1, 2, 3, 4})), -2);
    EXPECT_EQ(det_modular(IntMatrix::identity(7)), 1);
    EXPECT_THROW(det_modular(IntMatrix(3, 2)), std::invalid_argument);
}

TEST(Modular, RandomSignMatrices)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        IntMatrix m = random_matrix(rng, 10, 0, 1);
        for (auto i = 0u; i < 10; ++i)
            for (auto j = 0u; j < 10; ++j)
                m(i, j) = m(i, j) == 0 ? -1 : 1;
        ASSERT_EQ(det_modular(m), det_bareiss(m));
    }
}

TEST(Modular, AgreesWithBareissRandom)
{
    std::mt19937_64 rng(42);
    for (size_t n = 1; n <= 12; ++n)
        for (int t = 0; t < 6; ++t) {
            const IntMatrix m = random_matrix(rng, n, -1'000'000, 1'000'000);
            ASSERT_EQ(det_modular(m), det_bareiss(m)) << "n=" << n;
            ASSERT_EQ(det_modular(m, 1), det_bareiss(m));
        }
}

TEST(Modular, ThreadCountDoesNotChangeResult)
{
    const IntMatrix m = macmahon_matrix(20, 20, 20);
    const BigInt v = det_modular(m, 1);
    EXPECT_EQ(det_modular(m, 4), v);
    EXPECT_EQ(v, macmahon(20, 20, 20));
}

TEST(Determinant, Multiplicative)
{
    std::mt19937_64 rng(3);
    for (size_t n = 1; n <= 7; ++n)
        for (int t = 0; t < 5; ++t) {
            const IntMatrix a = random_matrix(rng, n, -9, 9), b = random_matrix(rng, n, -9, 9);
            ASSERT_EQ(det_bareiss(a * b), det_bareiss(a) * det_bareiss(b));
        }
}

TEST(Determinant, RowSwapAndDuplicateRow)
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        IntMatrix m = random_matrix(rng, 6, -50, 50);
        const BigInt d = det_bareiss(m);
        m.swap_rows(1, 4);
        ASSERT_EQ(det_bareiss(m), -d);
        for (size_t j = 0; j < 6; ++j)
            m(2, j) = m(0, j);
        ASSERT_EQ(det_bareiss(m), 0);
        ASSERT_EQ(det_modular(m), 0);
    }
}

TEST(Rational, Determinant)
{
    RatMatrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(1, 1) = Rational(1, 3);
    EXPECT_EQ(det_rational(m), Rational(1, 6));
    RatMatrix one(1, 1);
    one(0, 0) = Rational(-7, 9);
    EXPECT_EQ(det_rational(one), Rational(-7, 9));
    EXPECT_EQ(det_rational(RatMatrix(0, 0)), 1);
}

TEST(Solve, Examples)
{
    std::mt19937_64 rng(1);
    const IntMatrix rhs = random_matrix(rng, 4, -5, 5);
    EXPECT_EQ(solve_exact(IntMatrix::identity(4), rhs), to_rational(rhs));

    const RatMatrix half = solve_exact(IntMatrix(2, 2, {2, 0, 0, 2}), IntMatrix::identity(2));
    EXPECT_EQ(half(0, 0), Rational(1, 2));
    EXPECT_EQ(half(0, 1), 0);
    EXPECT_EQ(half(1, 1), Rational(1, 2));

    EXPECT_THROW(solve_exact(IntMatrix(2, 2, {1, 2, 2, 4}), IntMatrix::identity(2)), singular_error);
}

TEST(Solve, MacMahonInverseMatchesLemma)
{
    const IntMatrix m = macmahon_matrix(4, 3, 2);
    const MacMahonBundle bundle = build_bundle(4, 3, 2);
    EXPECT_EQ(solve_exact(m, IntMatrix::identity(4)), bundle.T * bundle.D * bundle.L);
}

TEST(Solve, ReproducesRhs)
{
    std::mt19937_64 rng(17);
    for (size_t n = 1; n <= 8; ++n) {
        const IntMatrix m = random_matrix(rng, n, -20, 20);
        if (det_bareiss(m) == 0)
            continue;
        const IntMatrix rhs = IntMatrix::generate(n, 3, [&](size_t, size_t) { return BigInt(long(rng() % 41) - 20); });
        ASSERT_EQ(to_rational(m) * solve_exact(m, rhs), to_rational(rhs));
    }
}

TEST(SolveSystem, Statuses)
{
    RatMatrix a(3, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    a(2, 0) = 1;
    a(2, 1) = 1;
    auto s = solve_system(a, {Rational(2), Rational(3), Rational(5)});
    ASSERT_EQ(s.status, SystemStatus::Unique);
    EXPECT_EQ(s.x[0], 2);
    EXPECT_EQ(s.x[1], 3);

    s = solve_system(a, {Rational(2), Rational(3), Rational(6)});
    EXPECT_EQ(s.status, SystemStatus::Inconsistent);

    RatMatrix rank1(2, 2);
    rank1(0, 0) = rank1(0, 1) = rank1(1, 0) = rank1(1, 1) = 1;
    s = solve_system(rank1, {Rational(1), Rational(1)});
    EXPECT_EQ(s.status, SystemStatus::Underdetermined);
    EXPECT_EQ(s.rank, 1u);
}

TEST(Matrix, BlocksAndMinors)
{
    const IntMatrix m(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    EXPECT_EQ(m.block(1, 1, 2, 2), IntMatrix(2, 2, {5, 6, 8, 9}));
    EXPECT_EQ(m.minor_matrix({0}, {2}), IntMatrix(2, 2, {4, 5, 7, 8}));
    EXPECT_EQ(m.minor_matrix({0, 2}, {0, 2}), IntMatrix(1, 1, {5}));
    EXPECT_THROW(m.block(2, 2, 2, 2), std::out_of_range);
    IntMatrix z(3, 3);
    z.set_block(1, 0, IntMatrix(1, 2, {7, 7}));
    EXPECT_EQ(z(1, 1), 7);
}
