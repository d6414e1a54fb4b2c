#include "hexatile/hexmodel.hpp"
#include "hexatile/lgv.hpp"
#include "hexatile/schur.hpp"

#include <gtest/gtest.h>

using namespace hexatile;

TEST(LateralPoints, Starts)
{
    const HexSpec s = even_spec(4, 5, 3, 0, 0);
    EXPECT_EQ(lateral_start(s, 1), (Point{0, 0}));
    EXPECT_EQ(lateral_start(s, 2), (Point{-1, 1}));
    EXPECT_EQ(lateral_start(s, 4), (Point{-3, 3}));
    EXPECT_THROW(lateral_start(s, 0), std::out_of_range);
    EXPECT_THROW(lateral_start(s, 5), std::out_of_range);
}

TEST(LateralPoints, Ends)
{
    const HexSpec s = even_spec(4, 5, 3, 0, 0);
    EXPECT_EQ(lateral_end(s, 1), (Point{5, 3}));
    EXPECT_EQ(lateral_end(s, 4), (Point{2, 6}));
    EXPECT_EQ(lateral_end(even_spec(2, 2, 2, 0, 0), 2), (Point{1, 3}));
    EXPECT_THROW(lateral_end(s, 5), std::out_of_range);
}

TEST(IntrusivePoints, EvenCoincide)
{
    const auto pts = intrusive_points(even_spec(3, 3, 3, 1, 0));
    ASSERT_EQ(pts.starts.size(), 1u);
    EXPECT_EQ(pts.starts[0], (Point{1, 0}));
    EXPECT_EQ(pts.ends[0], (Point{1, 0}));

    const auto two = intrusive_points(even_spec(4, 5, 3, 2, 4));
    EXPECT_EQ(two.starts, two.ends);
    EXPECT_EQ(two.starts[0], (Point{-3, 4}));
    EXPECT_EQ(two.starts[1], (Point{-2, 5}));
}

TEST(IntrusivePoints, Odd)
{
    const auto pts = intrusive_points(odd_spec(4, 5, 3, 1, 3));
    EXPECT_EQ(pts.starts[0], (Point{-2, 4}));
    EXPECT_EQ(pts.ends[0], (Point{-3, 3}));
}

TEST(IntrusivePoints, EmptyForDZero)
{
    const auto pts = intrusive_points(even_spec(3, 3, 3, 0, 2));
    EXPECT_TRUE(pts.starts.empty());
    EXPECT_TRUE(pts.ends.empty());
}

TEST(AllPoints, LateralFirst)
{
    const auto pts = all_points(odd_spec(2, 2, 2, 1, 1));
    ASSERT_EQ(pts.starts.size(), 3u);
    EXPECT_EQ(pts.starts[0], (Point{0, 0}));
    EXPECT_EQ(pts.starts[2], (Point{0, 2}));
    EXPECT_EQ(pts.ends[2], (Point{-1, 1}));
}

TEST(PathCount, Examples)
{
    EXPECT_EQ(path_count({0, 0}, {6, 4}), 210);
    EXPECT_EQ(path_count({0, 0}, {-1, 0}), 0);
    EXPECT_EQ(path_count({0, 0}, {0, 0}), 1);
    EXPECT_EQ(path_count({0, 0}, {3, -1}), 0);
}

TEST(PathCount, TranslationInvariant)
{
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            for (long sx : {-7L, 0L, 5L})
                for (long sy : {-2L, 4L})
                    EXPECT_EQ(path_count({0, 0}, {x, y}), path_count({sx, sy}, {x + sx, y + sy}));
}

// path counts between the points reproduce the closed-form block entries
TEST(PathCount, BlockEntriesConsistency)
{
    for (long a = 1; a <= 8; ++a)
        for (long b = 0; b <= 8; ++b)
            for (long c = 0; c <= 8; ++c)
                for (long d = 1; d <= 4; ++d)
                    for (long p = 0; p <= a; ++p) {
                        const BlockDecomposition q = build_blocks(a, b, c, d, p);
                        ASSERT_EQ(q.assemble(), build_matrix(even_spec(a, b, c, d, p)))
                            << a << b << c << d << p;
                    }
}

TEST(PathCount, EvenIntrusiveToIntrusive)
{
    const auto pts = intrusive_points(even_spec(3, 4, 4, 4, 1));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            const long di = static_cast<long>(j) - static_cast<long>(i);
            EXPECT_EQ(path_count(pts.starts[i], pts.ends[j]), binom(2 * di, di));
        }
}

TEST(DamageFree, Examples)
{
    EXPECT_TRUE(is_damage_free(even_spec(2, 4, 2, 1, -1)));
    EXPECT_TRUE(is_damage_free(even_spec(2, 4, 2, 3, -2)));
    EXPECT_FALSE(is_damage_free(even_spec(2, 4, 2, 2, -1)));
    EXPECT_TRUE(is_damage_free(even_spec(2, 4, 2, 0, 1)));
    EXPECT_TRUE(is_damage_free(even_spec(2, 4, 2, 1, 3)));
    EXPECT_THROW(is_damage_free(odd_spec(2, 4, 2, 1, 0)), std::invalid_argument);
}

TEST(DamageFree, ImpliesMacMahon)
{
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 5; ++b)
            for (long c = 0; c <= 5; ++c)
                for (long d = 0; d <= 3; ++d)
                    for (long p = -6; p <= a + 6; ++p) {
                        const HexSpec s = even_spec(a, b, c, d, p);
                        if (is_damage_free(s))
                            ASSERT_EQ(lgv_determinant(s), macmahon(a, b, c)) << s.describe();
                    }
}

TEST(HexSpec, ValidateAndDescribe)
{
    EXPECT_THROW(even_spec(-1, 2, 2, 0, 0).validate(), std::invalid_argument);
    EXPECT_NO_THROW(even_spec(1, 2, 2, 0, -4).validate());
    EXPECT_EQ(odd_spec(4, 5, 3, 3, 3).describe(), "(a,b,c,d,p)=(4,5,3,3,3) odd");
    EXPECT_EQ(odd_spec(4, 5, 3, 3, 3).dimension(), 7);
    EXPECT_EQ(parse_parity("odd"), Parity::Odd);
    EXPECT_THROW(parse_parity("weird"), std::invalid_argument);
}
