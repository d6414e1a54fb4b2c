#include "hexatile/lgv.hpp"
#include "hexatile/oracle.hpp"
#include "hexatile/render.hpp"

#include <gtest/gtest.h>


using namespace hexatile;

namespace {

size_t count_of(const std::string& s, const std::string& needle)
{
    size_t n = 0;
    for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST(EnumeratePaths, Examples)
{
    EXPECT_EQ(enumerate_paths({0, 0}, {1, 1}).size(), 2u);
    const auto empty = enumerate_paths({0, 0}, {0, 0});
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty[0].length(), 0u);
    EXPECT_EQ(enumerate_paths({0, 0}, {3, 2}).size(), 10u);
    EXPECT_TRUE(enumerate_paths({0, 0}, {-1, 2}).empty());
}

TEST(EnumeratePaths, LengthMatchesPathCount)
{
    for (long x = -1; x <= 5; ++x)
        for (long y = -1; y <= 5; ++y) {
            const auto paths = enumerate_paths({2, -1}, {2 + x, -1 + y});
            ASSERT_EQ(BigInt(long(paths.size())), path_count({2, -1}, {2 + x, -1 + y}));
            for (const auto& p : paths) {
                ASSERT_TRUE(p.valid());
                ASSERT_EQ(p.start(), (Point{2, -1}));
                ASSERT_EQ(p.end(), (Point{2 + x, -1 + y}));
            }
        }
}

TEST(EnumeratePaths, Cap)
{
    EXPECT_THROW(enumerate_paths({0, 0}, {12, 12}, 1000), std::length_error);
}

TEST(PermutationSign, Values)
{
    EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
    EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
    EXPECT_EQ(permutation_sign({1, 2, 0}), 1);
}

TEST(SignedCount, Examples)
{
    EXPECT_EQ(signed_count(even_spec(2, 2, 2, 0, 0)), 20);
    EXPECT_EQ(signed_count(odd_spec(4, 5, 3, 3, 3)), -8008);
    EXPECT_EQ(signed_count(even_spec(1, 2, 2, 1, 0)), 3);
    EXPECT_EQ(signed_count(even_spec(4, 5, 3, 2, 4)), 12348);
}

TEST(SignedCount, EvenSweepIdentityOnly)
{
    for (long a = 0; a <= 5; ++a)
        for (long d = 0; a + d <= 5; ++d)
            for (long b = 0; b <= 4; ++b)
                for (long c = 0; c <= 4; ++c)
                    for (long p = -d; p <= a + d; ++p) {
                        const HexSpec s = even_spec(a, b, c, d, p);
                        const SignedCountResult r = signed_count_detailed(s);
                        ASSERT_EQ(r.value, lgv_determinant(s)) << s.describe();
                        for (const auto& [perm, n] : r.by_permutation) {
                            for (size_t i = 0; i < perm.size(); ++i)
                                ASSERT_EQ(perm[i], i) << s.describe();
                        }
                    }
}

TEST(SignedCount, OddSweep)
{
    for (long a = 0; a <= 5; ++a)
        for (long d = 0; a + d <= 5; ++d)
            for (long b = 0; b <= 4; ++b)
                for (long c = 0; c <= 4; ++c)
                    for (long p = 0; p <= a + 1; ++p) {
                        const HexSpec s = odd_spec(a, b, c, d, p);
                        ASSERT_EQ(signed_count(s), lgv_determinant(s)) << s.describe();
                    }
}

TEST(SignedCount, OddUsesSingleNonIdentityPermutation)
{
    const SignedCountResult r = signed_count_detailed(odd_spec(4, 5, 3, 3, 3));
    ASSERT_EQ(r.by_permutation.size(), 1u);
    EXPECT_EQ(permutation_sign(r.by_permutation.begin()->first), -1);
}

TEST(SignedCount, RejectsLargeFamilies)
{
    EXPECT_THROW(signed_count(even_spec(5, 3, 3, 3, 1)), std::length_error);
}

TEST(FirstTiling, Examples)
{
    const auto free = first_tiling(even_spec(3, 2, 2, 1, -2));
    ASSERT_TRUE(free.has_value());
    EXPECT_EQ(free->paths.size(), 4u);

    EXPECT_FALSE(first_tiling(odd_spec(3, 3, 3, 1, 3)).has_value());
    EXPECT_FALSE(first_tiling(odd_spec(3, 3, 3, 2, -1)).has_value());

    const auto fam = first_tiling(even_spec(4, 5, 3, 2, 4));
    ASSERT_TRUE(fam.has_value());
    ASSERT_EQ(fam->paths.size(), 6u);
    size_t zero_length = 0;
    for (const auto& p : fam->paths)
        zero_length += p.length() == 0;
    EXPECT_EQ(zero_length, 2u);
}

TEST(FirstTiling, PathsAreDisjoint)
{
    const auto fam = first_tiling(odd_spec(4, 5, 3, 3, 3));
    ASSERT_TRUE(fam.has_value());
    EXPECT_EQ(fam->sign(), -1);
    std::set<Point> seen;
    for (const auto& p : fam->paths)
        for (const Point& q : p.points)
            ASSERT_TRUE(seen.insert(q).second);
}

TEST(Render, IntrusionMarker)
{
    const std::string svg = render_svg(even_spec(3, 4, 5, 1, 0));
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_EQ(count_of(svg, "class=\"intrusion\""), 1u);
    EXPECT_EQ(count_of(svg, "class=\"hexagon\""), 1u);
    EXPECT_EQ(count_of(svg, "class=\"lozenge"), 0u);
    EXPECT_EQ(intrusion_triangles(even_spec(3, 4, 5, 1, 0)).size(), 2u);
}

TEST(Render, NoIntrusionForDZero)
{
    const std::string svg = render_svg(even_spec(3, 4, 5, 0, 0), first_tiling(even_spec(3, 4, 5, 0, 0)));
    EXPECT_EQ(count_of(svg, "class=\"intrusion\""), 0u);
    EXPECT_EQ(count_of(svg, "class=\"lozenge"), 3u * 4 + 4 * 5 + 5 * 3);
}

TEST(Render, LozengeCountMatchesArea)
{
    for (const HexSpec& s : {even_spec(2, 2, 2, 1, 1), even_spec(4, 5, 3, 2, 4), odd_spec(4, 5, 3, 3, 3),
                             odd_spec(3, 2, 3, 1, 1), even_spec(3, 3, 2, 1, 2)}) {
        const auto fam = first_tiling(s);
        ASSERT_TRUE(fam.has_value()) << s.describe();
        const size_t triangles = detail::HexGeometry{s.a, s.b, s.c}.all().size();
        const auto lozenges = tiling_lozenges(s, *fam);
        EXPECT_EQ(lozenges.size() * 2, triangles - 2 * size_t(s.d)) << s.describe();
        const std::string svg = render_svg(s, fam);
        EXPECT_EQ(count_of(svg, "class=\"lozenge"), lozenges.size());
    }
}

TEST(Render, Deterministic)
{
    const HexSpec s = even_spec(2, 3, 2, 1, 1);
    EXPECT_EQ(render_svg(s, first_tiling(s)), render_svg(s, first_tiling(s)));
}

TEST(Render, TrianglesCountIsHexagonArea)
{
    const size_t n = detail::HexGeometry{2, 3, 4}.all().size();
    EXPECT_EQ(n, 2u * (2 * 3 + 3 * 4 + 4 * 2));
}
