#pragma once

// Damaged-hexagon parameters and the lattice coordinates of the starting and
// ending points of the path families that encode lozenge tilings.
//
// Coordinates are in the tilted integer lattice where paths take unit steps
// right (+1,0) and up (0,+1); the lowest lateral starting point is (0,0).

#include "hexatile/exactmath.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace hexatile {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline Parity parse_parity(const std::string& s)
{
    if (s == "even")
        return Parity::Even;
    if (s == "odd")
        return Parity::Odd;
    throw std::invalid_argument("parity must be 'even' or 'odd', got '" + s + "'");
}

/// An (a,b,c)-hexagon with an intrusion of length d at position p.
struct HexSpec {
    long a = 0;
    long b = 0;
    long c = 0;
    long d = 0;
    long p = 0;
    Parity parity = Parity::Even;

    void validate() const
    {
        if (a < 0 || b < 0 || c < 0 || d < 0)
            throw std::invalid_argument("side lengths and intrusion length must be nonnegative: " +
                                        describe());
    }

    long dimension() const { return a + d; }

    std::string describe() const
    {
        return "(a,b,c,d,p)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + "," + std::to_string(d) + "," + std::to_string(p) + ") " +
               to_string(parity);
    }

    auto operator<=>(const HexSpec&) const = default;
};

inline HexSpec even_spec(long a, long b, long c, long d, long p)
{
    return HexSpec{a, b, c, d, p, Parity::Even};
}

inline HexSpec odd_spec(long a, long b, long c, long d, long p)
{
    return HexSpec{a, b, c, d, p, Parity::Odd};
}

struct Point {
    long x = 0;
    long y = 0;

    auto operator<=>(const Point&) const = default;
};

/// i-th lateral starting point (1-based, counted right to left).
inline Point lateral_start(const HexSpec& spec, long i)
{
    if (i < 1 || i > spec.a)
        throw std::out_of_range("lateral start index " + std::to_string(i) + " outside [1," +
                                std::to_string(spec.a) + "]");
    return {1 - i, i - 1};
}

/// j-th lateral ending point (1-based).
inline Point lateral_end(const HexSpec& spec, long j)
{
    if (j < 1 || j > spec.a)
        throw std::out_of_range("lateral end index " + std::to_string(j) + " outside [1," +
                                std::to_string(spec.a) + "]");
    return {spec.b + 1 - j, spec.c + j - 1};
}

struct EndpointLists {
    std::vector<Point> starts;
    std::vector<Point> ends;
};

/// Intrusive points, ordered from lower left to upper right.
///
/// Even: the i-th start coincides with the i-th end at (-p+i, p+i-1), i.e.
/// d paths of length zero.  Odd: start (-p+i, p+i), end (-p+j-1, p+j-1).
inline EndpointLists intrusive_points(const HexSpec& spec)
{
    if (spec.d < 0)
        throw std::invalid_argument("negative intrusion length");
    EndpointLists out;
    out.starts.reserve(static_cast<size_t>(spec.d));
    out.ends.reserve(static_cast<size_t>(spec.d));
    const long p = spec.p;
    for (long i = 1; i <= spec.d; ++i) {
        if (spec.parity == Parity::Even) {
            out.starts.push_back({-p + i, p + i - 1});
            out.ends.push_back({-p + i, p + i - 1});
        } else {
            out.starts.push_back({-p + i, p + i});
            out.ends.push_back({-p + i - 1, p + i - 1});
        }
    }
    return out;
}

/// All starting and ending points: lateral first, then intrusive.
inline EndpointLists all_points(const HexSpec& spec)
{
    EndpointLists out;
    for (long i = 1; i <= spec.a; ++i)
        out.starts.push_back(lateral_start(spec, i));
    for (long j = 1; j <= spec.a; ++j)
        out.ends.push_back(lateral_end(spec, j));
    auto intr = intrusive_points(spec);
    out.starts.insert(out.starts.end(), intr.starts.begin(), intr.starts.end());
    out.ends.insert(out.ends.end(), intr.ends.begin(), intr.ends.end());
    return out;
}

/// Number of monotone lattice paths; zero when `to` is not reachable.
inline BigInt path_count(Point from, Point to)
{
    const long dx = to.x - from.x;
    const long dy = to.y - from.y;
    return binom(dx + dy, dx);
}

/// True when an even intrusion provably leaves the tiling count equal to
/// MacMahon's number: it sits too far left, too far right, or d = 0.
inline bool is_damage_free(const HexSpec& spec)
{
    if (spec.parity != Parity::Even)
        throw std::invalid_argument("is_damage_free is only defined for even intrusions");
    if (spec.d == 0)
        return true;
    const long left = std::max(-spec.d, -floor_div(spec.b + 1, 2));
    const long right = std::min(spec.a + spec.d, spec.a + floor_div(spec.c + 1, 2));
    return spec.p <= left || spec.p >= right;
}

} // namespace hexatile
