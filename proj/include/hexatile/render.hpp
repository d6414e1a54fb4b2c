#pragma once

// SVG drawing of a damaged hexagon and, optionally, the lozenge tiling that
// corresponds to a path family.
//
// Triangles are addressed by (u, r): row r spans heights r..r+1 and u is the
// doubled horizontal coordinate of the triangle's vertical axis.  In row r,
// triangles with u = r+1 (mod 2) point up and the others point down.  A
// lattice point (x,y) is the midpoint of the horizontal edge at height x+y,
// u = 2a-1+x-y.

#include "hexatile/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace hexatile {

constexpr double svg_unit_px = 40.0; // one lattice unit

struct Triangle {
    long u = 0;
    long r = 0;

    bool up() const { return ((u - r - 1) % 2 + 2) % 2 == 0; }
    auto operator<=>(const Triangle&) const = default;
};

struct Lozenge {
    Triangle first, second;
};

namespace detail {

struct HexGeometry {
    long a, b, c;

    bool vertex_inside(long u, long h) const
    {
        return 0 <= h && h <= b + c && u - h <= 2 * a && u + h <= 2 * a + 2 * b && u - h >= -2 * c && u + h >= 0;
    }

    std::vector<std::pair<long, long>> corners(const Triangle& t) const
    {
        if (t.up())
            return {{t.u - 1, t.r}, {t.u + 1, t.r}, {t.u, t.r + 1}};
        return {{t.u - 1, t.r + 1}, {t.u + 1, t.r + 1}, {t.u, t.r}};
    }

    bool inside(const Triangle& t) const
    {
        for (auto [u, h] : corners(t))
            if (!vertex_inside(u, h))
                return false;
        return true;
    }

    std::set<Triangle> all() const
    {
        std::set<Triangle> out;
        for (long r = 0; r < b + c; ++r)
            for (long u = -2 * c - 1; u <= 2 * a + 2 * b + 1; ++u)
                if (Triangle t{u, r}; inside(t))
                    out.insert(t);
        return out;
    }
};

inline std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

} // namespace detail

/// The 2d triangles of the intrusion, bottom to top.
inline std::vector<Triangle> intrusion_triangles(const HexSpec& spec)
{
    std::vector<Triangle> out;
    const long u = spec.parity == Parity::Even ? 2 * spec.a - 2 * spec.p : 2 * spec.a - 2 * spec.p - 1;
    for (long r = 0; r < 2 * spec.d; ++r)
        out.push_back({u, r});
    return out;
}

/// Lozenges crossed by the paths plus the horizontal-edge lozenges that fill
/// what is left.  Throws std::logic_error if the family does not induce a
/// tiling of the damaged hexagon.
inline std::vector<Lozenge> tiling_lozenges(const HexSpec& spec, const PathFamily& family)
{
    const detail::HexGeometry geo{spec.a, spec.b, spec.c};
    std::set<Triangle> free = geo.all();
    for (const Triangle& t : intrusion_triangles(spec))
        free.erase(t);
    std::vector<Lozenge> out;
    auto take = [&](Triangle t1, Triangle t2) {
        if (!free.count(t1) || !free.count(t2))
            throw std::logic_error("path family does not induce a tiling of " + spec.describe());
        free.erase(t1);
        free.erase(t2);
        out.push_back({t1, t2});
    };
    for (const MonotonePath& path : family.paths)
        for (size_t k = 0; k + 1 < path.points.size(); ++k) {
            const Point p = path.points[k], q = path.points[k + 1];
            const long r = p.x + p.y, u = 2 * spec.a - 1 + p.x - p.y;
            take({u, r}, {q.x > p.x ? u + 1 : u - 1, r});
        }
    while (!free.empty()) {
        const Triangle t = *free.begin();
        if (t.up())
            throw std::logic_error("unpaired triangle in tiling of " + spec.describe());
        take(t, {t.u, t.r + 1});
    }
    return out;
}

/// SVG 1.1 drawing: hexagon outline, one <g class="intrusion"> holding the
/// removed triangles (omitted when d = 0), and, given a family, one
/// <polygon class="lozenge ..."> per lozenge plus the paths as polylines.
inline std::string render_svg(const HexSpec& spec, const std::optional<PathFamily>& family = std::nullopt)
{
    spec.validate();
    const detail::HexGeometry geo{spec.a, spec.b, spec.c};
    const double sx = svg_unit_px / 2.0, sy = svg_unit_px * std::sqrt(3.0) / 2.0, margin = svg_unit_px;
    const long umin = -2 * spec.c, umax = 2 * spec.a + 2 * spec.b, top = spec.b + spec.c;
    const double width = (umax - umin) * sx + 2 * margin, height = top * sy + 2 * margin;
    auto X = [&](double u) { return detail::fmt((u - umin) * sx + margin); };
    auto Y = [&](double h) { return detail::fmt((top - h) * sy + margin); };
    auto poly = [&](const std::vector<std::pair<long, long>>& pts) {
        std::string s;
        for (auto [u, h] : pts)
            s += (s.empty() ? "" : " ") + X(double(u)) + "," + Y(double(h));
        return s;
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fmt(width)
       << "\" height=\"" << detail::fmt(height) << "\" viewBox=\"0 0 " << detail::fmt(width) << " "
       << detail::fmt(height) << "\">\n"
       << "<title>" << spec.describe() << "</title>\n";

    if (family) {
        for (const Lozenge& z : tiling_lozenges(spec, *family)) {
            // vertical lozenges straddle rows; the others lean left or right
            const char* kind = z.first.r != z.second.r ? "vertical" : (z.second.u > z.first.u ? "right" : "left");
            std::vector<std::pair<long, long>> pts;
            const Triangle& t = z.first;
            if (z.first.r != z.second.r)
                pts = {{t.u, t.r}, {t.u + 1, t.r + 1}, {t.u, t.r + 2}, {t.u - 1, t.r + 1}};
            else if (z.second.u > t.u)
                pts = {{t.u - 1, t.r}, {t.u + 1, t.r}, {t.u + 2, t.r + 1}, {t.u, t.r + 1}};
            else
                pts = {{t.u - 1, t.r}, {t.u + 1, t.r}, {t.u, t.r + 1}, {t.u - 2, t.r + 1}};
            os << "<polygon class=\"lozenge " << kind << "\" points=\"" << poly(pts) << "\"/>\n";
        }
    }

    const std::vector<std::pair<long, long>> outline = {
        {0, 0}, {2 * spec.a, 0}, {2 * spec.a + spec.b, spec.b}, {2 * spec.a + spec.b - spec.c, spec.b + spec.c},
        {spec.b - spec.c, spec.b + spec.c}, {-spec.c, spec.c}};
    os << "<polygon class=\"hexagon\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" << poly(outline)
       << "\"/>\n";

    if (spec.d > 0) {
        os << "<g class=\"intrusion\" fill=\"#444\">\n";
        for (const Triangle& t : intrusion_triangles(spec))
            if (geo.inside(t))
                os << "<polygon points=\"" << poly(geo.corners(t)) << "\"/>\n";
        os << "</g>\n";
    }

    if (family) {
        os << "<g class=\"paths\" fill=\"none\" stroke=\"blue\" stroke-width=\"3\">\n";
        for (const MonotonePath& path : family->paths) {
            os << "<polyline points=\"";
            for (size_t k = 0; k < path.points.size(); ++k) {
                const Point p = path.points[k];
                os << (k ? " " : "") << X(double(2 * spec.a - 1 + p.x - p.y)) << "," << Y(double(p.x + p.y));
            }
            os << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace hexatile
