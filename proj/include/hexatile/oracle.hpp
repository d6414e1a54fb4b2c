#pragma once

// Brute-force signed counting of vertex-disjoint lattice path families, the
// ground truth the determinant code is tested against.  Paths of length zero
// occupy their single point.

#include "hexatile/hexmodel.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hexatile {

struct MonotonePath {
    std::vector<Point> points;

    Point start() const { return points.front(); }
    Point end() const { return points.back(); }
    size_t length() const { return points.size() - 1; }

    bool valid() const
    {
        if (points.empty())
            return false;
        for (size_t i = 1; i < points.size(); ++i) {
            const long dx = points[i].x - points[i - 1].x, dy = points[i].y - points[i - 1].y;
            if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1)))
                return false;
        }
        return true;
    }
};

/// Sign of a permutation given as images of 0..n-1.
inline int permutation_sign(const std::vector<size_t>& perm)
{
    int s = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                s = -s;
    return s;
}

struct PathFamily {
    std::vector<size_t> permutation; // start i is joined to end permutation[i]
    std::vector<MonotonePath> paths;

    int sign() const { return permutation_sign(permutation); }
};

constexpr std::uint64_t default_path_cap = 1'000'000;
constexpr long oracle_max_paths = 7;

inline std::vector<MonotonePath> enumerate_paths(Point from, Point to, std::uint64_t cap = default_path_cap)
{
    const BigInt n = path_count(from, to);
    if (n > BigInt(std::to_string(cap)))
        throw std::length_error("path enumeration cap exceeded: " + n.get_str() + " paths");
    std::vector<MonotonePath> out;
    if (n == 0)
        return out;
    out.reserve(n.get_ui());
    MonotonePath cur;
    cur.points.push_back(from);
    auto rec = [&](auto&& self, Point p) -> void {
        if (p == to) {
            out.push_back(cur);
            return;
        }
        for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}}) {
            if (q.x > to.x || q.y > to.y)
                continue;
            cur.points.push_back(q);
            self(self, q);
            cur.points.pop_back();
        }
    };
    rec(rec, from);
    return out;
}

struct SignedCountResult {
    BigInt value;
    std::map<std::vector<size_t>, BigInt> by_permutation; // only nonzero entries
};

namespace detail {

/// Depth-first search over path families.  Starts are processed intrusive
/// first; the last start is counted by dynamic programming instead of
/// enumeration.
class FamilySearch {
public:
    FamilySearch(const HexSpec& spec, std::uint64_t cap)
        : pts_(all_points(spec)), n_(pts_.starts.size()), cap_(cap)
    {
        if (static_cast<long>(n_) > oracle_max_paths)
            throw std::length_error("oracle limited to a+d <= " + std::to_string(oracle_max_paths) + ": " +
                                    spec.describe());
        minx_ = maxx_ = pts_.starts.empty() ? 0 : pts_.starts[0].x;
        miny_ = maxy_ = pts_.starts.empty() ? 0 : pts_.starts[0].y;
        for (const auto* v : {&pts_.starts, &pts_.ends})
            for (Point q : *v) {
                minx_ = std::min(minx_, q.x);
                maxx_ = std::max(maxx_, q.x);
                miny_ = std::min(miny_, q.y);
                maxy_ = std::max(maxy_, q.y);
            }
        width_ = maxx_ - minx_ + 1;
        occupied_.assign(static_cast<size_t>(width_ * (maxy_ - miny_ + 1)), 0);
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (path_count(pts_.starts[i], pts_.ends[j]) > BigInt(std::to_string(cap_)))
                    throw std::length_error("path enumeration cap exceeded for pair (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
        const size_t a = static_cast<size_t>(spec.a);
        for (size_t i = a; i < n_; ++i)
            order_.push_back(i);
        for (size_t i = 0; i < a; ++i)
            order_.push_back(i);
        perm_.assign(n_, n_);
        used_.assign(n_, false);
        paths_.resize(n_);
    }

    SignedCountResult count()
    {
        counts_.clear();
        if (n_ == 0) {
            counts_[{}] = 1;
        } else {
            mode_ = Mode::Count;
            place(0);
        }
        SignedCountResult r;
        for (auto& [perm, n] : counts_) {
            if (n == 0)
                continue;
            BigInt v(std::to_string(n));
            r.value += permutation_sign(perm) * v;
            r.by_permutation.emplace(perm, v);
        }
        return r;
    }

    std::optional<PathFamily> first()
    {
        if (n_ == 0)
            return PathFamily{};
        mode_ = Mode::First;
        found_.reset();
        place(0);
        return found_;
    }

private:
    enum class Mode { Count, First };

    char& occ(Point q) { return occupied_[static_cast<size_t>((q.y - miny_) * width_ + (q.x - minx_))]; }

    bool done() const { return mode_ == Mode::First && found_.has_value(); }

    void place(size_t level)
    {
        const size_t s = order_[level];
        const Point from = pts_.starts[s];
        if (occ(from))
            return;
        for (size_t e = 0; e < n_ && !done(); ++e) {
            if (used_[e])
                continue;
            const Point to = pts_.ends[e];
            if (to.x < from.x || to.y < from.y || occ(to))
                continue;
            used_[e] = true;
            perm_[s] = e;
            if (level + 1 == n_ && mode_ == Mode::Count)
                add(perm_, count_last(from, to));
            else
                walk(level, from, to);
            used_[e] = false;
            perm_[s] = n_;
        }
    }

    void walk(size_t level, Point from, Point to)
    {
        auto& path = paths_[order_[level]].points;
        path.clear();
        auto rec = [&](auto&& self, Point q) -> void {
            if (done())
                return;
            occ(q) = 1;
            path.push_back(q);
            if (q == to) {
                if (level + 1 == n_)
                    finish();
                else
                    place(level + 1);
            } else {
                for (Point r : {Point{q.x + 1, q.y}, Point{q.x, q.y + 1}})
                    if (r.x <= to.x && r.y <= to.y && !occ(r))
                        self(self, r);
            }
            path.pop_back();
            occ(q) = 0;
        };
        rec(rec, from);
    }

    void finish()
    {
        if (mode_ == Mode::First) {
            found_ = PathFamily{perm_, paths_};
            return;
        }
        add(perm_, 1);
    }

    std::uint64_t count_last(Point from, Point to)
    {
        const long w = to.x - from.x + 1, h = to.y - from.y + 1;
        std::vector<std::uint64_t> dp(static_cast<size_t>(w * h), 0);
        for (long y = 0; y < h; ++y)
            for (long x = 0; x < w; ++x) {
                std::uint64_t& v = dp[static_cast<size_t>(y * w + x)];
                if (occ({from.x + x, from.y + y}))
                    continue;
                if (x == 0 && y == 0) {
                    v = 1;
                    continue;
                }
                if (x > 0 && __builtin_add_overflow(v, dp[static_cast<size_t>(y * w + x - 1)], &v))
                    throw std::overflow_error("oracle count overflow");
                if (y > 0 && __builtin_add_overflow(v, dp[static_cast<size_t>((y - 1) * w + x)], &v))
                    throw std::overflow_error("oracle count overflow");
            }
        return dp.back();
    }

    void add(const std::vector<size_t>& perm, std::uint64_t n)
    {
        if (n == 0)
            return;
        auto& slot = counts_[perm];
        if (__builtin_add_overflow(slot, n, &slot))
            throw std::overflow_error("oracle count overflow");
    }

    EndpointLists pts_;
    size_t n_;
    std::uint64_t cap_;
    long minx_ = 0, maxx_ = 0, miny_ = 0, maxy_ = 0, width_ = 1;
    std::vector<char> occupied_;
    std::vector<size_t> order_;
    std::vector<size_t> perm_;
    std::vector<bool> used_;
    std::vector<MonotonePath> paths_;
    std::map<std::vector<size_t>, std::uint64_t> counts_;
    Mode mode_ = Mode::Count;
    std::optional<PathFamily> found_;
};

} // namespace detail

/// Sum over permutations of sign times the number of vertex-disjoint path
/// tuples realizing it, with the per-permutation breakdown.
inline SignedCountResult signed_count_detailed(const HexSpec& spec, std::uint64_t cap = default_path_cap)
{
    spec.validate();
    return detail::FamilySearch(spec, cap).count();
}

inline BigInt signed_count(const HexSpec& spec, std::uint64_t cap = default_path_cap)
{
    return signed_count_detailed(spec, cap).value;
}

/// One vertex-disjoint family, or nullopt if none exists.
inline std::optional<PathFamily> first_tiling(const HexSpec& spec, std::uint64_t cap = default_path_cap)
{
    spec.validate();
    return detail::FamilySearch(spec, cap).first();
}

} // namespace hexatile
