#ifndef DRAWINV_CONVEX_HPP
#define DRAWINV_CONVEX_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "drawinv/geometry.hpp"

namespace drawinv {

/// Convex hull, counterclockwise, collinear points dropped; one or two
/// points for degenerate inputs.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> lo, up;
    for (const Point& p : pts) {
        while (lo.size() >= 2 && orient(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (up.size() >= 2 && orient(up[up.size() - 2], up.back(), *it) <= 0) up.pop_back();
        up.push_back(*it);
    }
    lo.pop_back();
    up.pop_back();
    lo.insert(lo.end(), up.begin(), up.end());
    return lo;
}

/// A convex set given by its hull vertices: empty, a point, a segment, or a
/// CCW polygon.
struct ConvexRegion {
    std::vector<Point> pts;

    bool empty() const { return pts.empty(); }
};

inline ConvexRegion region_of(const std::vector<Point>& pts) {
    return ConvexRegion{convex_hull(pts)};
}

inline bool region_contains(const ConvexRegion& r, const Point& p) {
    if (r.pts.empty()) return false;
    if (r.pts.size() == 1) return p == r.pts[0];
    if (r.pts.size() == 2) return point_on_segment(p, r.pts[0], r.pts[1]);
    for (std::size_t i = 0; i < r.pts.size(); ++i)
        if (orient(r.pts[i], r.pts[(i + 1) % r.pts.size()], p) < 0) return false;
    return true;
}

namespace detail {

/// Clip a convex region by the halfplane a*x + b*y + c >= 0.
inline ConvexRegion clip_halfplane(const ConvexRegion& r, const Rat& a, const Rat& b,
                                   const Rat& c) {
    if (r.pts.empty()) return r;
    auto value = [&](const Point& p) -> Rat { return a * p.x + b * p.y + c; };
    auto crossing = [&](const Point& u, const Point& v, const Rat& fu, const Rat& fv) {
        Rat t = fu / (fu - fv);
        return Point(u.x + t * (v.x - u.x), u.y + t * (v.y - u.y));
    };
    if (r.pts.size() == 1) {
        if (sgn(value(r.pts[0])) >= 0) return r;
        return ConvexRegion{};
    }
    std::vector<Point> out;
    if (r.pts.size() == 2) {
        const Point &u = r.pts[0], &v = r.pts[1];
        Rat fu = value(u), fv = value(v);
        int su = sgn(fu), sv = sgn(fv);
        if (su >= 0) out.push_back(u);
        if (su * sv < 0) out.push_back(crossing(u, v, fu, fv));
        if (sv >= 0) out.push_back(v);
        return region_of(out);
    }
    std::size_t n = r.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& u = r.pts[i];
        const Point& v = r.pts[(i + 1) % n];
        Rat fu = value(u), fv = value(v);
        int su = sgn(fu), sv = sgn(fv);
        if (su >= 0) out.push_back(u);
        if (su * sv < 0) out.push_back(crossing(u, v, fu, fv));
    }
    return region_of(out);
}

}  // namespace detail

/// Exact intersection of two convex regions by iterated clipping.
inline ConvexRegion region_intersect(ConvexRegion a, const ConvexRegion& b) {
    if (a.empty() || b.empty()) return ConvexRegion{};
    if (b.pts.size() == 1) {
        if (region_contains(a, b.pts[0])) return b;
        return ConvexRegion{};
    }
    if (b.pts.size() == 2) {
        const Point &p = b.pts[0], &q = b.pts[1];
        Rat dx = q.x - p.x, dy = q.y - p.y;
        // restrict to the supporting line, then to the segment's extent
        a = detail::clip_halfplane(a, -dy, dx, dy * p.x - dx * p.y);
        a = detail::clip_halfplane(a, dy, -dx, dx * p.y - dy * p.x);
        a = detail::clip_halfplane(a, dx, dy, -(dx * p.x + dy * p.y));
        a = detail::clip_halfplane(a, -dx, -dy, dx * q.x + dy * q.y);
        return a;
    }
    for (std::size_t i = 0; i < b.pts.size() && !a.empty(); ++i) {
        const Point& u = b.pts[i];
        const Point& v = b.pts[(i + 1) % b.pts.size()];
        Rat dx = v.x - u.x, dy = v.y - u.y;
        a = detail::clip_halfplane(a, -dy, dx, dy * u.x - dx * u.y);
    }
    return a;
}

/// A common point of the hulls of several point sets, when one exists: the
/// lexicographically least vertex of the intersection region (the region
/// itself in the zero-dimensional case).
inline std::optional<Point> hulls_common_point(const std::vector<std::vector<Point>>& sets) {
    if (sets.empty()) return std::nullopt;
    ConvexRegion acc = region_of(sets[0]);
    for (std::size_t i = 1; i < sets.size() && !acc.empty(); ++i)
        acc = region_intersect(acc, region_of(sets[i]));
    if (acc.empty()) return std::nullopt;
    return *std::min_element(acc.pts.begin(), acc.pts.end());
}

}  // namespace drawinv

#endif
