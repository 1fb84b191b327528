#ifndef DRAWINV_GEOMETRY_HPP
#define DRAWINV_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "drawinv/rational.hpp"

namespace drawinv {

/// Exact orientation predicate: +1 when (a,b,c) turns counterclockwise,
/// -1 clockwise, 0 collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
    std::int64_t ax, ay, bx, by, cx, cy;
    if (small_point(a, ax, ay) && small_point(b, bx, by) && small_point(c, cx, cy)) {
        __int128 d = (__int128)(bx - ax) * (cy - ay) - (__int128)(by - ay) * (cx - ax);
        return (d > 0) - (d < 0);
    }
    Rat d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(d);
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
    return orient(a, b, c) == 0;
}

/// p on the closed segment [a,b]; assumes nothing about collinearity.
inline bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    int cx = cmp(a.x, b.x), cy = cmp(a.y, b.y);
    if (cx == 0 && cy == 0) return p == a;
    if (cx != 0) {
        const Rat& lo = cx < 0 ? a.x : b.x;
        const Rat& hi = cx < 0 ? b.x : a.x;
        return cmp(p.x, lo) >= 0 && cmp(p.x, hi) <= 0;
    }
    const Rat& lo = cy < 0 ? a.y : b.y;
    const Rat& hi = cy < 0 ? b.y : a.y;
    return cmp(p.y, lo) >= 0 && cmp(p.y, hi) <= 0;
}

/// p strictly inside segment (a,b).
inline bool point_in_segment_interior(const Point& p, const Point& a, const Point& b) {
    return p != a && p != b && point_on_segment(p, a, b);
}

/// Classification of two segments with pairwise distinct endpoints.
enum class SegmentRelation {
    disjoint,
    proper_crossing,  // interiors meet in one point, transversally
    degenerate,       // touching, collinearity or shared endpoints
};

inline SegmentRelation classify_segments(const Point& a, const Point& b, const Point& c,
                                         const Point& d) {
    if (a == c || a == d || b == c || b == d) return SegmentRelation::degenerate;
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::proper_crossing;
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return SegmentRelation::disjoint;
    // Some triple of endpoints is collinear. Harmless only when the segments
    // stay apart; any touching is a general-position violation.
    auto touches = [&]() {
        return point_on_segment(c, a, b) || point_on_segment(d, a, b) ||
               point_on_segment(a, c, d) || point_on_segment(b, c, d);
    };
    return touches() ? SegmentRelation::degenerate : SegmentRelation::disjoint;
}

/// Crossing point of two properly crossing segments.
inline Point segment_crossing_point(const Point& a, const Point& b, const Point& c,
                                    const Point& d) {
    Rat den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    Rat t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

/// Sign of the crossing of oriented segments AB and CD: +1 exactly when the
/// triangle (A,B,C) is clockwise. Requires a proper crossing.
inline int crossing_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
    switch (classify_segments(a, b, c, d)) {
        case SegmentRelation::proper_crossing:
            break;
        case SegmentRelation::disjoint:
            throw not_crossing_error("segments do not cross");
        case SegmentRelation::degenerate:
            throw degenerate_error("segment endpoints not in general position");
    }
    return orient(a, b, c) == -1 ? +1 : -1;
}

/// Vertex chain; `closed` joins the last vertex back to the first (the first
/// vertex is not repeated). Traversal order is the orientation.
struct Polyline {
    std::vector<Point> vertices;
    bool closed = false;

    Polyline() = default;
    Polyline(std::vector<Point> v, bool c) : vertices(std::move(v)), closed(c) { validate(); }

    void validate() const {
        std::size_t n = vertices.size();
        if (n < 2 || (closed && n < 3))
            throw error("polyline needs at least 2 vertices (3 when closed)");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (vertices[i] == vertices[i + 1]) throw error("repeated consecutive vertex");
        if (closed && vertices.front() == vertices.back())
            throw error("closed polyline must not repeat its first vertex");
    }

    std::size_t segment_count() const {
        return closed ? vertices.size() : vertices.size() - 1;
    }
    std::pair<const Point&, const Point&> segment(std::size_t i) const {
        return {vertices[i], vertices[(i + 1) % vertices.size()]};
    }

    Polyline reversed() const {
        Polyline r = *this;
        std::reverse(r.vertices.begin(), r.vertices.end());
        return r;
    }

    friend bool operator==(const Polyline& p, const Polyline& q) {
        return p.closed == q.closed && p.vertices == q.vertices;
    }
};

struct CrossingPoint {
    Point where;
    int sign;  // meaningful when both polylines carry their traversal orientation
};

/// All proper crossings between two polylines whose vertices are jointly in
/// general position. Throws degenerate_error on any touching degeneracy.
inline std::vector<CrossingPoint> intersection_points(const Polyline& p, const Polyline& q) {
    std::vector<CrossingPoint> out;
    for (std::size_t i = 0; i < p.segment_count(); ++i) {
        auto [a, b] = p.segment(i);
        for (std::size_t j = 0; j < q.segment_count(); ++j) {
            auto [c, d] = q.segment(j);
            switch (classify_segments(a, b, c, d)) {
                case SegmentRelation::proper_crossing:
                    out.push_back({segment_crossing_point(a, b, c, d),
                                   orient(a, b, c) == -1 ? +1 : -1});
                    break;
                case SegmentRelation::disjoint:
                    break;
                case SegmentRelation::degenerate:
                    throw degenerate_error("polylines not in joint general position");
            }
        }
    }
    return out;
}

inline long crossing_count(const Polyline& p, const Polyline& q) {
    return static_cast<long>(intersection_points(p, q).size());
}

/// Sum of crossing signs; zero for two closed polylines.
inline long algebraic_intersection_number(const Polyline& p, const Polyline& q) {
    long s = 0;
    for (const CrossingPoint& c : intersection_points(p, q)) s += c.sign;
    return s;
}

inline bool point_on_polyline(const Point& o, const Polyline& l) {
    for (std::size_t i = 0; i < l.segment_count(); ++i) {
        auto [a, b] = l.segment(i);
        if (point_on_segment(o, a, b)) return true;
    }
    return false;
}

/// Exact winding number of a closed polyline around o, by signed crossings of
/// a generic ray out of o; equals the oriented-angle sum divided by 2*pi.
/// Counterclockwise loops count +1.
inline long winding_number(const Polyline& l, const Point& o) {
    if (!l.closed) throw error("winding number needs a closed polyline");
    if (point_on_polyline(o, l)) throw on_curve_error("point lies on the polyline");

    // Pick direction (1, k) missing every vertex; each vertex rules out at
    // most one k, so n+1 candidates suffice.
    std::vector<Rat> cr(l.vertices.size());
    Rat k(0);
    for (long kk = 0;; ++kk) {
        k = kk;
        bool ok = true;
        for (std::size_t i = 0; i < l.vertices.size(); ++i) {
            cr[i] = (l.vertices[i].y - o.y) - k * (l.vertices[i].x - o.x);
            if (sgn(cr[i]) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }

    long w = 0;
    std::size_t n = l.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rat& ca = cr[i];
        const Rat& cb = cr[(i + 1) % n];
        if (sgn(ca) == sgn(cb)) continue;
        const Point& a = l.vertices[i];
        const Point& b = l.vertices[(i + 1) % n];
        Rat s = ca / (ca - cb);
        Rat px = a.x + s * (b.x - a.x) - o.x;
        Rat py = a.y + s * (b.y - a.y) - o.y;
        // forward along (1, k)?
        if (sgn(px + k * py) > 0) w += sgn(ca) < 0 ? +1 : -1;
    }
    return w;
}

/// Membership in the modulo-2 interior (odd winding region).
inline bool mod2_interior_contains(const Polyline& l, const Point& o) {
    return (winding_number(l, o) & 1L) != 0;
}

}  // namespace drawinv

#endif
