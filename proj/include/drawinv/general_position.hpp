#ifndef DRAWINV_GENERAL_POSITION_HPP
#define DRAWINV_GENERAL_POSITION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "drawinv/geometry.hpp"

namespace drawinv {

struct GeneralPositionViolation {
    enum class Kind { duplicate_points, collinear_triple, concurrent_segments } kind;
    // collinear_triple / duplicate_points: the offending points.
    std::array<Point, 3> points{};
    // concurrent_segments: three spanned segments through one interior point.
    std::array<std::array<Point, 2>, 3> segments{};
    Point common;
};

struct GeneralPositionCertificate {
    std::vector<Point> pointset;
    bool ok = false;
    std::optional<GeneralPositionViolation> violation;
};

namespace detail {

// Key for exact crossing points of integer-coordinate segments:
// (x, y) = (nx/d, ny/d) with d > 0 and gcd(nx, ny, d) = 1.
struct CrossKey {
    __int128 nx, ny, d;
    bool operator==(const CrossKey& o) const { return nx == o.nx && ny == o.ny && d == o.d; }
};

struct CrossKeyHash {
    std::size_t operator()(const CrossKey& k) const {
        auto mix = [](std::size_t h, __int128 v) {
            std::uint64_t lo = (std::uint64_t)v, hi = (std::uint64_t)(v >> 64);
            h ^= lo + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        };
        return mix(mix(mix(0, k.nx), k.ny), k.d);
    }
};

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/// Checks the two general-position conditions: no three points collinear and
/// no three spanned segments with a common interior point. Coincident input
/// points are also rejected. Returns a certificate with a witness on failure.
inline GeneralPositionCertificate general_position(const std::vector<Point>& pts) {
    GeneralPositionCertificate cert;
    cert.pointset = pts;
    std::size_t n = pts.size();

    auto fail = [&](GeneralPositionViolation v) {
        cert.ok = false;
        cert.violation = std::move(v);
        return cert;
    };

    {
        std::map<Point, std::size_t> seen;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, fresh] = seen.emplace(pts[i], i);
            if (!fresh) {
                GeneralPositionViolation v;
                v.kind = GeneralPositionViolation::Kind::duplicate_points;
                v.points = {pts[it->second], pts[i], pts[i]};
                return fail(std::move(v));
            }
        }
    }

    std::vector<std::int64_t> xs(n), ys(n);
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) small = small_point(pts[i], xs[i], ys[i]);

    auto orient_idx = [&](std::size_t i, std::size_t j, std::size_t k) -> int {
        if (small) {
            __int128 d = (__int128)(xs[j] - xs[i]) * (ys[k] - ys[i]) -
                         (__int128)(ys[j] - ys[i]) * (xs[k] - xs[i]);
            return (d > 0) - (d < 0);
        }
        return orient(pts[i], pts[j], pts[k]);
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (orient_idx(i, j, k) == 0) {
                    GeneralPositionViolation v;
                    v.kind = GeneralPositionViolation::Kind::collinear_triple;
                    v.points = {pts[i], pts[j], pts[k]};
                    return fail(std::move(v));
                }

    // Proper crossings of spanned segments, hashed by exact location; a
    // repeated location certifies three concurrent segments. (Touching cases
    // would need a collinear triple, excluded above.)
    std::vector<std::array<std::size_t, 2>> segs;
    segs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) segs.push_back({i, j});

    auto seg_pair = [&](std::size_t s) {
        return std::array<Point, 2>{pts[segs[s][0]], pts[segs[s][1]]};
    };
    auto report_concurrent = [&](std::size_t s1, std::size_t s2, std::size_t s3,
                                 Point at) {
        GeneralPositionViolation v;
        v.kind = GeneralPositionViolation::Kind::concurrent_segments;
        v.segments = {seg_pair(s1), seg_pair(s2), seg_pair(s3)};
        v.common = std::move(at);
        return fail(std::move(v));
    };

    if (small) {
        std::unordered_map<detail::CrossKey, std::array<std::size_t, 2>,
                           detail::CrossKeyHash>
            where;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            auto [i, j] = segs[s];
            for (std::size_t t = s + 1; t < segs.size(); ++t) {
                auto [k, l] = segs[t];
                if (i == k || i == l || j == k || j == l) continue;
                __int128 abx = xs[j] - xs[i], aby = ys[j] - ys[i];
                __int128 cdx = xs[l] - xs[k], cdy = ys[l] - ys[k];
                __int128 o1 = abx * (ys[k] - ys[i]) - aby * (xs[k] - xs[i]);
                __int128 o2 = abx * (ys[l] - ys[i]) - aby * (xs[l] - xs[i]);
                if ((o1 > 0) == (o2 > 0)) continue;
                __int128 o3 = cdx * (ys[i] - ys[k]) - cdy * (xs[i] - xs[k]);
                __int128 o4 = cdx * (ys[j] - ys[k]) - cdy * (xs[j] - xs[k]);
                if ((o3 > 0) == (o4 > 0)) continue;
                // crossing at a + (o3 / (o3 - o4)) * (b - a), scaled to integers
                __int128 den = o3 - o4;  // = cross(ab, cd) up to sign, nonzero
                __int128 nx = xs[i] * den + o3 * abx;
                __int128 ny = ys[i] * den + o3 * aby;
                if (den < 0) {
                    den = -den;
                    nx = -nx;
                    ny = -ny;
                }
                __int128 g = detail::gcd128(detail::gcd128(nx, ny), den);
                if (g > 1) {
                    nx /= g;
                    ny /= g;
                    den /= g;
                }
                detail::CrossKey key{nx, ny, den};
                auto [it, fresh] = where.emplace(key, std::array<std::size_t, 2>{s, t});
                if (!fresh) {
                    std::size_t other =
                        (it->second[0] == s || it->second[0] == t) ? it->second[1]
                                                                   : it->second[0];
                    Point at = segment_crossing_point(pts[i], pts[j], pts[k], pts[l]);
                    return report_concurrent(s, t, other, at);
                }
            }
        }
    } else {
        std::map<Point, std::array<std::size_t, 2>> where;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            auto [i, j] = segs[s];
            for (std::size_t t = s + 1; t < segs.size(); ++t) {
                auto [k, l] = segs[t];
                if (i == k || i == l || j == k || j == l) continue;
                if (classify_segments(pts[i], pts[j], pts[k], pts[l]) !=
                    SegmentRelation::proper_crossing)
                    continue;
                Point at = segment_crossing_point(pts[i], pts[j], pts[k], pts[l]);
                auto [it, fresh] = where.emplace(at, std::array<std::size_t, 2>{s, t});
                if (!fresh) {
                    std::size_t other =
                        (it->second[0] == s || it->second[0] == t) ? it->second[1]
                                                                   : it->second[0];
                    return report_concurrent(s, t, other, it->first);
                }
            }
        }
    }

    cert.ok = true;
    return cert;
}

}  // namespace drawinv

#endif
