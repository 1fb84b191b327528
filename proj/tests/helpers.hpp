#ifndef DRAWINV_TEST_HELPERS_HPP
#define DRAWINV_TEST_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "drawinv/general_position.hpp"
#include "drawinv/geometry.hpp"

namespace drawinv::testing {

inline Point grid_point(std::mt19937_64& rng, long lo = 0, long hi = 1L << 16) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Point(d(rng), d(rng));
}

/// Random point set in general position (rejection sampling).
inline std::vector<Point> random_gp_points(std::size_t n, std::uint64_t seed,
                                           long hi = 1L << 16) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(grid_point(rng, 0, hi));
        if (general_position(pts).ok) return pts;
    }
    throw std::runtime_error("random_gp_points: rejection budget exceeded");
}

/// Random open/closed polyline pair with jointly general-position vertices.
inline std::pair<Polyline, Polyline> random_polyline_pair(std::size_t np, bool p_closed,
                                                          std::size_t nq, bool q_closed,
                                                          std::uint64_t seed) {
    std::vector<Point> pts = random_gp_points(np + nq, seed, 1L << 12);
    std::vector<Point> a(pts.begin(), pts.begin() + np);
    std::vector<Point> b(pts.begin() + np, pts.end());
    return {Polyline(std::move(a), p_closed), Polyline(std::move(b), q_closed)};
}

/// Applies an affine map with rational entries to every point.
inline std::vector<Point> affine_image(const std::vector<Point>& pts, const Rat& a,
                                       const Rat& b, const Rat& c, const Rat& d,
                                       const Rat& tx, const Rat& ty) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts)
        out.emplace_back(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty);
    return out;
}

}  // namespace drawinv::testing

#include <numeric>

#include "drawinv/combinatorics.hpp"

namespace drawinv::testing {

/// All graphs on exactly n labeled vertices, one representative per
/// isomorphism class (canonical form = minimal edge bitmask over all vertex
/// relabelings). Exhaustive; intended for n <= 6.
inline std::vector<Graph> graphs_up_to_iso(int n) {
    std::vector<std::array<int, 2>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
    int m = (int)pairs.size();
    std::map<std::array<int, 2>, int> pair_pos;
    for (int i = 0; i < m; ++i) pair_pos[pairs[i]] = i;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> remaps;  // edge-position permutations
    do {
        std::vector<int> remap(m);
        for (int i = 0; i < m; ++i) {
            int a = perm[pairs[i][0] - 1], b = perm[pairs[i][1] - 1];
            remap[i] = pair_pos[make_edge(a, b)];
        }
        remaps.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canon;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::uint32_t best = mask;
        for (const auto& remap : remaps) {
            std::uint32_t img = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) img |= 1u << remap[i];
            best = std::min(best, img);
        }
        canon.insert(best);
    }

    std::vector<Graph> out;
    for (std::uint32_t mask : canon) {
        std::vector<EdgeId> es;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) es.push_back(pairs[i]);
        out.emplace_back(n, std::move(es));
    }
    return out;
}

}  // namespace drawinv::testing

#endif
