#ifndef DRAWINV_TEST_FIXTURES_HPP
#define DRAWINV_TEST_FIXTURES_HPP

#include <cmath>
#include <vector>

#include "drawinv/rational.hpp"

namespace drawinv::testing {

/// Rational approximation of the regular heptagon (scale 2^20), certified in
/// general position by the suites that use it.
inline std::vector<Point> heptagon_points() {
    const long s = 1L << 20;
    std::vector<Point> pts;
    for (int k = 0; k < 7; ++k) {
        double a = 2.0 * M_PI * k / 7.0;
        pts.emplace_back((long)std::llround(std::cos(a) * s),
                         (long)std::llround(std::sin(a) * s));
    }
    return pts;
}

/// Seven points with exactly four Tverberg partitions for r = 3: point 4 at
/// the apex of a triangle, pairs {1,2} and {6,7} at the base corners, {3,5}
/// near the centroid. Every witness partition has a triangle block made of 4,
/// one of {1,2} and one of {6,7}.
inline std::vector<Point> four_partition_points() {
    return {Point(100, 0), Point(108, 6),  Point(46, 30), Point(50, 100),
            Point(54, 34), Point(0, 0),    Point(-8, 6)};
}

}  // namespace drawinv::testing

#endif
