#include <catch2/catch_amalgamated.hpp>

#include "drawinv/general_position.hpp"
#include "drawinv/geometry.hpp"
#include "helpers.hpp"

using namespace drawinv;
using drawinv::testing::random_gp_points;
using drawinv::testing::random_polyline_pair;

namespace {

// Independent general-position oracle: plain triple loops with exact
// rationals, no hashing, no fast paths.
bool gp_oracle(const std::vector<Point>& pts) {
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (collinear(pts[i], pts[j], pts[k])) return false;
    std::vector<std::array<std::size_t, 2>> segs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) segs.push_back({i, j});
    auto interior_point_of = [&](const Point& p, std::size_t s) {
        return point_in_segment_interior(p, pts[segs[s][0]], pts[segs[s][1]]);
    };
    for (std::size_t s1 = 0; s1 < segs.size(); ++s1)
        for (std::size_t s2 = s1 + 1; s2 < segs.size(); ++s2) {
            auto [i, j] = segs[s1];
            auto [k, l] = segs[s2];
            if (i == k || i == l || j == k || j == l) continue;
            if (classify_segments(pts[i], pts[j], pts[k], pts[l]) !=
                SegmentRelation::proper_crossing)
                continue;
            Point x = segment_crossing_point(pts[i], pts[j], pts[k], pts[l]);
            for (std::size_t s3 = 0; s3 < segs.size(); ++s3) {
                if (s3 == s1 || s3 == s2) continue;
                if (interior_point_of(x, s3)) return false;
            }
        }
    return true;
}

Polyline closed_poly(std::vector<Point> v) { return Polyline(std::move(v), true); }
Polyline open_poly(std::vector<Point> v) { return Polyline(std::move(v), false); }

}  // namespace

TEST_CASE("orientation predicate") {
    CHECK(orient(Point(0, 0), Point(1, 0), Point(0, 1)) == +1);
    CHECK(orient(Point(0, 0), Point(1, 0), Point(2, 0)) == 0);
    CHECK(orient(Point(0, 0), Point(0, 1), Point(1, 0)) == -1);

    // fast path agrees with the rational path
    Point a(Rat(1, 3), Rat(2, 7)), b(Rat(5, 2), Rat(1, 9)), c(Rat(-4, 5), Rat(3, 11));
    Point A(2, 5), B(7, 1), C(-3, 4);
    CHECK(orient(A, B, C) ==
          orient(Point(Rat(2), Rat(5)), Point(Rat(7), Rat(1)), Point(Rat(-3), Rat(4))));
    CHECK(orient(a, b, c) == -orient(b, a, c));
}

TEST_CASE("general position basics") {
    std::vector<Point> ok_pts{Point(0, 0), Point(1, 0), Point(0, 1), Point(2, 2)};
    auto cert = general_position(ok_pts);
    CHECK(cert.ok);
    CHECK(gp_oracle(ok_pts));

    auto col = general_position({Point(0, 0), Point(1, 1), Point(2, 2)});
    REQUIRE_FALSE(col.ok);
    CHECK(col.violation->kind == GeneralPositionViolation::Kind::collinear_triple);

    // affine image of the regular hexagon: the three main diagonals meet at 0
    std::vector<Point> hex{Point(2, 0),  Point(1, 1),   Point(-1, 1),
                           Point(-2, 0), Point(-1, -1), Point(1, -1)};
    auto hc = general_position(hex);
    REQUIRE_FALSE(hc.ok);
    CHECK(hc.violation->kind == GeneralPositionViolation::Kind::concurrent_segments);
    CHECK_FALSE(gp_oracle(hex));

    auto dup = general_position({Point(0, 0), Point(1, 2), Point(0, 0)});
    REQUIRE_FALSE(dup.ok);
    CHECK(dup.violation->kind == GeneralPositionViolation::Kind::duplicate_points);
}

TEST_CASE("general position agrees with the brute-force oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> d(0, 40);  // small grid: degeneracies frequent
        std::vector<Point> pts;
        for (int i = 0; i < 7; ++i) pts.emplace_back(d(rng), d(rng));
        CHECK(general_position(pts).ok == gp_oracle(pts));
    }
    // rational (non-integer) coordinates exercise the slow path
    std::vector<Point> rat_pts{Point(Rat(1, 2), Rat(1, 3)), Point(Rat(5, 2), Rat(2, 3)),
                               Point(Rat(9, 7), Rat(13, 5)), Point(Rat(-3, 4), Rat(5, 6))};
    CHECK(general_position(rat_pts).ok == gp_oracle(rat_pts));
}

TEST_CASE("crossing sign convention and symmetries") {
    Point a(0, 0), b(2, 2), c(2, 0), d(0, 2);
    CHECK(orient(a, b, c) == -1);  // clockwise triangle ABC
    CHECK(crossing_sign(a, b, c, d) == +1);
    CHECK(crossing_sign(c, d, a, b) == -1);  // swap of arguments flips
    CHECK(crossing_sign(b, a, c, d) == -1);  // orientation reversal flips

    CHECK_THROWS_AS(crossing_sign(Point(0, 0), Point(1, 0), Point(5, 5), Point(6, 6)),
                    not_crossing_error);
    CHECK_THROWS_AS(crossing_sign(Point(0, 0), Point(2, 2), Point(1, 1), Point(5, 0)),
                    degenerate_error);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto pts = random_gp_points(4, 1000 + seed, 1L << 10);
        const Point &A = pts[0], &B = pts[1], &C = pts[2], &D = pts[3];
        if (classify_segments(A, B, C, D) != SegmentRelation::proper_crossing) continue;
        int s = crossing_sign(A, B, C, D);
        CHECK(crossing_sign(C, D, A, B) == -s);
        CHECK(crossing_sign(B, A, C, D) == -s);
        CHECK(crossing_sign(A, B, D, C) == -s);
    }
}

TEST_CASE("intersection points of polylines") {
    Polyline s1 = open_poly({Point(0, 0), Point(1, 0)});
    Polyline s2 = open_poly({Point(3, 3), Point(4, 5)});
    CHECK(intersection_points(s1, s2).empty());

    Polyline x1 = open_poly({Point(0, 0), Point(2, 2)});
    Polyline x2 = open_poly({Point(2, 0), Point(0, 2)});
    auto xs = intersection_points(x1, x2);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0].where == Point(1, 1));
    CHECK(xs[0].sign == +1);

    // overlapping triangle boundaries meet evenly
    Polyline t1 = closed_poly({Point(0, 0), Point(10, 1), Point(4, 9)});
    Polyline t2 = closed_poly({Point(5, -3), Point(9, 6), Point(-2, 5)});
    CHECK(intersection_points(t1, t2).size() % 2 == 0);
    CHECK(intersection_points(t1, t2).size() > 0);

    CHECK_THROWS_AS(intersection_points(open_poly({Point(0, 0), Point(2, 0)}),
                                        open_poly({Point(1, 0), Point(1, 5)})),
                    degenerate_error);
}

TEST_CASE("parity and triviality for random closed pairs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto [p, q] = random_polyline_pair(4 + seed % 3, true, 3 + seed % 4, true, 77 + seed);
        CHECK(crossing_count(p, q) % 2 == 0);
        CHECK(algebraic_intersection_number(p, q) == 0);
        CHECK(algebraic_intersection_number(p, q) == -algebraic_intersection_number(q, p));
    }
}

TEST_CASE("antisymmetry and reversal for open polylines") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [p, q] = random_polyline_pair(3, false, 3, false, 991 + seed);
        long v = algebraic_intersection_number(p, q);
        CHECK(algebraic_intersection_number(q, p) == -v);
        CHECK(algebraic_intersection_number(p.reversed(), q) == -v);
    }
}

TEST_CASE("mirror reflection flips the algebraic intersection number") {
    auto mirror = [](const Polyline& l) {
        Polyline m = l;
        for (Point& p : m.vertices) p.x = -p.x;
        return m;
    };
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto [p, q] = random_polyline_pair(4, true, 3, false, 5000 + seed);
        CHECK(algebraic_intersection_number(mirror(p), mirror(q)) ==
              -algebraic_intersection_number(p, q));
    }
}

TEST_CASE("winding numbers") {
    Polyline ccw = closed_poly({Point(0, 0), Point(10, 0), Point(0, 10)});
    CHECK(winding_number(ccw, Point(2, 2)) == 1);
    CHECK(winding_number(ccw, Point(100, 100)) == 0);
    CHECK(winding_number(ccw.reversed(), Point(2, 2)) == -1);
    CHECK_THROWS_AS(winding_number(ccw, Point(5, 0)), on_curve_error);

    // two nested counterclockwise loops in one closed chain
    Polyline twice = closed_poly({Point(10, 0), Point(0, 10), Point(-10, 0), Point(0, -10),
                                  Point(5, 0), Point(0, 5), Point(-5, 0), Point(0, -5)});
    CHECK(winding_number(twice, Point(0, 0)) == 2);
    CHECK(winding_number(twice, Point(7, 0)) == 1);

    CHECK(mod2_interior_contains(ccw, Point(2, 2)));
    CHECK_FALSE(mod2_interior_contains(ccw, Point(100, 100)));
    CHECK_FALSE(mod2_interior_contains(twice, Point(0, 0)));
}

TEST_CASE("pentagram winding: tips odd, center even") {
    Polyline star = closed_poly({Point(1000, 0), Point(-809, 588), Point(309, -951),
                                 Point(309, 951), Point(-809, -588)});
    CHECK(winding_number(star, Point(0, 0)) == 2);
    CHECK(winding_number(star, Point(600, 0)) == 1);
    CHECK_FALSE(mod2_interior_contains(star, Point(0, 0)));
    CHECK(mod2_interior_contains(star, Point(600, 0)));
}

TEST_CASE("Stokes identity: L.P equals winding difference at the endpoints") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto [l, p] = random_polyline_pair(3 + seed % 4, true, 2 + seed % 3, false, 31 + seed);
        long lp = algebraic_intersection_number(l, p);
        long w1 = winding_number(l, p.vertices.back());
        long w0 = winding_number(l, p.vertices.front());
        CHECK(lp == w1 - w0);
    }
}

TEST_CASE("chessboard parity: endpoint colors match crossing parity") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto [l, p] = random_polyline_pair(4 + seed % 3, true, 2 + seed % 4, false, 301 + seed);
        bool c0 = mod2_interior_contains(l, p.vertices.front());
        bool c1 = mod2_interior_contains(l, p.vertices.back());
        CHECK((c0 == c1) == (crossing_count(l, p) % 2 == 0));
    }
}

TEST_CASE("red/yellow crossings are even for 7+7 points") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto pts = random_gp_points(14, 42421 + seed, 1L << 12);
        long crossings = 0;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                for (int k = 7; k < 14; ++k)
                    for (int l = k + 1; l < 14; ++l)
                        if (classify_segments(pts[i], pts[j], pts[k], pts[l]) ==
                            SegmentRelation::proper_crossing)
                            ++crossings;
        CHECK(crossings % 2 == 0);
    }
}

TEST_CASE("five points in general position span an odd number of crossings") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto pts = random_gp_points(5, 777 + seed, 1L << 12);
        long crossings = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = i; k < 5; ++k)
                    for (int l = k + 1; l < 5; ++l) {
                        if (std::set<int>{i, j, k, l}.size() < 4) continue;
                        if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
                        if (classify_segments(pts[i], pts[j], pts[k], pts[l]) ==
                            SegmentRelation::proper_crossing)
                            ++crossings;
                    }
        CHECK(crossings % 2 == 1);
    }
}

TEST_CASE("separation: exactly one of 1, 2 inside triangle 345") {
    // All segments except 12 have pairwise disjoint interiors here.
    std::vector<Point> base{Point(10, 5),   // 1, inside triangle 345
                            Point(12, 32),  // 2, outside beyond the apex
                            Point(0, 0),    // 3
                            Point(20, 0),   // 4
                            Point(10, 16)};  // 5
    auto check_config = [](const std::vector<Point>& pts) {
        REQUIRE(general_position(pts).ok);
        // precondition: every segment pair except those involving 12 is disjoint
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = i; k < 5; ++k)
                    for (int l = k + 1; l < 5; ++l) {
                        if (std::set<int>{i, j, k, l}.size() < 4) continue;
                        if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
                        if ((i == 0 && j == 1) || (k == 0 && l == 1)) continue;
                        REQUIRE(classify_segments(pts[i], pts[j], pts[k], pts[l]) ==
                                SegmentRelation::disjoint);
                    }
        Polyline tri({pts[2], pts[3], pts[4]}, true);
        bool in1 = mod2_interior_contains(tri, pts[0]);
        bool in2 = mod2_interior_contains(tri, pts[1]);
        CHECK(in1 != in2);
    };
    check_config(base);
    check_config(drawinv::testing::affine_image(base, Rat(2), Rat(1, 3), Rat(-1, 5), Rat(1),
                                                Rat(7), Rat(-4)));
    check_config(drawinv::testing::affine_image(base, Rat(-1), Rat(0), Rat(0), Rat(1), Rat(0),
                                                Rat(0)));  // mirrored
}
