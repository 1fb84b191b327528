#ifndef DRAWINV_DRAWING_HPP
#define DRAWINV_DRAWING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "drawinv/cochain.hpp"
#include "drawinv/combinatorics.hpp"
#include "drawinv/general_position.hpp"
#include "drawinv/geometry.hpp"

namespace drawinv {

/// A piecewise-linear drawing: a point per vertex and an open polyline per
/// edge whose endpoints are the incident vertex points. A 2-hypergraph is
/// drawn through its 1-skeleton; face images are induced, never stored.
struct Drawing {
    Graph skeleton;
    std::optional<Hypergraph2> hyper;
    std::vector<Point> vertex_points;              // 1-indexed; [0] unused
    std::map<EdgeId, Polyline> edge_polylines;     // each runs from f(a) to f(b), a < b
    GeneralPositionCertificate gp;

    const Point& at(int v) const { return vertex_points[v]; }
    const Polyline& line(const EdgeId& e) const { return edge_polylines.at(e); }

    bool is_hyper() const { return hyper.has_value(); }
};

/// All polyline vertices of the drawing (vertex points once, then bends).
inline std::vector<Point> drawing_points(const Drawing& d) {
    std::vector<Point> pts(d.vertex_points.begin() + 1, d.vertex_points.end());
    for (const auto& [e, pl] : d.edge_polylines)
        for (std::size_t i = 1; i + 1 < pl.vertices.size(); ++i)
            pts.push_back(pl.vertices[i]);
    return pts;
}

inline Drawing make_drawing(Graph host, std::optional<Hypergraph2> hyper,
                            std::vector<Point> vpos,
                            std::map<EdgeId, Polyline> lines) {
    Drawing d;
    d.skeleton = std::move(host);
    d.hyper = std::move(hyper);
    d.vertex_points = std::move(vpos);
    d.edge_polylines = std::move(lines);
    if ((int)d.vertex_points.size() != d.skeleton.n + 1)
        throw error("drawing: vertex point count mismatch");
    for (const EdgeId& e : d.skeleton.edges) {
        auto it = d.edge_polylines.find(e);
        if (it == d.edge_polylines.end()) {
            // default to the straight segment
            it = d.edge_polylines
                     .emplace(e, Polyline({d.vertex_points[e[0]], d.vertex_points[e[1]]}, false))
                     .first;
        }
        const Polyline& pl = it->second;
        pl.validate();
        if (pl.closed) throw error("drawing: edge polyline must be open");
        if (pl.vertices.front() != d.vertex_points[e[0]] ||
            pl.vertices.back() != d.vertex_points[e[1]])
            throw error("drawing: polyline endpoints must match vertex points");
    }
    for (const auto& [e, pl] : d.edge_polylines)
        if (!std::binary_search(d.skeleton.edges.begin(), d.skeleton.edges.end(), e))
            throw error("drawing: polyline for a non-edge");
    d.gp = general_position(drawing_points(d));
    return d;
}

inline Drawing make_drawing(const Graph& host, std::vector<Point> vpos,
                            std::map<EdgeId, Polyline> lines = {}) {
    return make_drawing(host, std::nullopt, std::move(vpos), std::move(lines));
}

inline Drawing make_drawing(const Hypergraph2& host, std::vector<Point> vpos,
                            std::map<EdgeId, Polyline> lines = {}) {
    return make_drawing(host.skeleton(), host, std::move(vpos), std::move(lines));
}

inline void require_gp(const Drawing& d) {
    if (!d.gp.ok) throw degenerate_error("drawing is not in general position");
}

/// Image of the oriented cycle a -> b -> c -> a as one closed polyline.
inline Polyline cycle_image(const Drawing& d, int a, int b, int c) {
    std::vector<Point> v;
    auto append_leg = [&](int from, int to) {
        const Polyline& pl = d.line(make_edge(from, to));
        if (from < to) {
            for (std::size_t i = 0; i + 1 < pl.vertices.size(); ++i) v.push_back(pl.vertices[i]);
        } else {
            for (std::size_t i = pl.vertices.size(); i-- > 1;) v.push_back(pl.vertices[i]);
        }
    };
    append_leg(a, b);
    append_leg(b, c);
    append_leg(c, a);
    return Polyline(std::move(v), true);
}

inline Polyline face_boundary_image(const Drawing& d, const FaceId& f) {
    return cycle_image(d, f[0], f[1], f[2]);
}

// ---------------------------------------------------------------------------
// drawing generators
// ---------------------------------------------------------------------------

namespace detail {

inline Drawing random_drawing_impl(const Graph& skel, const std::optional<Hypergraph2>& hy,
                                   std::uint64_t seed, int bends_per_edge) {
    if (bends_per_edge < 0 || bends_per_edge > 3)
        throw error("random drawing: bends_per_edge must be in 0..3");
    std::mt19937_64 rng(seed);
    const long grid = 1L << 16;
    std::uniform_int_distribution<long> coord(0, grid);
    std::uniform_int_distribution<long> offset(-(1L << 13), 1L << 13);
    for (int attempt = 0; attempt < 512; ++attempt) {
        std::vector<Point> vpos(skel.n + 1);
        for (int v = 1; v <= skel.n; ++v) vpos[v] = Point(coord(rng), coord(rng));
        std::map<EdgeId, Polyline> lines;
        for (const EdgeId& e : skel.edges) {
            std::vector<Point> chain{vpos[e[0]]};
            for (int i = 1; i <= bends_per_edge; ++i) {
                // interpolate between the endpoint projections, then jitter
                Rat t(i, bends_per_edge + 1);
                Rat bx = vpos[e[0]].x + t * (vpos[e[1]].x - vpos[e[0]].x) + offset(rng);
                Rat by = vpos[e[0]].y + t * (vpos[e[1]].y - vpos[e[0]].y) + offset(rng);
                // snap to the integer grid to keep coordinates small
                chain.emplace_back(Rat(bx.get_num() / bx.get_den()),
                                   Rat(by.get_num() / by.get_den()));
            }
            chain.push_back(vpos[e[1]]);
            bool ok = true;
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                if (chain[i] == chain[i + 1]) ok = false;
            if (!ok) {
                lines.clear();
                break;
            }
            lines.emplace(e, Polyline(std::move(chain), false));
        }
        if (lines.size() != skel.edges.size() && !skel.edges.empty()) continue;
        Drawing d = make_drawing(skel, hy, std::move(vpos), std::move(lines));
        if (d.gp.ok) return d;
    }
    throw exhausted_error("random drawing: rejection budget exceeded");
}

}  // namespace detail

/// Seed-deterministic general-position drawing on the [0, 2^16] integer grid.
inline Drawing random_general_position_drawing(const Graph& g, std::uint64_t seed,
                                               int bends_per_edge) {
    return detail::random_drawing_impl(g, std::nullopt, seed, bends_per_edge);
}

inline Drawing random_general_position_drawing(const Hypergraph2& k, std::uint64_t seed,
                                               int bends_per_edge) {
    return detail::random_drawing_impl(k.skeleton(), k, seed, bends_per_edge);
}

/// Vertices on a convex curve in the requested order, straight chords;
/// the x-coordinates are nudged rationally until general position holds.
inline Drawing canonical_convex_drawing(const Graph& g, std::vector<int> ordering = {}) {
    if (ordering.empty())
        for (int v = 1; v <= g.n; ++v) ordering.push_back(v);
    if ((int)ordering.size() != g.n) throw error("ordering size mismatch");
    for (long t = 0; t < 64; ++t) {
        std::vector<Point> vpos(g.n + 1);
        for (int i = 0; i < g.n; ++i) {
            Rat x = Rat(i + 1) + Rat(t * (i + 1) * (i + 1) * (i + 1), 1024);
            vpos[ordering[i]] = Point(x, x * x);
        }
        Drawing d = make_drawing(g, std::move(vpos));
        if (d.gp.ok) return d;
    }
    throw exhausted_error("convex drawing: could not certify general position");
}

// ---------------------------------------------------------------------------
// intersection cocycles
// ---------------------------------------------------------------------------

/// Mod-2 intersection cocycle: crossing-count parity on non-adjacent edge
/// pairs; for 2-hypergraphs also whether a vertex image lies in the modulo-2
/// interior of a disjoint face's boundary image.
inline Cochain intersection_cocycle_mod2(const Drawing& d) {
    require_gp(d);
    auto ix = std::make_shared<CellPairIndex>(
        d.is_hyper() ? pair_index(*d.hyper, IndexKind::hyper_kstar)
                     : pair_index(d.skeleton, IndexKind::graph_kstar));
    Cochain nu(ix, Ring::gf2);
    for (std::size_t i = 0; i < ix->entries.size(); ++i) {
        const std::vector<Cell>& e = ix->entries[i];
        if (e[0].k == 2 && e[1].k == 2) {
            nu.coeffs[i] = crossing_count(d.line(e[0].edge()), d.line(e[1].edge())) % 2;
        } else {
            const Cell& vtx = e[0].k == 1 ? e[0] : e[1];
            const Cell& face = e[0].k == 3 ? e[0] : e[1];
            Polyline bd = cycle_image(d, face.v[0], face.v[1], face.v[2]);
            nu.coeffs[i] = mod2_interior_contains(bd, d.at(vtx.v[0])) ? 1 : 0;
        }
    }
    return nu;
}

/// Integral intersection cocycle over ordered pairs. Cell orientations are
/// the stored orders: edge ab runs a -> b, face abc bounds a -> b -> c -> a.
/// Vertex-face entries carry minus the winding number of the face boundary
/// image around the vertex image, symmetrically in both orders.
inline Cochain integral_intersection_cocycle(const Drawing& d) {
    require_gp(d);
    auto ix = std::make_shared<CellPairIndex>(
        d.is_hyper() ? pair_index(*d.hyper, IndexKind::hyper_ktilde)
                     : pair_index(d.skeleton, IndexKind::graph_ktilde));
    Cochain nu(ix, Ring::integer);
    std::map<std::pair<EdgeId, EdgeId>, long> cache;
    for (std::size_t i = 0; i < ix->entries.size(); ++i) {
        const std::vector<Cell>& e = ix->entries[i];
        if (e[0].k == 2 && e[1].k == 2) {
            auto key = std::make_pair(e[0].edge(), e[1].edge());
            auto it = cache.find(key);
            long v;
            if (it != cache.end()) {
                v = it->second;
            } else {
                v = algebraic_intersection_number(d.line(e[0].edge()), d.line(e[1].edge()));
                cache.emplace(key, v);
                cache.emplace(std::make_pair(e[1].edge(), e[0].edge()), -v);
            }
            nu.coeffs[i] = v;
        } else {
            const Cell& vtx = e[0].k == 1 ? e[0] : e[1];
            const Cell& face = e[0].k == 3 ? e[0] : e[1];
            Polyline bd = cycle_image(d, face.v[0], face.v[1], face.v[2]);
            nu.coeffs[i] = -winding_number(bd, d.at(vtx.v[0]));
        }
    }
    return nu;
}

/// Total crossing parity over non-adjacent edge pairs.
inline int van_kampen_number(const Drawing& d) {
    require_gp(d);
    if (d.is_hyper()) throw error("van Kampen number is defined for graph drawings");
    long total = 0;
    const auto& edges = d.skeleton.edges;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!Cell(edges[i]).disjoint(Cell(edges[j]))) continue;
            total += crossing_count(d.line(edges[i]), d.line(edges[j]));
        }
    return static_cast<int>(total & 1);
}

/// Radon number of a K4 drawing: crossing parity of the three opposite-edge
/// pairs plus the parity of vertices lying in the modulo-2 interior of the
/// opposite cycle's image.
inline int radon_number(const Drawing& d) {
    require_gp(d);
    if (d.skeleton.n != 4 || d.skeleton.edges.size() != 6)
        throw error("radon_number needs a K4 drawing");
    long total = 0;
    for (int a = 2; a <= 4; ++a) {
        int others[2];
        int* o = others;
        for (int x = 2; x <= 4; ++x)
            if (x != a) *o++ = x;
        total += crossing_count(d.line(make_edge(1, a)), d.line(make_edge(others[0], others[1])));
    }
    for (int v = 1; v <= 4; ++v) {
        int o[3], k = 0;
        for (int x = 1; x <= 4; ++x)
            if (x != v) o[k++] = x;
        if (mod2_interior_contains(cycle_image(d, o[0], o[1], o[2]), d.at(v))) ++total;
    }
    return static_cast<int>(total & 1);
}

// ---------------------------------------------------------------------------
// r-fold intersection numbers
// ---------------------------------------------------------------------------

/// A point, an oriented open polyline, or an oriented closed polyline.
struct TaggedGeometry {
    enum class Kind { point, open_line, closed_line } kind;
    Point pt;
    Polyline line;

    static TaggedGeometry point(Point p) {
        return {Kind::point, std::move(p), {}};
    }
    static TaggedGeometry open_line(Polyline l) {
        if (l.closed) throw error("open_line expects an open polyline");
        return {Kind::open_line, {}, std::move(l)};
    }
    static TaggedGeometry closed_line(Polyline l) {
        if (!l.closed) throw error("closed_line expects a closed polyline");
        return {Kind::closed_line, {}, std::move(l)};
    }
};

/// The r-fold algebraic intersection number:
///   (A) two open lines P_i, P_j and closed lines otherwise:
///       sum over X in P_i cap P_j of sgn X times prod_{s != i,j} (P_s . X);
///   (B) one point P_i and closed lines otherwise: prod_{s != i} (P_s . P_i).
/// Any other shape profile is rejected.
inline long r_fold_intersection_number(std::span<const TaggedGeometry> objects) {
    if (objects.size() < 2) throw bad_profile_error("need at least two objects");
    std::vector<std::size_t> opens, points, closeds;
    for (std::size_t s = 0; s < objects.size(); ++s) {
        switch (objects[s].kind) {
            case TaggedGeometry::Kind::open_line: opens.push_back(s); break;
            case TaggedGeometry::Kind::point: points.push_back(s); break;
            case TaggedGeometry::Kind::closed_line: closeds.push_back(s); break;
        }
    }
    if (opens.size() == 2 && points.empty()) {
        const Polyline& pi = objects[opens[0]].line;
        const Polyline& pj = objects[opens[1]].line;
        long total = 0;
        for (const CrossingPoint& x : intersection_points(pi, pj)) {
            long prod = x.sign;
            for (std::size_t s : closeds) {
                prod *= winding_number(objects[s].line, x.where);
                if (prod == 0) break;
            }
            total += prod;
        }
        return total;
    }
    if (points.size() == 1 && opens.empty()) {
        const Point& p = objects[points[0]].pt;
        long prod = 1;
        for (std::size_t s : closeds) {
            prod *= winding_number(objects[s].line, p);
            if (prod == 0) break;
        }
        return prod;
    }
    throw bad_profile_error("shape profile matches neither case (A) nor case (B)");
}

inline TaggedGeometry cell_image(const Drawing& d, const Cell& c) {
    switch (c.k) {
        case 1: return TaggedGeometry::point(d.at(c.v[0]));
        case 2: return TaggedGeometry::open_line(d.line(c.edge()));
        default: return TaggedGeometry::closed_line(cycle_image(d, c.v[0], c.v[1], c.v[2]));
    }
}

/// r-fold intersection cocycle on K^{underline r}: the r-fold intersection
/// number of the cell images, negated on case (B) tuples.
inline Cochain r_fold_intersection_cocycle(const Drawing& d, int r) {
    require_gp(d);
    if (!d.is_hyper()) throw error("r-fold cocycle needs a 2-hypergraph drawing");
    if (r < 2) throw error("r-fold cocycle needs r >= 2");
    auto ix = std::make_shared<CellPairIndex>(
        pair_index(*d.hyper, IndexKind::hyper_kunderline, r));
    Cochain nu(ix, Ring::integer);
    for (std::size_t i = 0; i < ix->entries.size(); ++i) {
        const std::vector<Cell>& entry = ix->entries[i];
        std::vector<TaggedGeometry> objs;
        objs.reserve(entry.size());
        bool case_b = false;
        for (const Cell& c : entry) {
            if (c.k == 1) case_b = true;
            objs.push_back(cell_image(d, c));
        }
        long v = r_fold_intersection_number(objs);
        nu.coeffs[i] = case_b ? -v : v;
    }
    return nu;
}

/// Straight-line realization test: no segment of the placement meets the
/// interior of another segment.
inline bool straight_line_drawing_crossfree(const Graph& g,
                                            const std::vector<Point>& placement) {
    if ((int)placement.size() != g.n + 1) throw error("placement size mismatch");
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b)
            if (placement[a] == placement[b]) throw error("placement must be injective");
    const auto& es = g.edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Point& a = placement[es[i][0]];
        const Point& b = placement[es[i][1]];
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            const Point& c = placement[es[j][0]];
            const Point& d = placement[es[j][1]];
            // does segment ab meet the open segment (c,d)?
            if (point_in_segment_interior(a, c, d) || point_in_segment_interior(b, c, d))
                return false;
            int o1 = orient(a, b, c), o2 = orient(a, b, d);
            int o3 = orient(c, d, a), o4 = orient(c, d, b);
            if (o1 * o2 < 0 && o3 * o4 < 0) return false;
            if (o1 == 0 && o2 == 0) {
                // collinear: overlapping interiors?
                if (point_in_segment_interior(c, a, b) || point_in_segment_interior(d, a, b))
                    return false;
            } else if ((o1 == 0 && point_in_segment_interior(c, a, b)) ||
                       (o2 == 0 && point_in_segment_interior(d, a, b))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace drawinv

#endif
