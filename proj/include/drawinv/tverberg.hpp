#ifndef DRAWINV_TVERBERG_HPP
#define DRAWINV_TVERBERG_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "drawinv/combinatorics.hpp"
#include "drawinv/convex.hpp"
#include "drawinv/drawing.hpp"
#include "drawinv/general_position.hpp"

namespace drawinv {

struct TverbergWitness {
    Partition partition;  // blocks of 1-based point indices
    Point common_point;
};

namespace detail {

inline std::vector<Point> block_points(const std::vector<Point>& pts,
                                       const std::vector<int>& block) {
    std::vector<Point> out;
    for (int i : block) out.push_back(pts[i - 1]);
    return out;
}

/// Unordered partitions of [m] into exactly r nonempty blocks, enumerated as
/// restricted-growth strings (the block containing 1 comes first).
inline void for_each_partition(int m, int r,
                               const std::function<void(const Partition&)>& fn) {
    std::vector<int> assign(m + 1, 0);
    Partition p;
    auto rec = [&](auto&& self, int x, int used) -> void {
        if (x > m) {
            if (used != r) return;
            p.blocks.assign(r, {});
            for (int y = 1; y <= m; ++y) p.blocks[assign[y]].push_back(y);
            fn(p);
            return;
        }
        if (m - x + 1 < r - used) return;  // not enough elements left
        for (int b = 0; b < std::min(used + 1, r); ++b) {
            assign[x] = b;
            self(self, x + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 1, 0);
}

inline std::vector<TverbergWitness> tverberg_enumerate(const std::vector<Point>& pts,
                                                       int r) {
    std::vector<TverbergWitness> out;
    for_each_partition((int)pts.size(), r, [&](const Partition& p) {
        std::vector<std::vector<Point>> sets;
        for (const auto& b : p.blocks) sets.push_back(block_points(pts, b));
        if (auto common = hulls_common_point(sets))
            out.push_back({p, *common});
    });
    return out;
}

}  // namespace detail

/// The unique Radon partition of 4 points, no 3 collinear: either a point in
/// the triangle of the others, or two crossing segments.
inline Partition radon_partition_4(const std::array<Point, 4>& pts) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(pts[i], pts[j], pts[k]))
                    throw degenerate_error("radon_partition_4: collinear triple");
    std::vector<Point> v(pts.begin(), pts.end());
    auto hits = detail::tverberg_enumerate(v, 2);
    if (hits.size() != 1)
        throw degenerate_error("radon_partition_4: partition not unique");
    return hits[0].partition;
}

/// All unordered r-block partitions of 3r-2 points whose convex hulls share a
/// point, with one exact common point each.
inline std::vector<TverbergWitness> tverberg_partitions(const std::vector<Point>& pts,
                                                        int r) {
    if (r < 2) throw bad_size_error("tverberg_partitions: r >= 2 required");
    if (r > 4) throw too_large_error("tverberg_partitions: r <= 4 enumeration guard");
    if ((int)pts.size() != 3 * r - 2)
        throw bad_size_error("tverberg_partitions: need exactly 3r-2 points");
    return detail::tverberg_enumerate(pts, r);
}

/// First spherical ordered partition (under the canonical enumeration) whose
/// blocks' hulls meet; the labeling is the input order 1..3r-2.
inline std::optional<TverbergWitness> spherical_tverberg_witness(
    const std::vector<Point>& pts, int r) {
    if (r != 3) throw bad_size_error("spherical_tverberg_witness: guard r = 3");
    if ((int)pts.size() != 3 * r - 2)
        throw bad_size_error("spherical_tverberg_witness: need 3r-2 points");
    if (!general_position(pts).ok)
        throw degenerate_error("spherical_tverberg_witness: points not in general position");
    for (const Partition& p : spherical_partitions(3 * r - 2, r)) {
        bool nonempty = true;
        for (const auto& b : p.blocks)
            if (b.empty()) nonempty = false;
        if (!nonempty) continue;
        std::vector<std::vector<Point>> sets;
        for (const auto& b : p.blocks) sets.push_back(detail::block_points(pts, b));
        if (auto common = hulls_common_point(sets)) return TverbergWitness{p, *common};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// topological Tverberg witness search (r = 3)
// ---------------------------------------------------------------------------

struct TopologicalTverbergWitness {
    enum class Kind {
        triangles_around_vertex,  // two disjoint triangles wind around a vertex image
        triangle_around_crossing  // a triangle winds around a crossing of two edges
    } kind;
    int vertex = 0;                      // triangles_around_vertex
    EdgeId edge1{}, edge2{};             // triangle_around_crossing
    std::array<FaceId, 2> triangles{};   // second entry unused for the crossing kind
    Point where;                         // f(vertex) or the crossing point
};

/// Searches all disjoint vertex/triangle and edge-pair/triangle patterns of a
/// K7 drawing for the windings promised by the plane Tverberg theorem at r=3.
inline std::optional<TopologicalTverbergWitness> topological_tverberg_witness(
    const Drawing& d) {
    require_gp(d);
    if (d.skeleton.n != 7 || d.skeleton.edges.size() != 21)
        throw error("topological_tverberg_witness needs a K7 drawing");

    std::map<FaceId, Polyline> cycles;
    auto cycle = [&](int a, int b, int c) -> const Polyline& {
        FaceId f = make_face(a, b, c);
        auto it = cycles.find(f);
        if (it == cycles.end())
            it = cycles.emplace(f, cycle_image(d, f[0], f[1], f[2])).first;
        return it->second;
    };

    // pattern: two disjoint triangles wind around the remaining vertex
    for (int v = 1; v <= 7; ++v) {
        std::vector<int> rest;
        for (int u = 1; u <= 7; ++u)
            if (u != v) rest.push_back(u);
        // split the 6 remaining vertices into two unordered triples
        for (int mask = 0; mask < 64; ++mask) {
            if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;
            std::vector<int> t1, t2;
            for (int i = 0; i < 6; ++i) (mask >> i & 1 ? t1 : t2).push_back(rest[i]);
            if (winding_number(cycle(t1[0], t1[1], t1[2]), d.at(v)) == 0) continue;
            if (winding_number(cycle(t2[0], t2[1], t2[2]), d.at(v)) == 0) continue;
            TopologicalTverbergWitness w;
            w.kind = TopologicalTverbergWitness::Kind::triangles_around_vertex;
            w.vertex = v;
            w.triangles = {make_face(t1[0], t1[1], t1[2]), make_face(t2[0], t2[1], t2[2])};
            w.where = d.at(v);
            return w;
        }
    }

    // pattern: a triangle winds around a crossing point of two disjoint edges
    const auto& es = d.skeleton.edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (!Cell(es[i]).disjoint(Cell(es[j]))) continue;
            std::vector<int> rest;
            for (int u = 1; u <= 7; ++u)
                if (u != es[i][0] && u != es[i][1] && u != es[j][0] && u != es[j][1])
                    rest.push_back(u);
            const Polyline& tri = cycle(rest[0], rest[1], rest[2]);
            for (const CrossingPoint& x : intersection_points(d.line(es[i]), d.line(es[j]))) {
                if (winding_number(tri, x.where) == 0) continue;
                TopologicalTverbergWitness w;
                w.kind = TopologicalTverbergWitness::Kind::triangle_around_crossing;
                w.edge1 = es[i];
                w.edge2 = es[j];
                w.triangles = {make_face(rest[0], rest[1], rest[2]), FaceId{0, 0, 0}};
                w.where = x.where;
                return w;
            }
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// triple van Kampen number
// ---------------------------------------------------------------------------

/// Canonical enumeration of the 216 spherical partitions (T1,T2,T3) of [7]
/// with 7 in T3.
inline std::vector<Partition> spherical_partitions_7_in_t3() {
    std::vector<Partition> out;
    for (const Partition& p : spherical_partitions(7, 3)) {
        bool ok = false;
        for (int x : p.blocks[2]) ok |= x == 7;
        if (ok) out.push_back(p);
    }
    return out;
}

/// Signs over the canonical 216-element domain.
struct SignMap {
    std::map<Partition, int> values;  // +1 or -1 each

    int at(const Partition& p) const {
        auto it = values.find(p);
        if (it == values.end()) throw error("sign map: partition missing");
        return it->second;
    }
};

inline SignMap constant_sign_map(int sign = +1) {
    SignMap s;
    for (const Partition& p : spherical_partitions_7_in_t3()) s.values[p] = sign;
    return s;
}

inline void validate_sign_map(const SignMap& s) {
    auto dom = spherical_partitions_7_in_t3();
    if (s.values.size() != dom.size()) throw error("sign map: wrong domain size");
    for (const Partition& p : dom) {
        int v = s.at(p);
        if (v != 1 && v != -1) throw error("sign map: values must be +1 or -1");
    }
}

/// V(f) mod 3: the signed sum over the 216 spherical partitions of the triple
/// intersection numbers of the block images. Partitions whose shape fits
/// neither r-fold case (an empty block, or a 4-element block) contribute 0.
inline int triple_vk_number(const Drawing& d, const SignMap& s) {
    require_gp(d);
    if (d.skeleton.n != 7 || d.skeleton.edges.size() != 21)
        throw error("triple_vk_number needs a K7 drawing");
    validate_sign_map(s);
    long total = 0;
    for (const Partition& p : spherical_partitions_7_in_t3()) {
        bool shaped = true;
        for (const auto& b : p.blocks)
            if (b.empty() || b.size() > 3) shaped = false;
        if (!shaped) continue;
        std::vector<TaggedGeometry> objs;
        for (const auto& b : p.blocks) {
            if (b.size() == 1) objs.push_back(TaggedGeometry::point(d.at(b[0])));
            else if (b.size() == 2)
                objs.push_back(TaggedGeometry::open_line(d.line(make_edge(b[0], b[1]))));
            else
                objs.push_back(TaggedGeometry::closed_line(cycle_image(d, b[0], b[1], b[2])));
        }
        total += s.at(p) * r_fold_intersection_number(objs);
    }
    return static_cast<int>(((total % 3) + 3) % 3);
}

struct SignMapExperimentReport {
    std::vector<int> values;  // one value mod 3 per trial
    bool constant = false;
    bool all_nonzero = false;
};

/// Evaluates the triple van Kampen number over seeded random K7 drawings.
inline SignMapExperimentReport sign_map_experiment(const SignMap& s, int trials,
                                                   std::uint64_t seed, int threads = 1,
                                                   int bends_per_edge = 1) {
    if (trials < 1) throw error("sign_map_experiment: trials >= 1");
    validate_sign_map(s);
    SignMapExperimentReport rep;
    rep.values.assign(trials, -1);
    Graph k7 = complete_graph(7);
    auto work = [&](int from, int to) {
        for (int t = from; t < to; ++t) {
            Drawing d = random_general_position_drawing(k7, seed + (std::uint64_t)t,
                                                        bends_per_edge);
            rep.values[t] = triple_vk_number(d, s);
        }
    };
    threads = std::max(1, std::min(threads, trials));
    if (threads == 1) {
        work(0, trials);
    } else {
        std::vector<std::thread> pool;
        int chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            int from = w * chunk, to = std::min(trials, from + chunk);
            if (from < to) pool.emplace_back(work, from, to);
        }
        for (auto& th : pool) th.join();
    }
    rep.constant = std::all_of(rep.values.begin(), rep.values.end(),
                               [&](int v) { return v == rep.values[0]; });
    rep.all_nonzero = std::all_of(rep.values.begin(), rep.values.end(),
                                  [](int v) { return v != 0; });
    return rep;
}

/// Experimental: sign maps built from a chessboard coloring of the domain
/// (adjacent = the two spherical extensions of a common deletion). Returns
/// the canonical coloring and its global flip when the adjacency graph is
/// bipartite, else nothing.
inline std::vector<SignMap> chessboard_sign_maps() {
    auto dom = spherical_partitions_7_in_t3();
    std::map<Partition, int> id;
    for (std::size_t i = 0; i < dom.size(); ++i) id[dom[i]] = (int)i;

    // adjacency: delete one of 1..6, group by the remaining partition
    std::vector<std::vector<int>> adj(dom.size());
    for (int j = 1; j <= 6; ++j) {
        std::map<Partition, std::vector<int>> groups;
        for (std::size_t i = 0; i < dom.size(); ++i) {
            Partition q = dom[i];
            for (auto& b : q.blocks) std::erase(b, j);
            groups[q].push_back((int)i);
        }
        for (const auto& [g, members] : groups)
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    adj[members[a]].push_back(members[b]);
                    adj[members[b]].push_back(members[a]);
                }
    }

    std::vector<int> color(dom.size(), 0);
    for (std::size_t start = 0; start < dom.size(); ++start) {
        if (color[start] != 0) continue;
        color[start] = 1;
        std::vector<int> stack{(int)start};
        while (!stack.empty()) {
            int at = stack.back();
            stack.pop_back();
            for (int next : adj[at]) {
                if (color[next] == 0) {
                    color[next] = -color[at];
                    stack.push_back(next);
                } else if (color[next] == color[at]) {
                    return {};  // odd cycle: no chessboard coloring
                }
            }
        }
    }
    SignMap a, b;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        a.values[dom[i]] = color[i];
        b.values[dom[i]] = -color[i];
    }
    return {a, b};
}

}  // namespace drawinv

#endif
