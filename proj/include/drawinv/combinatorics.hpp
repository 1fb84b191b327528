#ifndef DRAWINV_COMBINATORICS_HPP
#define DRAWINV_COMBINATORICS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "drawinv/errors.hpp"

namespace drawinv {

using EdgeId = std::array<int, 2>;  // sorted
using FaceId = std::array<int, 3>;  // sorted

inline EdgeId make_edge(int a, int b) {
    if (a == b) throw error("loop edge");
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

inline FaceId make_face(int a, int b, int c) {
    FaceId f{a, b, c};
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2]) throw error("degenerate face");
    return f;
}

/// Simple graph on vertices 1..n.
struct Graph {
    int n = 0;
    std::vector<EdgeId> edges;  // sorted, unique

    Graph() = default;
    Graph(int nv, std::vector<EdgeId> es) : n(nv), edges(std::move(es)) { normalize(); }

    void normalize() {
        for (const EdgeId& e : edges)
            if (e[0] < 1 || e[1] > n) throw error("edge endpoint out of range");
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool has_edge(int a, int b) const {
        EdgeId e = make_edge(a, b);
        return std::binary_search(edges.begin(), edges.end(), e);
    }
    int degree(int v) const {
        int d = 0;
        for (const EdgeId& e : edges) d += (e[0] == v || e[1] == v);
        return d;
    }
    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (const EdgeId& e : edges) {
            if (e[0] == v) out.push_back(e[1]);
            if (e[1] == v) out.push_back(e[0]);
        }
        return out;
    }

    friend bool operator==(const Graph& g, const Graph& h) {
        return g.n == h.n && g.edges == h.edges;
    }
};

inline Graph complete_graph(int n) {
    if (n < 1) throw error("complete_graph needs n >= 1");
    std::vector<EdgeId> es;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) es.push_back({a, b});
    return Graph(n, std::move(es));
}

/// K_{m,n} with parts {1..m} and {m+1..m+n}.
inline Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw error("complete_bipartite needs m, n >= 1");
    std::vector<EdgeId> es;
    for (int a = 1; a <= m; ++a)
        for (int b = m + 1; b <= m + n; ++b) es.push_back({a, b});
    return Graph(m + n, std::move(es));
}

inline Graph petersen_graph() {
    std::vector<EdgeId> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(make_edge(i + 1, (i + 1) % 5 + 1));        // outer cycle
        es.push_back(make_edge(i + 6, (i + 2) % 5 + 6));        // inner pentagram
        es.push_back(make_edge(i + 1, i + 6));                  // spokes
    }
    return Graph(10, std::move(es));
}

/// Hub n+1 joined to the cycle 1..n.
inline Graph wheel_graph(int n) {
    if (n < 3) throw error("wheel needs cycle length >= 3");
    std::vector<EdgeId> es;
    for (int i = 1; i <= n; ++i) {
        es.push_back(make_edge(i, i % n + 1));
        es.push_back(make_edge(i, n + 1));
    }
    return Graph(n + 1, std::move(es));
}

inline Graph grid_graph(int w, int h) {
    std::vector<EdgeId> es;
    auto id = [&](int x, int y) { return y * w + x + 1; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) es.push_back(make_edge(id(x, y), id(x + 1, y)));
            if (y + 1 < h) es.push_back(make_edge(id(x, y), id(x, y + 1)));
        }
    return Graph(w * h, std::move(es));
}

/// 2-hypergraph: vertex set 1..n with 3-element faces; edges are derived as
/// the 2-subsets contained in some face.
struct Hypergraph2 {
    int n = 0;
    std::vector<FaceId> faces;  // sorted, unique

    Hypergraph2() = default;
    Hypergraph2(int nv, std::vector<FaceId> fs) : n(nv), faces(std::move(fs)) {
        for (const FaceId& f : faces)
            if (f[0] < 1 || f[2] > n) throw error("face vertex out of range");
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    }

    std::vector<EdgeId> edges() const {
        std::vector<EdgeId> es;
        for (const FaceId& f : faces) {
            es.push_back({f[0], f[1]});
            es.push_back({f[1], f[2]});
            es.push_back({f[0], f[2]});
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return es;
    }

    Graph skeleton() const { return Graph(n, edges()); }

    friend bool operator==(const Hypergraph2& a, const Hypergraph2& b) {
        return a.n == b.n && a.faces == b.faces;
    }
};

/// Complete 2-hypergraph Delta^2_n: n+1 vertices, all 3-subsets as faces.
inline Hypergraph2 complete_2_hypergraph(int n) {
    if (n < 2) throw error("complete_2_hypergraph needs n >= 2");
    std::vector<FaceId> fs;
    for (int a = 1; a <= n + 1; ++a)
        for (int b = a + 1; b <= n + 1; ++b)
            for (int c = b + 1; c <= n + 1; ++c) fs.push_back({a, b, c});
    return Hypergraph2(n + 1, std::move(fs));
}

/// A vertex, edge or face, stored with sorted vertex list; the stored order
/// is the cell's orientation (edge ab runs a -> b, face abc runs a -> b -> c).
struct Cell {
    int k = 0;  // 1, 2 or 3
    std::array<int, 3> v{0, 0, 0};

    Cell() = default;
    explicit Cell(int a) : k(1), v{a, 0, 0} {}
    Cell(const EdgeId& e) : k(2), v{e[0], e[1], 0} {}
    Cell(const FaceId& f) : k(3), v{f[0], f[1], f[2]} {}

    bool contains(int x) const {
        for (int i = 0; i < k; ++i)
            if (v[i] == x) return true;
        return false;
    }
    bool disjoint(const Cell& o) const {
        for (int i = 0; i < k; ++i)
            if (o.contains(v[i])) return false;
        return true;
    }
    EdgeId edge() const { return {v[0], v[1]}; }

    friend bool operator==(const Cell& a, const Cell& b) { return a.k == b.k && a.v == b.v; }
    friend bool operator<(const Cell& a, const Cell& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.v < b.v;
    }
};

/// Incidence sign of an oriented cell r against an oriented cell r', exactly
/// the table [AB:B] = 1, [AB:A] = -1, [ABC:BA] = [ABC:CB] = [ABC:AC] = 1,
/// [ABC:AB] = [ABC:BC] = [ABC:CA] = -1; zero elsewhere. The face table is
/// invariant under cyclic rotation of the face sequence.
inline int incidence_sign(const std::vector<int>& r, const std::vector<int>& rp) {
    if (r.size() == 2 && rp.size() == 1) {
        if (rp[0] == r[1]) return +1;
        if (rp[0] == r[0]) return -1;
        return 0;
    }
    if (r.size() == 3 && rp.size() == 2) {
        for (int i = 0; i < 3; ++i) {
            int a = r[i], b = r[(i + 1) % 3];
            if (rp[0] == a && rp[1] == b) return -1;
            if (rp[0] == b && rp[1] == a) return +1;
        }
        return 0;
    }
    return 0;
}

/// Same table over stored-order cells.
inline int incidence_sign(const Cell& r, const Cell& rp) {
    std::vector<int> a(r.v.begin(), r.v.begin() + r.k);
    std::vector<int> b(rp.v.begin(), rp.v.begin() + rp.k);
    return incidence_sign(a, b);
}

enum class IndexKind {
    graph_kstar,       // unordered pairs of non-adjacent edges
    graph_ktilde,      // ordered pairs of non-adjacent edges
    hyper_kstar,       // unordered disjoint pairs from V|E|F with |R1|+|R2| = 4
    hyper_ktilde,      // ordered version of hyper_kstar
    hyper_kunderline,  // ordered r-tuples of disjoint cells, profiles (A)/(B)
};

/// Index set of cell tuples a cochain is defined on, in a fixed canonical
/// order with O(log) entry lookup.
struct CellPairIndex {
    IndexKind kind{};
    int r = 2;
    std::vector<std::vector<Cell>> entries;
    std::map<std::vector<Cell>, int> position;

    void finish() {
        std::sort(entries.begin(), entries.end());
        entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
        for (std::size_t i = 0; i < entries.size(); ++i)
            position.emplace(entries[i], static_cast<int>(i));
    }

    int find(const std::vector<Cell>& entry) const {
        auto it = position.find(entry);
        return it == position.end() ? -1 : it->second;
    }

    friend bool operator==(const CellPairIndex& a, const CellPairIndex& b) {
        return a.kind == b.kind && a.r == b.r && a.entries == b.entries;
    }
};

inline CellPairIndex pair_index(const Graph& g, IndexKind kind) {
    if (kind != IndexKind::graph_kstar && kind != IndexKind::graph_ktilde)
        throw error("pair_index: graph host supports graph index kinds only");
    CellPairIndex ix;
    ix.kind = kind;
    for (const EdgeId& e : g.edges)
        for (const EdgeId& f : g.edges) {
            if (!(e < f)) continue;
            Cell ce(e), cf(f);
            if (!ce.disjoint(cf)) continue;
            if (kind == IndexKind::graph_kstar) {
                ix.entries.push_back({ce, cf});
            } else {
                ix.entries.push_back({ce, cf});
                ix.entries.push_back({cf, ce});
            }
        }
    ix.finish();
    return ix;
}

inline CellPairIndex pair_index(const Hypergraph2& k, IndexKind kind, int r = 2) {
    CellPairIndex ix;
    ix.kind = kind;
    if (kind == IndexKind::hyper_kstar || kind == IndexKind::hyper_ktilde) {
        std::vector<Cell> cells;
        for (const EdgeId& e : k.edges()) cells.push_back(Cell(e));
        for (const FaceId& f : k.faces) cells.push_back(Cell(f));
        for (int a = 1; a <= k.n; ++a) cells.push_back(Cell(a));
        for (const Cell& c1 : cells)
            for (const Cell& c2 : cells) {
                if (!(c1 < c2)) continue;
                if (c1.k + c2.k != 4 || !c1.disjoint(c2)) continue;
                if (kind == IndexKind::hyper_kstar) {
                    ix.entries.push_back({c1, c2});
                } else {
                    ix.entries.push_back({c1, c2});
                    ix.entries.push_back({c2, c1});
                }
            }
        ix.finish();
        return ix;
    }
    if (kind != IndexKind::hyper_kunderline) throw error("pair_index: bad kind");
    if (r < 2) throw error("pair_index: r >= 2 required");
    ix.r = r;
    // profiles: (A) two edges, r-2 faces; (B) one vertex, r-1 faces
    std::vector<Cell> cells;
    for (int a = 1; a <= k.n; ++a) cells.push_back(Cell(a));
    for (const EdgeId& e : k.edges()) cells.push_back(Cell(e));
    for (const FaceId& f : k.faces) cells.push_back(Cell(f));
    std::vector<Cell> tuple(r);
    std::vector<bool> used(k.n + 1, false);
    auto rec = [&](auto&& self, int slot, int nv, int ne, int nf) -> void {
        if (slot == r) {
            bool a_case = nv == 0 && ne == 2;
            bool b_case = nv == 1 && ne == 0;
            if (a_case || b_case) ix.entries.push_back(tuple);
            return;
        }
        for (const Cell& c : cells) {
            if (c.k == 1 && nv == 1) continue;
            if (c.k == 2 && ne == 2) continue;
            bool clash = false;
            for (int i = 0; i < c.k; ++i)
                if (used[c.v[i]]) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (int i = 0; i < c.k; ++i) used[c.v[i]] = true;
            tuple[slot] = c;
            self(self, slot + 1, nv + (c.k == 1), ne + (c.k == 2), nf + (c.k == 3));
            for (int i = 0; i < c.k; ++i) used[c.v[i]] = false;
        }
    };
    rec(rec, 0, 0, 0, 0);
    ix.finish();
    return ix;
}

/// Ordered partition into blocks (each sorted); blocks may be empty.
struct Partition {
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.blocks == b.blocks;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.blocks < b.blocks;
    }
};

/// Consecutive-pair rule: for each pair (2j-1, 2j) wholly inside the ground
/// set, the block of 2j must be adjacent (mod r) to the block of 2j-1.
/// Elements whose twin is absent are unconstrained.
inline bool is_spherical(const Partition& p, int r) {
    std::map<int, int> block_of;
    int maxel = 0;
    for (int s = 0; s < (int)p.blocks.size(); ++s)
        for (int x : p.blocks[s]) {
            block_of[x] = s;
            maxel = std::max(maxel, x);
        }
    for (int j = 1; 2 * j <= maxel; ++j) {
        auto a = block_of.find(2 * j - 1);
        auto b = block_of.find(2 * j);
        if (a == block_of.end() || b == block_of.end()) continue;
        int s = a->second, t = b->second;
        if (t == (s + 1) % r || s == (t + 1) % r) continue;
        return false;
    }
    return true;
}

/// All ordered spherical partitions of [m] into r possibly-empty blocks.
inline std::vector<Partition> spherical_partitions(int m, int r) {
    if (r < 2) throw bad_size_error("spherical_partitions: r >= 2 required");
    if (m != 3 * r - 3 && m != 3 * r - 2)
        throw bad_size_error("spherical_partitions: m must be 3r-3 or 3r-2");
    std::vector<Partition> out;
    Partition p;
    p.blocks.assign(r, {});
    auto rec = [&](auto&& self, int x) -> void {
        if (x > m) {
            out.push_back(p);
            return;
        }
        bool even = (x % 2 == 0) && x <= m;
        for (int s = 0; s < r; ++s) {
            if (even && x - 1 >= 1) {
                // locate twin 2j-1 = x-1 (already placed)
                int twin_block = -1;
                for (int b = 0; b < r && twin_block < 0; ++b)
                    for (int y : p.blocks[b])
                        if (y == x - 1) {
                            twin_block = b;
                            break;
                        }
                if (twin_block >= 0) {
                    bool adj = s == (twin_block + 1) % r || twin_block == (s + 1) % r;
                    if (!adj) continue;
                }
            }
            p.blocks[s].push_back(x);
            self(self, x + 1);
            p.blocks[s].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

struct SubdivisionWitness {
    std::vector<int> branch;               // branch[i] = image of vertex i+1 of h
    std::vector<std::vector<int>> paths;   // one path in g per edge of h
};

/// Brute-force search for a subdivision of h inside g: an injective branch
/// assignment plus internally disjoint paths. Exponential; guarded.
inline std::optional<SubdivisionWitness> contains_subdivision(const Graph& g, const Graph& h,
                                                              int guard = 12) {
    if (g.n > guard) throw too_large_error("contains_subdivision: graph above size guard");
    std::vector<std::vector<int>> adj(g.n + 1);
    for (const EdgeId& e : g.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }

    std::vector<int> branch(h.n + 1, 0);
    std::vector<bool> taken(g.n + 1, false);   // branch images
    std::vector<bool> used(g.n + 1, false);    // path interiors
    std::vector<std::vector<int>> paths(h.edges.size());

    auto find_paths = [&](auto&& self, std::size_t ei) -> bool {
        if (ei == h.edges.size()) return true;
        int from = branch[h.edges[ei][0]];
        int to = branch[h.edges[ei][1]];
        std::vector<int> path{from};
        auto dfs = [&](auto&& dself, int at) -> bool {
            for (int next : adj[at]) {
                if (next == to) {
                    path.push_back(to);
                    paths[ei] = path;
                    if (self(self, ei + 1)) return true;
                    paths[ei].clear();
                    path.pop_back();
                    continue;
                }
                if (taken[next] || used[next]) continue;
                used[next] = true;
                path.push_back(next);
                if (dself(dself, next)) return true;
                path.pop_back();
                used[next] = false;
            }
            return false;
        };
        return dfs(dfs, from);
    };

    auto assign = [&](auto&& self, int hv) -> bool {
        if (hv > h.n) return find_paths(find_paths, 0);
        for (int gv = 1; gv <= g.n; ++gv) {
            if (taken[gv] || g.degree(gv) < h.degree(hv)) continue;
            taken[gv] = true;
            branch[hv] = gv;
            if (self(self, hv + 1)) return true;
            taken[gv] = false;
        }
        return false;
    };

    if (!assign(assign, 1)) return std::nullopt;
    SubdivisionWitness w;
    w.branch.assign(branch.begin() + 1, branch.end());
    w.paths = paths;
    return w;
}

/// Kuratowski test oracle: planar iff no subdivision of K5 or K_{3,3}.
inline bool kuratowski_free(const Graph& g, int guard = 12) {
    return !contains_subdivision(g, complete_graph(5), guard) &&
           !contains_subdivision(g, complete_bipartite(3, 3), guard);
}

}  // namespace drawinv

#endif
