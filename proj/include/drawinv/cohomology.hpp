#ifndef DRAWINV_COHOMOLOGY_HPP
#define DRAWINV_COHOMOLOGY_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "drawinv/cochain.hpp"
#include "drawinv/combinatorics.hpp"
#include "drawinv/drawing.hpp"
#include "drawinv/gf2.hpp"
#include "drawinv/hnf.hpp"

namespace drawinv {

enum class CoboundaryFlavor {
    graph_mod2,
    graph_skew,
    hyper_mod2,
    hyper_supersym,
    hyper_r_supersym,
};

namespace detail {

inline void require_nonincident(int a, const EdgeId& sigma) {
    if (a == sigma[0] || a == sigma[1])
        throw incidence_error("vertex lies on the edge");
}

}  // namespace detail

/// delta_K(A, sigma) over K*: 1 on every pair {sigma, tau} with tau
/// containing A, 0 elsewhere.
inline Cochain elementary_coboundary(const Graph& g, int a, const EdgeId& sigma,
                                     std::shared_ptr<const CellPairIndex> ix) {
    detail::require_nonincident(a, sigma);
    Cochain nu(std::move(ix), Ring::gf2);
    Cell cs{sigma};
    for (std::size_t i = 0; i < nu.index->entries.size(); ++i) {
        const auto& e = nu.index->entries[i];
        const Cell& other = e[0] == cs ? e[1] : (e[1] == cs ? e[0] : cs);
        if (other == cs) continue;
        if (other.contains(a)) nu.coeffs[i] = 1;
    }
    return nu;
}

/// Skew-symmetric integral version on ordered pairs: -[tau:A] on
/// (sigma, tau) and +[tau:A] on (tau, sigma).
inline Cochain elementary_coboundary_skew(const Graph& g, int a, const EdgeId& sigma,
                                          std::shared_ptr<const CellPairIndex> ix) {
    detail::require_nonincident(a, sigma);
    Cochain nu(std::move(ix), Ring::integer);
    Cell cs{sigma}, ca{a};
    for (std::size_t i = 0; i < nu.index->entries.size(); ++i) {
        const auto& e = nu.index->entries[i];
        if (e[0] == cs) nu.coeffs[i] = -incidence_sign(e[1], ca);
        else if (e[1] == cs) nu.coeffs[i] = incidence_sign(e[0], ca);
    }
    return nu;
}

/// Hypergraph mod-2 coboundary on K*: 1 on {R1, R2} when one member
/// contains A and the other contains sigma.
inline Cochain elementary_coboundary(const Hypergraph2& k, int a, const EdgeId& sigma,
                                     std::shared_ptr<const CellPairIndex> ix) {
    detail::require_nonincident(a, sigma);
    Cochain nu(std::move(ix), Ring::gf2);
    auto holds_sigma = [&](const Cell& c) {
        return c.k >= 2 && c.contains(sigma[0]) && c.contains(sigma[1]);
    };
    for (std::size_t i = 0; i < nu.index->entries.size(); ++i) {
        const auto& e = nu.index->entries[i];
        if ((e[0].contains(a) && holds_sigma(e[1])) ||
            (e[1].contains(a) && holds_sigma(e[0])))
            nu.coeffs[i] = 1;
    }
    return nu;
}

/// Super-symmetric integral coboundary on ordered pairs:
///   -[tau:A] on (sigma, tau),  [tau:A] on (tau, sigma),
///   -[R:sigma] on both (A, R) and (R, A).
/// The vertex-face sign carries the same case-(B) twist as the vertex-face
/// entries of the integral cocycle; a Reidemeister move across A then changes
/// the cocycle by exactly one such coboundary on every entry kind.
inline Cochain elementary_coboundary_supersym(const Hypergraph2& k, int a,
                                              const EdgeId& sigma,
                                              std::shared_ptr<const CellPairIndex> ix) {
    detail::require_nonincident(a, sigma);
    Cochain nu(std::move(ix), Ring::integer);
    Cell cs{sigma}, ca{a};
    for (std::size_t i = 0; i < nu.index->entries.size(); ++i) {
        const auto& e = nu.index->entries[i];
        if (e[0].k == 2 && e[1].k == 2) {
            if (e[0] == cs) nu.coeffs[i] = -incidence_sign(e[1], ca);
            else if (e[1] == cs) nu.coeffs[i] = incidence_sign(e[0], ca);
        } else {
            const Cell& vtx = e[0].k == 1 ? e[0] : e[1];
            const Cell& face = e[0].k == 3 ? e[0] : e[1];
            if (vtx == ca) nu.coeffs[i] = -incidence_sign(face, cs);
        }
    }
    return nu;
}

/// Coboundary flavor dispatch over a fresh index of the matching kind.
inline Cochain elementary_coboundary(const Graph& g, int a, const EdgeId& sigma,
                                     CoboundaryFlavor flavor) {
    if (flavor == CoboundaryFlavor::graph_mod2)
        return elementary_coboundary(
            g, a, sigma,
            std::make_shared<CellPairIndex>(pair_index(g, IndexKind::graph_kstar)));
    if (flavor == CoboundaryFlavor::graph_skew)
        return elementary_coboundary_skew(
            g, a, sigma,
            std::make_shared<CellPairIndex>(pair_index(g, IndexKind::graph_ktilde)));
    throw error("elementary_coboundary: graph host needs a graph flavor");
}

inline Cochain elementary_coboundary(const Hypergraph2& k, int a, const EdgeId& sigma,
                                     CoboundaryFlavor flavor) {
    if (flavor == CoboundaryFlavor::hyper_mod2)
        return elementary_coboundary(
            k, a, sigma,
            std::make_shared<CellPairIndex>(pair_index(k, IndexKind::hyper_kstar)));
    if (flavor == CoboundaryFlavor::hyper_supersym)
        return elementary_coboundary_supersym(
            k, a, sigma,
            std::make_shared<CellPairIndex>(pair_index(k, IndexKind::hyper_ktilde)));
    throw error("elementary_coboundary: hypergraph host needs a hypergraph flavor");
}

// ---------------------------------------------------------------------------
// r-fold super-symmetric coboundaries
// ---------------------------------------------------------------------------

/// Lower tuples one dimension below the r-fold index: either a vertex, an
/// edge and r-2 faces, or three edges and r-3 faces, pairwise disjoint.
inline std::vector<std::vector<Cell>> r_coboundary_generator_cells(const Hypergraph2& k,
                                                                   int r) {
    if (r < 2) throw error("r >= 2 required");
    std::vector<Cell> vertices, edges, faces;
    for (int v = 1; v <= k.n; ++v) vertices.push_back(Cell(v));
    for (const EdgeId& e : k.edges()) edges.push_back(Cell(e));
    for (const FaceId& f : k.faces) faces.push_back(Cell(f));

    std::vector<std::vector<Cell>> out;
    std::vector<Cell> tuple;
    auto extend_faces = [&](auto&& self, std::size_t from, int need) -> void {
        if (need == 0) {
            out.push_back(tuple);
            return;
        }
        for (std::size_t i = from; i < faces.size(); ++i) {
            bool ok = true;
            for (const Cell& c : tuple)
                if (!c.disjoint(faces[i])) ok = false;
            if (!ok) continue;
            tuple.push_back(faces[i]);
            self(self, i + 1, need - 1);
            tuple.pop_back();
        }
    };
    // profile (vertex, edge, faces...)
    for (const Cell& v : vertices)
        for (const Cell& e : edges) {
            if (!v.disjoint(e)) continue;
            tuple = {v, e};
            extend_faces(extend_faces, 0, r - 2);
        }
    // profile (edge, edge, edge, faces...), unordered among the edges
    if (r >= 3) {
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (!edges[i].disjoint(edges[j])) continue;
                for (std::size_t l = j + 1; l < edges.size(); ++l) {
                    if (!edges[l].disjoint(edges[i]) || !edges[l].disjoint(edges[j]))
                        continue;
                    tuple = {edges[i], edges[j], edges[l]};
                    extend_faces(extend_faces, 0, r - 3);
                }
            }
    }
    return out;
}

namespace detail {

inline int koszul_sign(const std::vector<int>& dims, const std::vector<int>& perm) {
    // product of (-1)^{d_a d_b} over inverted pairs; only odd dims matter
    int sign = 1;
    for (std::size_t x = 0; x < perm.size(); ++x)
        for (std::size_t y = x + 1; y < perm.size(); ++y)
            if (perm[x] > perm[y] && dims[perm[x]] % 2 == 1 && dims[perm[y]] % 2 == 1)
                sign = -sign;
    return sign;
}

}  // namespace detail

/// Super-symmetrized coboundary of a lower tuple: the sum over all ordered
/// arrangements, each weighted by its Koszul sign, of the cellwise cochain
/// differential, with entries on vertex-containing tuples negated (the same
/// case-(B) twist the r-fold cocycle carries). For r = 2 and lower tuple
/// (A, sigma) this reproduces the super-symmetric coboundary above.
inline Cochain r_fold_elementary_coboundary(const Hypergraph2& k,
                                            const std::vector<Cell>& lower, int r,
                                            std::shared_ptr<const CellPairIndex> ix) {
    if ((int)lower.size() != r) throw error("lower tuple size must equal r");
    Cochain nu(ix, Ring::integer);

    std::vector<int> dims(r);
    for (int i = 0; i < r; ++i) dims[i] = lower[i].k - 1;

    // cofaces per cell: vertex -> incident edges, edge -> incident faces
    std::vector<FaceId> faces = k.faces;
    std::vector<EdgeId> edges = k.edges();

    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    do {
        int kappa = detail::koszul_sign(dims, perm);
        std::vector<Cell> arranged(r);
        for (int i = 0; i < r; ++i) arranged[i] = lower[perm[i]];
        // differential: replace one slot by a coface
        int prefix = 0;  // sum of dims before slot i, mod 2
        for (int i = 0; i < r; ++i) {
            const Cell& c = arranged[i];
            int front = (prefix % 2 == 0) ? 1 : -1;
            auto try_coface = [&](const Cell& big) {
                for (int s = 0; s < r; ++s)
                    if (s != i && !arranged[s].disjoint(big)) return;
                std::vector<Cell> entry = arranged;
                entry[i] = big;
                int pos = nu.index->find(entry);
                if (pos < 0) return;
                int twist = 1;
                for (const Cell& ec : entry)
                    if (ec.k == 1) twist = -1;
                nu.coeffs[pos] += twist * kappa * front * incidence_sign(big, c);
            };
            if (c.k == 1) {
                for (const EdgeId& e : edges)
                    if (e[0] == c.v[0] || e[1] == c.v[0]) try_coface(Cell(e));
            } else if (c.k == 2) {
                for (const FaceId& f : faces) {
                    Cell cf(f);
                    if (cf.contains(c.v[0]) && cf.contains(c.v[1])) try_coface(cf);
                }
            }
            prefix += c.k - 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return nu;
}

// ---------------------------------------------------------------------------
// span membership
// ---------------------------------------------------------------------------

/// GF(2) coboundary basis of a host, reusable across right-hand sides.
struct Gf2CoboundaryBasis {
    std::shared_ptr<const CellPairIndex> index;
    std::vector<std::pair<int, EdgeId>> generators;  // (A, sigma)
    std::unique_ptr<Gf2Solver> solver;

    std::optional<std::vector<std::pair<int, EdgeId>>> solve(const Cochain& nu) const {
        if (!(*nu.index == *index) || nu.ring != Ring::gf2)
            throw index_mismatch_error("cochain not over this basis' index");
        std::vector<std::uint8_t> b(nu.coeffs.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            b[i] = static_cast<std::uint8_t>(((nu.coeffs[i] % 2) + 2) % 2 == 1);
        auto res = solver->solve(b);
        if (!res.solvable) return std::nullopt;
        std::vector<std::pair<int, EdgeId>> witness;
        for (std::size_t j = 0; j < generators.size(); ++j)
            if (res.solution[j]) witness.push_back(generators[j]);
        return witness;
    }
};

namespace detail {

template <typename Host>
std::vector<std::pair<int, EdgeId>> vertex_edge_pairs(const Host& host,
                                                      const std::vector<EdgeId>& edges) {
    std::vector<std::pair<int, EdgeId>> out;
    for (int a = 1; a <= host.n; ++a)
        for (const EdgeId& e : edges)
            if (a != e[0] && a != e[1]) out.emplace_back(a, e);
    return out;
}

}  // namespace detail

inline Gf2CoboundaryBasis make_gf2_coboundary_basis(const Graph& g) {
    Gf2CoboundaryBasis basis;
    basis.index = std::make_shared<CellPairIndex>(pair_index(g, IndexKind::graph_kstar));
    basis.generators = detail::vertex_edge_pairs(g, g.edges);
    std::vector<BitRow> rows(basis.index->entries.size(),
                             BitRow(basis.generators.size()));
    for (std::size_t j = 0; j < basis.generators.size(); ++j) {
        Cochain col = elementary_coboundary(g, basis.generators[j].first,
                                            basis.generators[j].second, basis.index);
        for (std::size_t i = 0; i < col.coeffs.size(); ++i)
            if (col.coeffs[i] != 0) rows[i].set(j);
    }
    basis.solver =
        std::make_unique<Gf2Solver>(std::move(rows), basis.generators.size());
    return basis;
}

inline Gf2CoboundaryBasis make_gf2_coboundary_basis(const Hypergraph2& k) {
    Gf2CoboundaryBasis basis;
    basis.index = std::make_shared<CellPairIndex>(pair_index(k, IndexKind::hyper_kstar));
    basis.generators = detail::vertex_edge_pairs(k, k.edges());
    std::vector<BitRow> rows(basis.index->entries.size(),
                             BitRow(basis.generators.size()));
    for (std::size_t j = 0; j < basis.generators.size(); ++j) {
        Cochain col = elementary_coboundary(k, basis.generators[j].first,
                                            basis.generators[j].second, basis.index);
        for (std::size_t i = 0; i < col.coeffs.size(); ++i)
            if (col.coeffs[i] != 0) rows[i].set(j);
    }
    basis.solver =
        std::make_unique<Gf2Solver>(std::move(rows), basis.generators.size());
    return basis;
}

/// Integer coboundary basis; generators are lower tuples. For the pairwise
/// flavors these are (A, sigma) pairs; for the r-fold flavor they are the
/// (2r-3)-dimensional tuples of r_coboundary_generator_cells.
struct IntCoboundaryBasis {
    std::shared_ptr<const CellPairIndex> index;
    std::vector<std::vector<Cell>> generators;
    std::unique_ptr<IntSpanSolver> solver;

    /// Coefficients per generator, when the cochain lies in the span.
    std::optional<std::vector<Int>> solve(const Cochain& nu) const {
        if (!(*nu.index == *index) || nu.ring != Ring::integer)
            throw index_mismatch_error("cochain not over this basis' index");
        return solver->solve(nu.coeffs);
    }
};

inline IntCoboundaryBasis make_int_coboundary_basis(const Graph& g) {
    IntCoboundaryBasis basis;
    basis.index = std::make_shared<CellPairIndex>(pair_index(g, IndexKind::graph_ktilde));
    for (auto& [a, e] : detail::vertex_edge_pairs(g, g.edges))
        basis.generators.push_back({Cell(a), Cell(e)});
    std::vector<std::vector<Int>> m(basis.index->entries.size(),
                                    std::vector<Int>(basis.generators.size(), 0));
    for (std::size_t j = 0; j < basis.generators.size(); ++j) {
        Cochain col = elementary_coboundary_skew(g, basis.generators[j][0].v[0],
                                                 basis.generators[j][1].edge(), basis.index);
        for (std::size_t i = 0; i < col.coeffs.size(); ++i) m[i][j] = col.coeffs[i];
    }
    basis.solver = std::make_unique<IntSpanSolver>(std::move(m));
    return basis;
}

inline IntCoboundaryBasis make_int_coboundary_basis(const Hypergraph2& k) {
    IntCoboundaryBasis basis;
    basis.index = std::make_shared<CellPairIndex>(pair_index(k, IndexKind::hyper_ktilde));
    for (auto& [a, e] : detail::vertex_edge_pairs(k, k.edges()))
        basis.generators.push_back({Cell(a), Cell(e)});
    std::vector<std::vector<Int>> m(basis.index->entries.size(),
                                    std::vector<Int>(basis.generators.size(), 0));
    for (std::size_t j = 0; j < basis.generators.size(); ++j) {
        Cochain col =
            elementary_coboundary_supersym(k, basis.generators[j][0].v[0],
                                           basis.generators[j][1].edge(), basis.index);
        for (std::size_t i = 0; i < col.coeffs.size(); ++i) m[i][j] = col.coeffs[i];
    }
    basis.solver = std::make_unique<IntSpanSolver>(std::move(m));
    return basis;
}

inline IntCoboundaryBasis make_r_fold_coboundary_basis(const Hypergraph2& k, int r) {
    IntCoboundaryBasis basis;
    basis.index =
        std::make_shared<CellPairIndex>(pair_index(k, IndexKind::hyper_kunderline, r));
    basis.generators = r_coboundary_generator_cells(k, r);
    std::vector<std::vector<Int>> m(basis.index->entries.size(),
                                    std::vector<Int>(basis.generators.size(), 0));
    for (std::size_t j = 0; j < basis.generators.size(); ++j) {
        Cochain col = r_fold_elementary_coboundary(k, basis.generators[j], r, basis.index);
        for (std::size_t i = 0; i < col.coeffs.size(); ++i) m[i][j] = col.coeffs[i];
    }
    basis.solver = std::make_unique<IntSpanSolver>(std::move(m));
    return basis;
}

/// One-shot span queries (build a fresh basis per call).
inline std::optional<std::vector<std::pair<int, EdgeId>>> in_coboundary_span_gf2(
    const Cochain& nu, const Graph& g) {
    return make_gf2_coboundary_basis(g).solve(nu);
}
inline std::optional<std::vector<std::pair<int, EdgeId>>> in_coboundary_span_gf2(
    const Cochain& nu, const Hypergraph2& k) {
    return make_gf2_coboundary_basis(k).solve(nu);
}
inline std::optional<std::vector<Int>> in_coboundary_span_int(const Cochain& nu,
                                                              const Graph& g) {
    return make_int_coboundary_basis(g).solve(nu);
}
inline std::optional<std::vector<Int>> in_coboundary_span_int(const Cochain& nu,
                                                              const Hypergraph2& k) {
    if (nu.index->kind == IndexKind::hyper_kunderline)
        return make_r_fold_coboundary_basis(k, nu.index->r).solve(nu);
    return make_int_coboundary_basis(k).solve(nu);
}

namespace detail {

inline void require_same_host(const Drawing& d1, const Drawing& d2) {
    bool same = d1.skeleton == d2.skeleton && d1.hyper.has_value() == d2.hyper.has_value();
    if (same && d1.hyper) same = *d1.hyper == *d2.hyper;
    if (!same) throw host_mismatch_error("drawings have different hosts");
}

}  // namespace detail

struct CocycleDifferenceWitness {
    std::vector<std::pair<int, EdgeId>> gf2_terms;
    std::vector<Int> int_coefficients;  // aligned with the host basis generators
};

/// Lemma-star check: the cocycle difference of two drawings of one host is a
/// coboundary sum; returns the witness.
inline std::optional<CocycleDifferenceWitness> cochain_difference_in_span(
    const Drawing& d1, const Drawing& d2, Ring ring) {
    detail::require_same_host(d1, d2);
    CocycleDifferenceWitness w;
    if (ring == Ring::gf2) {
        Cochain diff = intersection_cocycle_mod2(d1) - intersection_cocycle_mod2(d2);
        auto res = d1.is_hyper() ? in_coboundary_span_gf2(diff, *d1.hyper)
                                 : in_coboundary_span_gf2(diff, d1.skeleton);
        if (!res) return std::nullopt;
        w.gf2_terms = std::move(*res);
        return w;
    }
    Cochain diff = integral_intersection_cocycle(d1) - integral_intersection_cocycle(d2);
    auto res = d1.is_hyper() ? in_coboundary_span_int(diff, *d1.hyper)
                             : in_coboundary_span_int(diff, d1.skeleton);
    if (!res) return std::nullopt;
    w.int_coefficients = std::move(*res);
    return w;
}

}  // namespace drawinv

#endif
