#ifndef DRAWINV_PLANARITY_HPP
#define DRAWINV_PLANARITY_HPP

#include <memory>
#include <vector>

#include "drawinv/cohomology.hpp"
#include "drawinv/drawing.hpp"
#include "drawinv/gf2.hpp"

namespace drawinv {

/// The Hanani-Tutte linear system over GF(2): one variable per pair (A, e)
/// with A not on e, one equation per index entry, right-hand side the
/// intersection cocycle of the canonical convex drawing.
struct Gf2System {
    std::vector<std::pair<int, EdgeId>> variables;
    std::shared_ptr<const CellPairIndex> rows;
    std::vector<BitRow> matrix;       // one BitRow of variable coefficients per row
    std::vector<std::uint8_t> rhs;
};

/// Coefficients a_{A,e,sigma,tau} = 1 iff (A in sigma and e = tau) or
/// (A in tau and e = sigma); rhs from the convex drawing for the ordering.
inline Gf2System build_ht_system(const Graph& g, std::vector<int> ordering = {}) {
    Gf2System s;
    s.variables = detail::vertex_edge_pairs(g, g.edges);
    Cochain b = intersection_cocycle_mod2(canonical_convex_drawing(g, std::move(ordering)));
    s.rows = b.index;
    s.matrix.assign(s.rows->entries.size(), BitRow(s.variables.size()));
    s.rhs.resize(s.rows->entries.size());
    for (std::size_t i = 0; i < s.rows->entries.size(); ++i) {
        const Cell& sigma = s.rows->entries[i][0];
        const Cell& tau = s.rows->entries[i][1];
        for (std::size_t j = 0; j < s.variables.size(); ++j) {
            const auto& [a, e] = s.variables[j];
            bool hit = (sigma.contains(a) && Cell(e) == tau) ||
                       (tau.contains(a) && Cell(e) == sigma);
            if (hit) s.matrix[i].set(j);
        }
        s.rhs[i] = static_cast<std::uint8_t>(b.coeffs[i] != 0);
    }
    return s;
}

/// 2-hypergraph extension: rows over all of K*, the vertex-face rows with
/// zero right-hand side (the skeleton cocycle extended by zeroes), and
/// coefficients a = 1 iff (R contains A and R' contains sigma) or vice versa.
inline Gf2System build_ht_system_hyper(const Hypergraph2& k) {
    Gf2System s;
    s.variables = detail::vertex_edge_pairs(k, k.edges());
    Graph skel = k.skeleton();
    Cochain b1 = intersection_cocycle_mod2(canonical_convex_drawing(skel));
    s.rows = std::make_shared<CellPairIndex>(pair_index(k, IndexKind::hyper_kstar));
    s.matrix.assign(s.rows->entries.size(), BitRow(s.variables.size()));
    s.rhs.assign(s.rows->entries.size(), 0);
    auto holds = [](const Cell& c, const EdgeId& e) {
        return c.contains(e[0]) && c.contains(e[1]);
    };
    for (std::size_t i = 0; i < s.rows->entries.size(); ++i) {
        const Cell& r1 = s.rows->entries[i][0];
        const Cell& r2 = s.rows->entries[i][1];
        for (std::size_t j = 0; j < s.variables.size(); ++j) {
            const auto& [a, e] = s.variables[j];
            if ((r1.contains(a) && holds(r2, e)) || (r2.contains(a) && holds(r1, e)))
                s.matrix[i].set(j);
        }
        if (r1.k == 2 && r2.k == 2) s.rhs[i] = static_cast<std::uint8_t>(b1.at({r1, r2}) != 0);
    }
    return s;
}

struct PlanarityVerdict {
    bool planar = false;
    std::vector<std::pair<int, EdgeId>> witness;  // variables set to 1, when planar
    std::vector<int> certificate;                 // row indices of an odd combination
};

inline PlanarityVerdict gf2_solve(const Gf2System& s) {
    Gf2Solver solver(s.matrix, s.variables.size());
    auto res = solver.solve(s.rhs);
    PlanarityVerdict v;
    v.planar = res.solvable;
    if (res.solvable) {
        for (std::size_t j = 0; j < s.variables.size(); ++j)
            if (res.solution[j]) v.witness.push_back(s.variables[j]);
    } else {
        for (std::size_t i : res.certificate) v.certificate.push_back(static_cast<int>(i));
    }
    return v;
}

/// Hanani-Tutte planarity decision.
inline PlanarityVerdict is_planar(const Graph& g) { return gf2_solve(build_ht_system(g)); }

inline PlanarityVerdict is_planar_hyper(const Hypergraph2& k) {
    return gf2_solve(build_ht_system_hyper(k));
}

}  // namespace drawinv

#endif
