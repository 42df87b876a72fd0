#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "edgeideals/betti.hpp"
#include "edgeideals/complex.hpp"
#include "edgeideals/graph.hpp"
#include "edgeideals/homology.hpp"

namespace edgeideals {

/**
 * A simplicial complex whose vertices stand for monomial generators and
 * carry exponent-vector labels; a face is labelled by the componentwise
 * maximum (the lcm) of its vertices.
 */
struct LabeledCellComplex {
    SimplicialComplex complex; // ground set = generator indices
    int nvars = 0;
    std::vector<DegreeVector> labels; // one per vertex

    DegreeVector face_label(VertexSet face) const {
        DegreeVector out(static_cast<std::size_t>(nvars), 0);
        for (VertexSet rest = face; rest;) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            for (int c = 0; c < nvars; ++c)
                out[static_cast<std::size_t>(c)] =
                    std::max(out[static_cast<std::size_t>(c)],
                             labels[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]);
        }
        return out;
    }
};

inline bool degree_leq(const DegreeVector& a, const DegreeVector& b) {
    for (std::size_t c = 0; c < a.size(); ++c)
        if (a[c] > b[c]) return false;
    return true;
}

inline DegreeVector degree_join(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = std::max(a[c], b[c]);
    return out;
}

/// Full simplex on the edge generators of I(G), labelled by exponents.
inline LabeledCellComplex taylor_complex(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("taylor complex needs >= 1 edge");
    if (g.edge_count() > 64)
        throw std::invalid_argument("taylor complex limited to 64 generators");
    LabeledCellComplex x;
    x.nvars = g.n;
    x.complex = SimplicialComplex::simplex(g.edge_count());
    for (auto [u, v] : g.edges) {
        DegreeVector lab(static_cast<std::size_t>(g.n), 0);
        lab[static_cast<std::size_t>(u)] = 1;
        lab[static_cast<std::size_t>(v)] = 1;
        x.labels.push_back(std::move(lab));
    }
    return x;
}

/**
 * Subcomplex induced on the vertices with label componentwise <= b.
 * With no qualifying vertex the result is VOID (all homology zero),
 * matching the degree-b strand of the would-be resolution being zero.
 */
inline SimplicialComplex restrict_below(const LabeledCellComplex& x, const DegreeVector& b) {
    if (static_cast<int>(b.size()) != x.nvars)
        throw std::invalid_argument("degree vector length mismatch");
    VertexSet q = 0;
    for (std::size_t v = 0; v < x.labels.size(); ++v)
        if (degree_leq(x.labels[v], b)) q |= bit(static_cast<int>(v));
    if (!q) return SimplicialComplex::void_complex(x.complex.ground_size());
    std::vector<VertexSet> facets;
    for (VertexSet f : x.complex.facets()) facets.push_back(f & q);
    return SimplicialComplex::from_facets(x.complex.ground_size(), std::move(facets));
}

struct CellularCheck {
    bool acyclic = true;
    std::vector<DegreeVector> witnesses; // lattice degrees with nonzero homology
};

/**
 * Acyclicity criterion for a labelled complex to support a resolution:
 * every restriction below a degree must have vanishing reduced homology.
 * Restrictions only change at joins of vertex labels, so exactly the
 * lcm-lattice points are checked, in lexicographic order. Cones are
 * recognized before any matrix work.
 */
inline CellularCheck is_cellular_resolution(const LabeledCellComplex& x, FieldSpec field) {
    std::set<DegreeVector> lattice(x.labels.begin(), x.labels.end());
    while (true) {
        std::set<DegreeVector> grown = lattice;
        for (const auto& a : lattice)
            for (const auto& l : x.labels) grown.insert(degree_join(a, l));
        if (grown.size() == lattice.size()) break;
        lattice = std::move(grown);
    }
    CellularCheck out;
    for (const auto& b : lattice) {
        SimplicialComplex r = restrict_below(x, b);
        if (r.is_void()) continue;
        if (is_cone(r)) continue;
        if (!reduced_homology(r, field).all_zero()) {
            out.acyclic = false;
            out.witnesses.push_back(b);
        }
    }
    return out;
}

/**
 * The forced candidate shape for a minimal cellular resolution of I(C_4):
 * a solid triangle {a,b,c} with a pendant edge {c,d} (f-vector 4,4,1).
 */
inline SimplicialComplex c4_candidate_shape() {
    return SimplicialComplex::from_facets(4, {bit(0) | bit(1) | bit(2), bit(2) | bit(3)});
}

struct C4Assignment {
    std::array<int, 4> generator_of_vertex; // vertex a,b,c,d -> generator index
    CellularCheck check;
};

struct C4SearchResult {
    bool no_minimal_cellular = true; // every assignment fails the criterion
    std::vector<C4Assignment> assignments;
    std::vector<DegreeVector> generators;
};

/**
 * Tries all 4! assignments of the generators of I(C_4) to the vertices of
 * the candidate shape and records the failing degrees of each. The search
 * is exhaustive rather than trusting any symmetry of the shape.
 */
inline C4SearchResult c4_minimal_cellular_search(FieldSpec field) {
    const Graph c4 = cycle_graph(4);
    C4SearchResult result;
    for (auto [u, v] : c4.edges) {
        DegreeVector lab(4, 0);
        lab[static_cast<std::size_t>(u)] = 1;
        lab[static_cast<std::size_t>(v)] = 1;
        result.generators.push_back(std::move(lab));
    }
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        LabeledCellComplex x;
        x.nvars = 4;
        x.complex = c4_candidate_shape();
        for (int vtx = 0; vtx < 4; ++vtx)
            x.labels.push_back(result.generators[static_cast<std::size_t>(perm[vtx])]);
        C4Assignment a;
        a.generator_of_vertex = perm;
        a.check = is_cellular_resolution(x, field);
        if (a.check.acyclic) result.no_minimal_cellular = false;
        result.assignments.push_back(std::move(a));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

inline bool c4_has_no_minimal_cellular(FieldSpec field) {
    return c4_minimal_cellular_search(field).no_minimal_cellular;
}

/// True iff the computed table satisfies beta_{i,d} = 0 whenever d > 2i.
inline bool vanishing_bound_check(const Graph& g, FieldSpec field,
                                  int ceiling = kDefaultCeiling) {
    BettiTable t = betti_hochster(g, field, ceiling);
    for (const auto& [key, v] : t.graded) {
        (void)v;
        if (key.second > 2 * key.first) return false;
    }
    return true;
}

} // namespace edgeideals
