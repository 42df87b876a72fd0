#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "edgeideals/bits.hpp"
#include "edgeideals/graph.hpp"

namespace edgeideals {

/// Exponent vector in N^n.
using DegreeVector = std::vector<int>;

/**
 * A simplicial complex on the ground set 0..m-1, stored by its facets
 * (an antichain of masks). Two empty-like complexes are distinguished:
 * the VOID complex has no faces whatsoever, while the IRRELEVANT complex
 * consists of the single face {} and carries reduced homology in
 * dimension -1. The distinction matters for every homology computation
 * downstream.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int m) {
        SimplicialComplex d;
        d.m_ = check_ground(m);
        d.void_ = true;
        return d;
    }

    static SimplicialComplex irrelevant(int m) {
        SimplicialComplex d;
        d.m_ = check_ground(m);
        d.void_ = false;
        d.facets_ = {0};
        return d;
    }

    /// Full simplex on 0..m-1 (IRRELEVANT when m = 0).
    static SimplicialComplex simplex(int m) {
        SimplicialComplex d;
        d.m_ = check_ground(m);
        d.void_ = false;
        d.facets_ = {full_set(m)};
        return d;
    }

    /**
     * Complex generated by the given faces: dominated faces are dropped
     * and the rest become facets. An empty list yields VOID; pass {0}
     * for the IRRELEVANT complex.
     */
    static SimplicialComplex from_facets(int m, std::vector<VertexSet> faces) {
        SimplicialComplex d;
        d.m_ = check_ground(m);
        if (faces.empty()) {
            d.void_ = true;
            return d;
        }
        for (VertexSet f : faces)
            if (f & ~full_set(m)) throw std::invalid_argument("facet outside ground set");
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        // largest first, so a face is dominated iff some kept face contains it
        std::sort(faces.begin(), faces.end(),
                  [](VertexSet a, VertexSet b) { return popcount(a) > popcount(b); });
        std::vector<VertexSet> maximal;
        for (VertexSet f : faces) {
            bool dominated = false;
            for (VertexSet g : maximal)
                if ((f & ~g) == 0) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(f);
        }
        std::sort(maximal.begin(), maximal.end(), face_lex_less);
        d.void_ = false;
        d.facets_ = std::move(maximal);
        return d;
    }

    bool is_void() const { return void_; }
    bool is_irrelevant() const { return !void_ && facets_.size() == 1 && facets_[0] == 0; }
    int ground_size() const { return m_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    /// -2 for VOID, -1 for IRRELEVANT, else the largest face dimension.
    int dimension() const {
        if (void_) return -2;
        int d = -1;
        for (VertexSet f : facets_) d = std::max(d, popcount(f) - 1);
        return d;
    }

    bool contains(VertexSet face) const {
        if (void_) return false;
        for (VertexSet f : facets_)
            if ((face & ~f) == 0) return true;
        return false;
    }

    /// All i-dimensional faces in lexicographic order; {-1: {{}}} for nonvoid.
    std::vector<VertexSet> faces_of_dim(int i) const {
        if (void_ || i < -1 || i > dimension()) return {};
        if (i == -1) return {0};
        std::unordered_set<VertexSet> seen;
        std::vector<VertexSet> out;
        const int k = i + 1;
        std::vector<int> verts;
        for (VertexSet f : facets_) {
            if (popcount(f) < k) continue;
            verts = vertices_of(f);
            const int fv = static_cast<int>(verts.size());
            std::vector<int> idx(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) idx[j] = j;
            while (true) {
                VertexSet face = 0;
                for (int j = 0; j < k; ++j) face |= bit(verts[idx[j]]);
                if (seen.insert(face).second) out.push_back(face);
                int j = k - 1;
                while (j >= 0 && idx[j] == fv - k + j) --j;
                if (j < 0) break;
                ++idx[j];
                for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
            }
        }
        std::sort(out.begin(), out.end(), face_lex_less);
        return out;
    }

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && void_ == o.void_ && facets_ == o.facets_;
    }

private:
    static int check_ground(int m) {
        if (m < 0 || m > 64) throw std::invalid_argument("ground set size must be in [0, 64]");
        return m;
    }

    int m_ = 0;
    bool void_ = true;
    std::vector<VertexSet> facets_;
};

/**
 * Independence complex of a graph: faces are the edge-free vertex sets.
 * Facets are the maximal independent sets, found by Bron-Kerbosch on
 * the complement adjacency.
 */
inline SimplicialComplex independence_complex(const Graph& g) {
    if (g.n == 0) return SimplicialComplex::irrelevant(0);
    std::vector<VertexSet> out;
    const VertexSet full = g.vertex_set();
    std::vector<VertexSet> compadj(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) compadj[v] = full & ~g.adj[v] & ~bit(v);

    // iterative Bron-Kerbosch with pivoting
    struct Frame {
        VertexSet r, p, x, cand;
    };
    std::vector<Frame> stack;
    stack.push_back({0, full, 0, 0});
    bool entering = true;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (entering) {
            if (!f.p && !f.x) {
                out.push_back(f.r);
                stack.pop_back();
                entering = false;
                continue;
            }
            // pivot maximizing |P & compadj(u)|
            int best = -1, bestc = -1;
            for (VertexSet pu = f.p | f.x; pu;) {
                int u = lowest_vertex(pu);
                pu &= pu - 1;
                int c = popcount(f.p & compadj[u]);
                if (c > bestc) {
                    bestc = c;
                    best = u;
                }
            }
            f.cand = f.p & ~compadj[best];
        }
        if (!f.cand) {
            stack.pop_back();
            entering = false;
            continue;
        }
        int v = lowest_vertex(f.cand);
        f.cand &= f.cand - 1;
        VertexSet r2 = f.r | bit(v);
        VertexSet p2 = f.p & compadj[v];
        VertexSet x2 = f.x & compadj[v];
        f.p &= ~bit(v);
        f.x |= bit(v);
        stack.push_back({r2, p2, x2, 0});
        entering = true;
    }
    return SimplicialComplex::from_facets(g.n, std::move(out));
}

/// Faces of D contained in V; the ground set is unchanged.
inline SimplicialComplex restriction(const SimplicialComplex& d, VertexSet v) {
    if (v & ~full_set(d.ground_size()))
        throw std::invalid_argument("restriction set outside ground set");
    if (d.is_void()) return d;
    std::vector<VertexSet> f;
    f.reserve(d.facets().size());
    for (VertexSet fac : d.facets()) f.push_back(fac & v);
    return SimplicialComplex::from_facets(d.ground_size(), std::move(f));
}

/**
 * Alexander dual on the same ground set: faces are the subsets whose
 * complements are non-faces. Enumerates the subset lattice, so the ground
 * set is capped at 24 elements. VOID and the full simplex are swapped.
 */
inline SimplicialComplex alexander_dual(const SimplicialComplex& d) {
    const int m = d.ground_size();
    if (m > 20) throw std::invalid_argument("alexander_dual limited to ground sets <= 20");
    const VertexSet full = full_set(m);
    std::vector<VertexSet> facets;
    for (VertexSet f = 0;; ++f) {
        if (!d.contains(full & ~f)) {
            // keep only maximal dual faces
            bool maximal = true;
            for (VertexSet rest = full & ~f; rest && maximal;) {
                int v = lowest_vertex(rest);
                rest &= rest - 1;
                if (!d.contains(full & ~(f | bit(v)))) maximal = false;
            }
            if (maximal) facets.push_back(f);
        }
        if (f == full) break;
    }
    return SimplicialComplex::from_facets(m, std::move(facets));
}

struct LinkResult {
    SimplicialComplex complex;       // on re-indexed ground set
    std::vector<int> vertex_map;     // new index -> original vertex
};

/**
 * Link of a face F: all faces G with G in D, G disjoint from F and
 * G union F in D. The ground set shrinks to [m] \ F, re-indexed in
 * increasing order; the mapping back is returned for diagnostics.
 */
inline LinkResult link(const SimplicialComplex& d, VertexSet f) {
    if (!d.contains(f)) throw std::invalid_argument("link requires a face of the complex");
    std::vector<int> keep = vertices_of(full_set(d.ground_size()) & ~f);
    std::vector<int> pos(64, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<VertexSet> facets;
    for (VertexSet fac : d.facets()) {
        if ((f & ~fac) != 0) continue; // facet must contain F
        VertexSet rem = fac & ~f;
        VertexSet packed = 0;
        for (VertexSet rest = rem; rest;) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            packed |= bit(pos[v]);
        }
        facets.push_back(packed);
    }
    LinkResult r;
    r.complex = SimplicialComplex::from_facets(static_cast<int>(keep.size()), std::move(facets));
    r.vertex_map = std::move(keep);
    return r;
}

/**
 * The complex with maximal faces V \ a_1, ..., V \ a_s, re-indexed over
 * the increasing enumeration of V. With no subsets given this is the full
 * simplex on V; when every a_i = V it is the IRRELEVANT complex.
 */
inline SimplicialComplex epsilon_complex(const std::vector<VertexSet>& subsets, VertexSet v) {
    const int m = popcount(v);
    for (VertexSet a : subsets)
        if (a & ~v) throw std::invalid_argument("epsilon subsets must lie inside V");
    if (subsets.empty()) return SimplicialComplex::simplex(m);
    std::vector<int> verts = vertices_of(v);
    std::vector<int> pos(64, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<VertexSet> facets;
    facets.reserve(subsets.size());
    for (VertexSet a : subsets) {
        VertexSet packed = 0;
        for (VertexSet rest = v & ~a; rest;) {
            int w = lowest_vertex(rest);
            rest &= rest - 1;
            packed |= bit(pos[w]);
        }
        facets.push_back(packed);
    }
    return SimplicialComplex::from_facets(m, std::move(facets));
}

/// epsilon complex of the edges of H over its full vertex set.
inline SimplicialComplex epsilon_of_subgraph(const Graph& h) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("epsilon_of_subgraph requires at least one edge");
    std::vector<VertexSet> edges;
    edges.reserve(h.edges.size());
    for (auto [u, v] : h.edges) edges.push_back(bit(u) | bit(v));
    return epsilon_complex(edges, h.vertex_set());
}

/**
 * Upper Koszul complex K_b(I(G)): sets F for which x^(b-F) still lies in
 * the edge ideal; F is excluded if b - F has a negative coordinate.
 * The ground set stays 0..n-1.
 */
inline SimplicialComplex upper_koszul_complex(const Graph& g, const DegreeVector& b) {
    if (static_cast<int>(b.size()) != g.n)
        throw std::invalid_argument("degree vector length must equal the vertex count");
    for (int c : b)
        if (c < 0) throw std::invalid_argument("degree vector must be componentwise >= 0");
    VertexSet support = 0;
    for (int j = 0; j < g.n; ++j)
        if (b[j] >= 1) support |= bit(j);
    if (popcount(support) > 24)
        throw std::invalid_argument("upper_koszul_complex limited to supports <= 24");

    auto in_ideal = [&](VertexSet f) {
        // x^(b-F) in I(G) iff some edge {u,v} has (b-F)_u, (b-F)_v >= 1
        for (auto [u, v] : g.edges) {
            int bu = b[u] - ((f >> u) & 1);
            int bv = b[v] - ((f >> v) & 1);
            if (bu >= 1 && bv >= 1) return true;
        }
        return false;
    };

    std::vector<VertexSet> faces;
    VertexSet sub = support;
    while (true) {
        if (in_ideal(sub)) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & support;
    }
    return SimplicialComplex::from_facets(g.n, std::move(faces));
}

/// A vertex lying in every facet, if any (the complex is then a cone).
inline std::optional<int> is_cone(const SimplicialComplex& d) {
    if (d.is_void() || d.facets().empty()) return std::nullopt;
    VertexSet common = full_set(d.ground_size());
    for (VertexSet f : d.facets()) common &= f;
    if (!common) return std::nullopt;
    return lowest_vertex(common);
}

} // namespace edgeideals
