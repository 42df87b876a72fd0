#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgeideals/bits.hpp"

namespace edgeideals {

/**
 * A finite simple graph on vertices 0..n-1. Edges are stored as sorted,
 * deduplicated pairs (u, v) with u < v; isolated vertices are allowed and
 * counted by n. Vertex counts are capped at 64 so that vertex subsets fit
 * in a machine word.
 */
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> adj; // adj[v] = neighbour mask of v

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return popcount(adj[v]); }
    VertexSet vertex_set() const { return full_set(n); }

    bool has_edge(int u, int v) const { return (adj[u] & bit(v)) != 0; }

    /// True when some edge lies entirely inside the mask.
    bool has_edge_within(VertexSet mask) const {
        for (VertexSet rest = mask; rest;) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            if (adj[v] & rest) return true;
        }
        return false;
    }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > 64) throw std::invalid_argument("vertex count exceeds 64");
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("loop edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") rejected");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range in (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adj.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges) {
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
    }
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, std::move(e));
}

inline Graph complete_bipartite_graph(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("bipartite sides must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v) e.emplace_back(u, n + v);
    return make_graph(n + m, std::move(e));
}

inline Graph complete_multipartite_graph(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("multipartite graph needs >= 2 parts");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("multipartite part sizes must be >= 1");
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> start(parts.size());
    int acc = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        start[i] = acc;
        acc += parts[i];
    }
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v)
                    e.emplace_back(start[i] + u, start[j] + v);
    return make_graph(total, std::move(e));
}

/// Star with n leaves: n+1 vertices, centre at index 0.
inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= n; ++v) e.emplace_back(0, v);
    return make_graph(n + 1, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return make_graph(n, std::move(e));
}

/// Path on n vertices 0-1-...-(n-1).
inline Graph line_graph(int n) {
    if (n < 2) throw std::invalid_argument("line graph needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return make_graph(n, std::move(e));
}

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return make_graph(g.n, std::move(e));
}

/// Disjoint union; the second graph's vertices are shifted past the first's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges;
    for (auto [u, v] : b.edges) e.emplace_back(a.n + u, a.n + v);
    return make_graph(a.n + b.n, std::move(e));
}

/**
 * Induced subgraph on the vertices of W, re-indexed to 0..|W|-1 in
 * increasing order of original index.
 */
inline Graph induced_subgraph(const Graph& g, VertexSet w) {
    if (w & ~g.vertex_set()) throw std::invalid_argument("vertex set out of range");
    std::vector<int> verts = vertices_of(w);
    std::vector<int> pos(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        if (pos[u] >= 0 && pos[v] >= 0) e.emplace_back(pos[u], pos[v]);
    return make_graph(static_cast<int>(verts.size()), std::move(e));
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen = 0;
    for (int v = 0; v < g.n; ++v) {
        if (seen & bit(v)) continue;
        VertexSet comp = bit(v);
        VertexSet frontier = bit(v);
        while (frontier) {
            int u = lowest_vertex(frontier);
            frontier &= frontier - 1;
            VertexSet fresh = g.adj[u] & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n == 0 || connected_components(g).size() == 1;
}

inline bool is_forest(const Graph& g) {
    // acyclic iff |E| = n - #components
    auto comps = connected_components(g);
    return g.edge_count() == g.n - static_cast<int>(comps.size());
}

/**
 * Number of vertex subsets of size 2i whose induced subgraph is exactly
 * i pairwise disjoint edges, by direct enumeration.
 */
inline long long count_induced_matchings(const Graph& g, int i) {
    if (i < 1) throw std::invalid_argument("matching size must be >= 1");
    if (2 * i > g.n) return 0;
    long long count = 0;
    const VertexSet top_block = full_set(g.n) & ~full_set(g.n - 2 * i);
    VertexSet s = full_set(2 * i);
    while (true) {
        // an induced i-matching is a 2i-set in which every vertex has degree 1
        bool ok = true;
        for (VertexSet rest = s; rest && ok;) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            if (popcount(g.adj[v] & s) != 1) ok = false;
        }
        if (ok) ++count;
        if (s == top_block) break;
        // next subset of the same size (Gosper)
        VertexSet c = s & (~s + 1);
        VertexSet r = s + c;
        s = (((s ^ r) >> 2) / c) | r;
    }
    return count;
}

/**
 * A pivot for the forest recursion: a vertex v whose neighbours all have
 * degree 1 except possibly the distinguished one, `last`. When v itself has
 * degree 1 its unique neighbour must also be a leaf. `leaves` holds the
 * other neighbours in increasing index order; `last` is the unique
 * non-leaf neighbour when present, otherwise the largest-index leaf.
 */
struct ForestPivot {
    int v = -1;
    std::vector<int> leaves;
    int last = -1;
    int degree() const { return static_cast<int>(leaves.size()) + 1; }
};

namespace detail {

inline std::optional<ForestPivot> pivot_in_mask(const std::vector<VertexSet>& adj,
                                                VertexSet mask) {
    for (VertexSet rest = mask; rest;) {
        int v = lowest_vertex(rest);
        rest &= rest - 1;
        VertexSet nbrs = adj[v] & mask;
        if (!nbrs) continue;
        std::vector<int> leaves;
        int heavy = -1;
        bool ok = true;
        for (VertexSet nn = nbrs; nn;) {
            int u = lowest_vertex(nn);
            nn &= nn - 1;
            if (popcount(adj[u] & mask) == 1) {
                leaves.push_back(u);
            } else if (heavy < 0) {
                heavy = u;
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (leaves.empty()) continue; // degree-1 vertex hanging off a heavy vertex
        ForestPivot p;
        p.v = v;
        if (heavy >= 0) {
            p.last = heavy;
            p.leaves = std::move(leaves);
        } else {
            p.last = leaves.back();
            leaves.pop_back();
            p.leaves = std::move(leaves);
        }
        return p;
    }
    return std::nullopt;
}

} // namespace detail

inline ForestPivot find_forest_pivot(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("pivot search requires a forest");
    if (g.edge_count() == 0) throw std::invalid_argument("pivot search requires an edge");
    auto p = detail::pivot_in_mask(g.adj, g.vertex_set());
    if (!p) throw std::logic_error("forest with an edge must contain a pivot");
    return *p;
}

} // namespace edgeideals
