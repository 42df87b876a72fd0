#pragma once

#include <algorithm>
#include <random>
#include <unordered_map>
#include <vector>

#include "edgeideals/betti.hpp"
#include "edgeideals/graph.hpp"

namespace edgeideals {

namespace detail {

using GradedMap = std::map<std::pair<int, int>, long long>;

struct ForestEngine {
    const std::vector<VertexSet>& adj;
    std::unordered_map<VertexSet, GradedMap> memo;
    std::mt19937_64* rng = nullptr; // when set, pivots are chosen at random

    explicit ForestEngine(const std::vector<VertexSet>& a) : adj(a) {}

    bool has_edge(VertexSet mask) const {
        for (VertexSet rest = mask; rest;) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            if (adj[v] & rest) return true;
        }
        return false;
    }

    ForestPivot pick_pivot(VertexSet mask) {
        if (!rng) {
            auto p = pivot_in_mask(adj, mask);
            if (!p) throw std::logic_error("forest with an edge must contain a pivot");
            return *p;
        }
        // collect every qualifying pivot, then pick one (and a random leaf
        // ordering); any valid choice must give the same table
        std::vector<ForestPivot> all;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            if (!(mask & bit(v))) continue;
            VertexSet nbrs = adj[v] & mask;
            if (!nbrs) continue;
            std::vector<int> leaves;
            int heavy = -1;
            bool ok = true;
            for (VertexSet nn = nbrs; nn;) {
                int u = lowest_vertex(nn);
                nn &= nn - 1;
                if (popcount(adj[u] & mask) == 1)
                    leaves.push_back(u);
                else if (heavy < 0)
                    heavy = u;
                else {
                    ok = false;
                    break;
                }
            }
            if (!ok || leaves.empty()) continue;
            // any leaf ordering is a valid labelling, so shuffle them all
            std::shuffle(leaves.begin(), leaves.end(), *rng);
            ForestPivot p;
            p.v = v;
            if (heavy >= 0) {
                p.last = heavy;
            } else {
                p.last = leaves.back();
                leaves.pop_back();
            }
            p.leaves = std::move(leaves);
            all.push_back(std::move(p));
        }
        return all[(*rng)() % all.size()];
    }

    const GradedMap& compute(VertexSet mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        GradedMap table;
        if (!has_edge(mask)) {
            table[{0, 0}] = 1;
        } else {
            ForestPivot p = pick_pivot(mask);
            const int n = p.degree();
            const int v1 = p.leaves.empty() ? p.last : p.leaves.front();
            VertexSet removed = bit(p.v) | bit(p.last);
            for (int leaf : p.leaves) removed |= bit(leaf);

            const GradedMap& tprime = compute(mask & ~bit(v1));
            for (const auto& [key, val] : tprime)
                table[key] = checked_add(table[key], val);
            const GradedMap& tsecond = compute(mask & ~removed);
            for (int j = 0; j <= n - 1; ++j) {
                long long c = binomial(n - 1, j);
                for (const auto& [key, val] : tsecond) {
                    auto dest = std::make_pair(key.first + j + 1, key.second + j + 2);
                    table[dest] = checked_add(table[dest], checked_mul(c, val));
                }
            }
        }
        return memo.emplace(mask, std::move(table)).first->second;
    }
};

} // namespace detail

/**
 * Graded Betti table of a forest by pivot recursion: with pivot v of
 * degree n, leaf neighbour v1, T' = T - v1 and T'' = T - (v and all its
 * neighbours),
 *
 *   beta_{i,d}(T) = beta_{i,d}(T')
 *                 + sum_{j=0}^{n-1} C(n-1, j) beta_{i-j-1, d-j-2}(T'').
 *
 * Subforests are memoized by their surviving vertex mask. The base case,
 * an edgeless forest, is the single entry beta_{0,0} = 1. The table never
 * depends on a coefficient field.
 */
inline BettiTable betti_forest(const Graph& g) {
    if (!is_forest(g))
        throw std::invalid_argument("betti_forest requires a forest; use a general engine");
    detail::ForestEngine eng(g.adj);
    const auto& m = eng.compute(g.vertex_set());
    BettiTable t;
    t.convention = Convention::quotient;
    t.n = g.n;
    t.graded = m;
    return t;
}

/// Same recursion with randomized (still valid) pivot choices; for tests.
inline BettiTable betti_forest_randomized(const Graph& g, std::uint64_t seed) {
    if (!is_forest(g))
        throw std::invalid_argument("betti_forest requires a forest; use a general engine");
    std::mt19937_64 rng(seed);
    detail::ForestEngine eng(g.adj);
    eng.rng = &rng;
    const auto& m = eng.compute(g.vertex_set());
    BettiTable t;
    t.convention = Convention::quotient;
    t.n = g.n;
    t.graded = m;
    return t;
}

/**
 * Projective dimension of a forest by the same decomposition:
 * pd(T) = max(pd(T'), pd(T'') + deg v), with pd = 0 for edgeless forests.
 */
inline int pd_forest(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("pd_forest requires a forest");
    std::unordered_map<VertexSet, int> memo;
    auto rec = [&](auto&& self, VertexSet mask) -> int {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int result = 0;
        auto piv = detail::pivot_in_mask(g.adj, mask);
        if (piv) {
            const int n = piv->degree();
            const int v1 = piv->leaves.empty() ? piv->last : piv->leaves.front();
            VertexSet removed = bit(piv->v) | bit(piv->last);
            for (int leaf : piv->leaves) removed |= bit(leaf);
            int p1 = self(self, mask & ~bit(v1));
            int p2 = self(self, mask & ~removed);
            result = std::max(p1, p2 + n);
        }
        memo[mask] = result;
        return result;
    };
    return rec(rec, g.vertex_set());
}

/**
 * Largest homological index with a nonzero Betti number, plus the (i, d)
 * certificate. `auto_select` routes forests to the recursive engine and
 * everything else through Hochster.
 */
inline PdResult projective_dimension(const Graph& g, FieldSpec field,
                                     Engine method = Engine::auto_select,
                                     int ceiling = kDefaultCeiling) {
    Engine m = method;
    if (m == Engine::auto_select) m = is_forest(g) ? Engine::forest : Engine::hochster;
    BettiTable t;
    switch (m) {
    case Engine::hochster: t = betti_hochster(g, field, ceiling); break;
    case Engine::dual_links: t = betti_dual_links(g, field, ceiling); break;
    case Engine::koszul: t = to_quotient_convention(betti_koszul(g, field, ceiling)); break;
    case Engine::forest: t = betti_forest(g); break;
    case Engine::auto_select: t = betti_hochster(g, field, ceiling); break;
    }
    return t.pd_result();
}

} // namespace edgeideals
