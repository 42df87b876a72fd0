#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "edgeideals/complex.hpp"
#include "edgeideals/graph.hpp"
#include "edgeideals/homology.hpp"

namespace edgeideals {

/// Thrown when a full-table engine is asked to enumerate past its ceiling.
class CeilingExceeded : public std::runtime_error {
public:
    CeilingExceeded(int n, int limit)
        : std::runtime_error("graph has " + std::to_string(n) +
                             " vertices; full-table enumeration is capped at " +
                             std::to_string(limit)),
          n_(n),
          limit_(limit) {}
    int vertex_count() const { return n_; }
    int limit() const { return limit_; }

private:
    int n_, limit_;
};

inline constexpr int kDefaultCeiling = 22;

/// Which module a table's indices refer to: k[D(G)] or the ideal I(G).
enum class Convention { quotient, ideal };

struct PdResult {
    int value = 0;
    int cert_i = 0;
    int cert_d = 0;
};

/**
 * Graded (and optionally multigraded) Betti numbers. Only nonzero entries
 * are stored; `graded` maps (i, d) to the count, `multigraded` maps
 * (i, squarefree degree mask) when an engine fills it.
 */
struct BettiTable {
    Convention convention = Convention::quotient;
    int n = 0;
    std::map<std::pair<int, int>, long long> graded;
    std::map<std::pair<int, VertexSet>, long long> multigraded;
    bool has_multigraded = false;

    void add(int i, int d, long long v) {
        if (v == 0) return;
        graded[{i, d}] = checked_add(graded[{i, d}], v);
    }

    void add_multi(int i, VertexSet b, long long v) {
        if (v == 0) return;
        has_multigraded = true;
        multigraded[{i, b}] = checked_add(multigraded[{i, b}], v);
    }

    long long at(int i, int d) const {
        auto it = graded.find({i, d});
        return it == graded.end() ? 0 : it->second;
    }

    long long total(int i) const {
        long long t = 0;
        for (const auto& [key, v] : graded)
            if (key.first == i) t = checked_add(t, v);
        return t;
    }

    /// Largest i with a nonzero entry, with the witnessing (i, d);
    /// ties in i resolve to the smallest degree.
    PdResult pd_result() const {
        PdResult r;
        bool found = false;
        for (const auto& [key, v] : graded) {
            (void)v;
            if (!found || key.first > r.value) {
                r.value = key.first;
                r.cert_i = key.first;
                r.cert_d = key.second;
                found = true;
            }
        }
        return r;
    }

    int pd() const { return pd_result().value; }

    bool operator==(const BettiTable& o) const {
        return n == o.n && convention == o.convention && graded == o.graded &&
               has_multigraded == o.has_multigraded &&
               (!has_multigraded || multigraded == o.multigraded);
    }
};

/// Shift an ideal-convention table to the quotient convention.
inline BettiTable to_quotient_convention(const BettiTable& t) {
    if (t.convention == Convention::quotient) return t;
    BettiTable q;
    q.convention = Convention::quotient;
    q.n = t.n;
    q.add(0, 0, 1);
    for (const auto& [key, v] : t.graded) q.add(key.first + 1, key.second, v);
    if (t.has_multigraded) {
        q.add_multi(0, 0, 1);
        for (const auto& [key, v] : t.multigraded) q.add_multi(key.first + 1, key.second, v);
    }
    return q;
}

namespace detail {

/**
 * Deterministic parallel map over the 2^n subset range: the range is cut
 * into contiguous chunks, each worker accumulates into its own table, and
 * the chunk tables are merged in index order. Aggregation is commutative
 * addition, so the result is independent of scheduling.
 */
template <typename Fn>
inline BettiTable subset_parallel_map(int n, Convention conv, Fn per_subset) {
    if (n > 30) throw CeilingExceeded(n, 30); // 2^n loop; hard cap regardless of override
    const VertexSet count = VertexSet{1} << n;
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (n < 12) workers = 1;
    if (workers > 16) workers = 16;

    std::vector<BettiTable> parts(workers);
    for (auto& p : parts) {
        p.convention = conv;
        p.n = n;
    }
    auto run = [&](unsigned w) {
        VertexSet lo = count / workers * w;
        VertexSet hi = (w + 1 == workers) ? count : count / workers * (w + 1);
        for (VertexSet s = lo; s < hi; ++s) per_subset(s, parts[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    BettiTable out = std::move(parts[0]);
    for (unsigned w = 1; w < workers; ++w) {
        for (const auto& [key, v] : parts[w].graded) out.add(key.first, key.second, v);
        for (const auto& [key, v] : parts[w].multigraded)
            out.add_multi(key.first, key.second, v);
    }
    return out;
}

} // namespace detail

/**
 * Full table of k[D(G)] via Hochster's formula: for every squarefree
 * degree W the multigraded entry at homological index i is
 * dim H~_(|W|-i-1) of the independence complex restricted to W.
 * Populates both gradings.
 */
inline BettiTable betti_hochster(const Graph& g, FieldSpec field, int ceiling = kDefaultCeiling) {
    if (g.n > ceiling) throw CeilingExceeded(g.n, ceiling);
    BettiTable t = detail::subset_parallel_map(
        g.n, Convention::quotient, [&](VertexSet w, BettiTable& local) {
            const int card = popcount(w);
            FaceChain chain = independence_face_chain(induced_subgraph(g, w));
            HomologyProfile h = reduced_homology(chain, field);
            for (const auto& [j, dimv] : h.dims) {
                const int i = card - j - 1;
                local.add(i, card, dimv);
                local.add_multi(i, w, dimv);
            }
        });
    t.has_multigraded = true;
    return t;
}

/**
 * A single entry beta_{i,W} of k[D(G)] in the quotient convention,
 * evaluated without the subset loop; usable far beyond the full-table
 * ceiling since only one restriction is examined.
 */
inline long long betti_hochster_entry(const Graph& g, int i, VertexSet w, FieldSpec field) {
    if (w & ~g.vertex_set()) throw std::invalid_argument("degree mask out of range");
    const int card = popcount(w);
    const int j = card - i - 1;
    if (j < -1 || j > card - 1) return 0;
    FaceChain chain = independence_face_chain(induced_subgraph(g, w), j + 2);
    return reduced_homology_single(chain, j, field);
}

/**
 * Graded table (i >= 1) as a sum of epsilon-complex homologies over
 * induced subgraphs with at least one edge; subgraphs with an isolated
 * vertex contribute nothing and are skipped. beta_0 = 1 is appended,
 * since the underlying identity addresses i >= 1 only.
 */
inline BettiTable betti_dual_links(const Graph& g, FieldSpec field,
                                   int ceiling = kDefaultCeiling) {
    if (g.n > ceiling) throw CeilingExceeded(g.n, ceiling);
    BettiTable t = detail::subset_parallel_map(
        g.n, Convention::quotient, [&](VertexSet w, BettiTable& local) {
            Graph h = induced_subgraph(g, w);
            if (h.edge_count() == 0) return;
            for (int v = 0; v < h.n; ++v)
                if (h.degree(v) == 0) return; // cone: zero homology
            HomologyProfile prof = reduced_homology(epsilon_of_subgraph(h), field);
            for (const auto& [j, dimv] : prof.dims) local.add(j + 2, popcount(w), dimv);
        });
    t.add(0, 0, 1);
    return t;
}

/**
 * Table of the ideal I(G) via upper Koszul complexes: the multigraded
 * entry at (i, b) is dim H~_(i-1) of K_b(I(G)). Only squarefree degrees
 * contribute, so the loop runs over subset masks. The result is in the
 * ideal convention; shift with to_quotient_convention for comparisons.
 */
inline BettiTable betti_koszul(const Graph& g, FieldSpec field, int ceiling = kDefaultCeiling) {
    if (g.n > ceiling) throw CeilingExceeded(g.n, ceiling);
    BettiTable t = detail::subset_parallel_map(
        g.n, Convention::ideal, [&](VertexSet b, BettiTable& local) {
            if (!g.has_edge_within(b)) return; // K_b is VOID
            // faces F of K_b: subsets of b with an edge inside b \ F
            FaceChain chain;
            chain.level.assign(static_cast<std::size_t>(popcount(b)) + 1, {});
            VertexSet f = 0;
            while (true) {
                if (g.has_edge_within(b & ~f))
                    chain.level[static_cast<std::size_t>(popcount(f))].push_back(f);
                if (f == b) break;
                f = (f - b) & b; // next submask of b in increasing order
            }
            while (!chain.level.empty() && chain.level.back().empty()) chain.level.pop_back();
            for (auto& lvl : chain.level) std::sort(lvl.begin(), lvl.end(), face_lex_less);
            HomologyProfile h = reduced_homology(chain, field);
            for (const auto& [j, dimv] : h.dims) {
                local.add(j + 1, popcount(b), dimv);
                local.add_multi(j + 1, b, dimv);
            }
        });
    t.has_multigraded = true;
    return t;
}

enum class Engine { auto_select, hochster, dual_links, koszul, forest };

/// |V(G)| - 1 when the complement is disconnected, otherwise absent.
inline std::optional<int> pd_by_disconnected_complement(const Graph& g) {
    Graph gc = complement(g);
    if (g.n >= 1 && !is_connected(gc)) return g.n - 1;
    return std::nullopt;
}

/**
 * True when every graded entry of the induced subgraph's table is at most
 * the matching entry for the ambient graph (both via Hochster).
 */
inline bool monotonicity_check(const Graph& g, VertexSet w, FieldSpec field,
                               int ceiling = kDefaultCeiling) {
    BettiTable big = betti_hochster(g, field, ceiling);
    BettiTable small = betti_hochster(induced_subgraph(g, w), field, ceiling);
    for (const auto& [key, v] : small.graded)
        if (v > big.at(key.first, key.second)) return false;
    return true;
}

} // namespace edgeideals
