#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edgeideals/graph.hpp"

using namespace edgeideals;

namespace {

Graph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) e.emplace_back(u, v);
    return make_graph(n, std::move(e));
}

// independent reference: count induced i-matchings by enumerating i-sets
// of edges instead of 2i-sets of vertices
long long matchings_by_edge_sets(const Graph& g, int i) {
    const int m = g.edge_count();
    long long count = 0;
    std::vector<int> idx(static_cast<std::size_t>(i));
    auto rec = [&](auto&& self, int pos, int from, VertexSet used) -> void {
        if (pos == i) {
            Graph h = induced_subgraph(g, used);
            if (h.edge_count() == i) ++count; // i disjoint edges, nothing extra
            return;
        }
        for (int e = from; e < m; ++e) {
            VertexSet ends = bit(g.edges[e].first) | bit(g.edges[e].second);
            if (ends & used) continue;
            idx[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, e + 1, used | ends);
        }
    };
    rec(rec, 0, 0, 0);
    return count;
}

} // namespace

TEST_CASE("make_graph normalizes and validates") {
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    REQUIRE(c4.n == 4);
    REQUIRE(c4.edge_count() == 4);
    REQUIRE(c4 == cycle_graph(4));

    Graph lonely = make_graph(1, {});
    REQUIRE(lonely.n == 1);
    REQUIRE(lonely.edge_count() == 0);

    Graph dedup = make_graph(3, {{0, 1}, {0, 1}, {1, 0}});
    REQUIRE(dedup.edge_count() == 1);

    REQUIRE_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(-1, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(65, {}), std::invalid_argument);
}

TEST_CASE("family constructors") {
    REQUIRE(complete_graph(3).edge_count() == 3);
    REQUIRE(star_graph(4).n == 5);
    REQUIRE(star_graph(4).edge_count() == 4);
    for (int v = 1; v <= 4; ++v) REQUIRE(star_graph(4).has_edge(0, v));
    REQUIRE(cycle_graph(5).n == 5);
    REQUIRE(cycle_graph(5).edge_count() == 5);
    REQUIRE(complete_bipartite_graph(2, 3).edge_count() == 6);
    REQUIRE(complete_multipartite_graph({1, 1, 1}) == complete_graph(3));
    REQUIRE(line_graph(2).edge_count() == 1);

    REQUIRE_THROWS_AS(complete_graph(1), std::invalid_argument);
    REQUIRE_THROWS_AS(cycle_graph(2), std::invalid_argument);
    REQUIRE_THROWS_AS(line_graph(1), std::invalid_argument);
    REQUIRE_THROWS_AS(star_graph(0), std::invalid_argument);
    REQUIRE_THROWS_AS(complete_bipartite_graph(0, 2), std::invalid_argument);
}

TEST_CASE("complement") {
    Graph k4c = complement(complete_graph(4));
    REQUIRE(k4c.edge_count() == 0);
    REQUIRE(k4c.n == 4);

    // path 1-2, 1-3, 3-4 on four vertices (0-indexed 0-1, 0-2, 2-3)
    Graph g = make_graph(4, {{0, 1}, {0, 2}, {2, 3}});
    Graph gc = complement(g);
    Graph expected = make_graph(4, {{0, 3}, {1, 2}, {1, 3}});
    REQUIRE(gc == expected);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        Graph r = random_graph(rng, 1 + static_cast<int>(rng() % 9));
        REQUIRE(complement(complement(r)) == r);
    }
}

TEST_CASE("induced subgraphs") {
    Graph g = make_graph(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph h = induced_subgraph(g, bit(0) | bit(1) | bit(3));
    REQUIRE(h.n == 3);
    REQUIRE(h.edge_count() == 3); // all three edges survive among {0,1,3}

    REQUIRE(induced_subgraph(g, g.vertex_set()) == g);
    REQUIRE(induced_subgraph(g, 0).n == 0);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Graph r = random_graph(rng, 2 + static_cast<int>(rng() % 7));
        VertexSet w = rng() & r.vertex_set();
        VertexSet w2 = rng() & w;
        // restricting twice equals restricting to the smaller set, after
        // tracking the index compression
        std::vector<int> verts = vertices_of(w);
        VertexSet w2_packed = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (w2 & bit(verts[i])) w2_packed |= bit(static_cast<int>(i));
        REQUIRE(induced_subgraph(induced_subgraph(r, w), w2_packed) ==
                induced_subgraph(r, w2));
    }
}

TEST_CASE("connected components and forests") {
    auto comps = connected_components(complement(complete_bipartite_graph(2, 3)));
    REQUIRE(comps.size() == 2);
    REQUIRE(popcount(comps[0]) == 2);
    REQUIRE(popcount(comps[1]) == 3);

    REQUIRE(connected_components(cycle_graph(6)).size() == 1);
    REQUIRE(connected_components(make_graph(3, {})).size() == 3);

    REQUIRE(is_forest(line_graph(5)));
    REQUIRE_FALSE(is_forest(cycle_graph(4)));
    REQUIRE(is_forest(disjoint_union(star_graph(3), star_graph(2))));

    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        Graph r = random_graph(rng, 1 + static_cast<int>(rng() % 8));
        bool expect =
            r.edge_count() == r.n - static_cast<int>(connected_components(r).size());
        REQUIRE(is_forest(r) == expect);
    }
}

TEST_CASE("induced matching counts") {
    REQUIRE(count_induced_matchings(cycle_graph(6), 2) == 3);
    REQUIRE(count_induced_matchings(complete_graph(4), 2) == 0);
    REQUIRE(count_induced_matchings(line_graph(5), 2) == 1);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        Graph r = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        REQUIRE(count_induced_matchings(r, 1) == r.edge_count());
        for (int i = 1; 2 * i <= r.n; ++i)
            REQUIRE(count_induced_matchings(r, i) == matchings_by_edge_sets(r, i));
    }
}

TEST_CASE("forest pivots") {
    ForestPivot edge = find_forest_pivot(make_graph(2, {{0, 1}}));
    REQUIRE(edge.v == 0);
    REQUIRE(edge.degree() == 1);
    REQUIRE(edge.last == 1);
    REQUIRE(edge.leaves.empty());

    ForestPivot mid = find_forest_pivot(line_graph(3));
    REQUIRE(mid.v == 1);
    REQUIRE(mid.leaves == std::vector<int>{0});
    REQUIRE(mid.last == 2);

    ForestPivot star = find_forest_pivot(star_graph(3));
    REQUIRE(star.v == 0);
    REQUIRE(star.degree() == 3);
    REQUIRE(star.leaves == std::vector<int>{1, 2});
    REQUIRE(star.last == 3);

    REQUIRE_THROWS_AS(find_forest_pivot(cycle_graph(4)), std::invalid_argument);
    REQUIRE_THROWS_AS(find_forest_pivot(make_graph(3, {})), std::invalid_argument);

    // pivots exist for every forest with an edge
    std::mt19937_64 rng(19);
    for (int t = 0; t < 40; ++t) {
        std::vector<std::pair<int, int>> e;
        int n = 2 + static_cast<int>(rng() % 9);
        for (int v = 1; v < n; ++v)
            if (rng() % 4) e.emplace_back(static_cast<int>(rng() % v), v);
        Graph f = make_graph(n, std::move(e));
        if (f.edge_count() == 0) continue;
        ForestPivot p = find_forest_pivot(f);
        for (int leaf : p.leaves) REQUIRE(f.degree(leaf) == 1);
        if (p.degree() == 1) REQUIRE(f.degree(p.last) == 1);
    }
}
