#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edgeideals/families.hpp"
#include "edgeideals/forest.hpp"

using namespace edgeideals;

using GradedMap = std::map<std::pair<int, int>, long long>;

namespace {

Graph random_forest(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        if (rng() % 5 != 0) e.emplace_back(static_cast<int>(rng() % v), v);
    return make_graph(n, std::move(e));
}

/// Double star: centres a, b adjacent; a carries r leaves, b carries s.
Graph double_star(int r, int s) {
    std::vector<std::pair<int, int>> e = {{0, 1}};
    int next = 2;
    for (int k = 0; k < r; ++k) e.emplace_back(0, next++);
    for (int k = 0; k < s; ++k) e.emplace_back(1, next++);
    return make_graph(next, std::move(e));
}

/// Double star with the central edge subdivided by a new vertex.
Graph subdivided_double_star(int r, int s) {
    std::vector<std::pair<int, int>> e = {{0, 2}, {1, 2}};
    int next = 3;
    for (int k = 0; k < r; ++k) e.emplace_back(0, next++);
    for (int k = 0; k < s; ++k) e.emplace_back(1, next++);
    return make_graph(next, std::move(e));
}

} // namespace

TEST_CASE("forest recursion base cases") {
    REQUIRE(betti_forest(make_graph(0, {})).graded == GradedMap{{{0, 0}, 1}});
    REQUIRE(betti_forest(make_graph(3, {})).graded == GradedMap{{{0, 0}, 1}});
    REQUIRE(betti_forest(make_graph(2, {{0, 1}})).graded ==
            GradedMap{{{0, 0}, 1}, {{1, 2}, 1}});
    REQUIRE_THROWS_AS(betti_forest(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("small forest tables") {
    REQUIRE(betti_forest(line_graph(3)).graded ==
            GradedMap{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
    REQUIRE(betti_forest(star_graph(3)).graded == betti_star(3).graded);
    // line tables come out of the recursion as well
    for (int n = 2; n <= 9; ++n)
        REQUIRE(betti_forest(line_graph(n)).graded == betti_line(n).graded);
    for (int n = 1; n <= 6; ++n)
        REQUIRE(betti_forest(star_graph(n)).graded == betti_star(n).graded);
}

TEST_CASE("forest recursion agrees with Hochster") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 25; ++t) {
        Graph f = random_forest(rng, 2 + static_cast<int>(rng() % 8));
        BettiTable ft = betti_forest(f);
        REQUIRE(ft.graded == betti_hochster(f, rationals()).graded);
        REQUIRE(ft.graded == betti_hochster(f, prime_field(2)).graded);
    }
}

TEST_CASE("randomized pivots give the same table") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 15; ++t) {
        Graph f = random_forest(rng, 3 + static_cast<int>(rng() % 7));
        BettiTable reference = betti_forest(f);
        for (std::uint64_t s = 1; s <= 4; ++s)
            REQUIRE(betti_forest_randomized(f, s).graded == reference.graded);
    }
}

TEST_CASE("pd of forests") {
    REQUIRE(pd_forest(line_graph(3)) == 2);
    REQUIRE(pd_forest(make_graph(2, {{0, 1}})) == 1);
    REQUIRE(pd_forest(make_graph(5, {})) == 0);

    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) {
            REQUIRE(pd_forest(double_star(r, s)) == std::max(s + 1, r + 1));
            REQUIRE(pd_forest(subdivided_double_star(r, s)) == s + r + 1);
        }

    std::mt19937_64 rng(89);
    for (int t = 0; t < 25; ++t) {
        Graph f = random_forest(rng, 1 + static_cast<int>(rng() % 10));
        REQUIRE(pd_forest(f) == betti_forest(f).pd());
    }
}

TEST_CASE("pd of forests adds over components") {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 20; ++t) {
        Graph a = random_forest(rng, 1 + static_cast<int>(rng() % 6));
        Graph b = random_forest(rng, 1 + static_cast<int>(rng() % 6));
        REQUIRE(pd_forest(disjoint_union(a, b)) == pd_forest(a) + pd_forest(b));
    }
}

TEST_CASE("auto method dispatch matches") {
    Graph t = double_star(2, 3);
    REQUIRE(projective_dimension(t, rationals(), Engine::auto_select).value ==
            projective_dimension(t, rationals(), Engine::hochster).value);
}
