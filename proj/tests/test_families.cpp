#include <catch2/catch_amalgamated.hpp>

#include "edgeideals/betti.hpp"
#include "edgeideals/families.hpp"

using namespace edgeideals;

using GradedMap = std::map<std::pair<int, int>, long long>;

TEST_CASE("complete graphs") {
    BettiTable k3 = betti_complete(3);
    REQUIRE(k3.at(1, 2) == 3);
    REQUIRE(k3.at(2, 3) == 2);

    BettiTable k4 = betti_complete(4);
    REQUIRE(k4.at(3, 4) == 3);
    REQUIRE(k4.total(4) == 0);

    REQUIRE(betti_complete(2).graded == GradedMap{{{0, 0}, 1}, {{1, 2}, 1}});
    REQUIRE_THROWS_AS(betti_complete(1), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs") {
    REQUIRE(betti_complete_bipartite(1, 1).graded == GradedMap{{{0, 0}, 1}, {{1, 2}, 1}});
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            REQUIRE(betti_complete_bipartite(n, m).at(n + m - 1, n + m) == 1);
    REQUIRE(betti_complete_bipartite(2, 3).at(1, 2) == 6);
    REQUIRE(betti_complete_bipartite(2, 3).graded ==
            betti_hochster(complete_bipartite_graph(2, 3), rationals()).graded);
}

TEST_CASE("complete multipartite graphs") {
    // two parts reduce to the bipartite formula
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m)
            REQUIRE(betti_complete_multipartite({n, m}).graded ==
                    betti_complete_bipartite(n, m).graded);
    // all-ones parts reduce to the complete graph
    for (int t = 2; t <= 6; ++t)
        REQUIRE(betti_complete_multipartite(std::vector<int>(t, 1)).graded ==
                betti_complete(t).graded);
    REQUIRE(betti_complete_multipartite({2, 2, 3}).graded ==
            betti_hochster(complete_multipartite_graph({2, 2, 3}), rationals()).graded);
    REQUIRE_THROWS_AS(betti_complete_multipartite({3}), std::invalid_argument);
}

TEST_CASE("star graphs") {
    BettiTable s3 = betti_star(3);
    REQUIRE(s3.graded ==
            GradedMap{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 3}, {{3, 4}, 1}});
    REQUIRE(s3.graded == betti_hochster(star_graph(3), rationals()).graded);
    REQUIRE(betti_star(1).at(1, 2) == 1);
    REQUIRE(betti_star(4).pd() == 4);
    REQUIRE(pd_star(4) == 4);
}

TEST_CASE("run counting") {
    REQUIRE(run_count_interior(8, 2, 2) == 3);
    REQUIRE(run_count_cycle(6, 2, 2) == 3);
    for (int n = 1; n <= 9; ++n)
        for (int l = 1; l <= 3; ++l) REQUIRE(run_count_cycle(n, l, 0) == 1);

    // brute-force oracle: place m runs of length l around the cycle
    auto count_runs_direct = [](int n, int l, int m) {
        long long found = 0;
        for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
            if (popcount(s) != l * m) continue;
            // runs = maximal circular blocks; all must have length l
            int blocks = 0;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                bool in = s & bit(v);
                bool prev = s & bit((v + n - 1) % n);
                if (in && !prev) {
                    int len = 0;
                    for (int w = v; s & bit(w % n); ++w) ++len;
                    if (len != l) ok = false;
                    ++blocks;
                }
            }
            if (ok && popcount(s) == n) ok = false; // whole cycle is not a run
            if (ok && blocks == m) ++found;
        }
        return found;
    };
    for (int n = 4; n <= 9; ++n)
        for (int l = 1; l <= 3; ++l)
            for (int m = 1; l * m < n; ++m)
                REQUIRE(run_count_cycle(n, l, m) == count_runs_direct(n, l, m));
}

TEST_CASE("cycle tables") {
    REQUIRE(betti_cycle(4).graded ==
            GradedMap{{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}});
    REQUIRE(betti_cycle(5).graded ==
            GradedMap{{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}});
    REQUIRE(betti_cycle(6).at(4, 6) == 2);

    // the two closed forms of the band agree: (n-2i) * [C(n-2i,i) + 2C(n-2i-1,i-1)]
    // equals n * C(n-2i,i) whenever n > 2i
    for (int n = 3; n <= 14; ++n)
        for (int i = 0; 2 * i < n; ++i) {
            long long lhs = (n - 2 * i) * run_count_cycle(n, 2, i);
            long long rhs = static_cast<long long>(n) * binomial(n - 2 * i, i);
            REQUIRE(lhs == rhs);
        }

    // beta_{i,2i} is the run count, which also matches the matching count
    for (int n = 3; n <= 10; ++n)
        for (int i = 1; 2 * i <= n; ++i) {
            REQUIRE(betti_cycle(n).at(i, 2 * i) == run_count_cycle(n, 2, i));
            REQUIRE(betti_cycle(n).at(i, 2 * i) ==
                    count_induced_matchings(cycle_graph(n), i));
        }
}

TEST_CASE("line tables") {
    REQUIRE(betti_line(2).graded == GradedMap{{{0, 0}, 1}, {{1, 2}, 1}});
    REQUIRE(betti_line(3).graded == GradedMap{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
    BettiTable l4 = betti_line(4);
    REQUIRE(l4.at(1, 2) == 3);
    REQUIRE(l4.at(2, 3) == 2);
    REQUIRE(l4.at(2, 4) == 0);

    // beta_{i,2i}(L_n) = C(n-2i+1, i), the induced i-matchings of the path
    for (int n = 2; n <= 10; ++n)
        for (int i = 1; 2 * i <= n; ++i) {
            REQUIRE(betti_line(n).at(i, 2 * i) == binomial(n - 2 * i + 1, i));
            REQUIRE(betti_line(n).at(i, 2 * i) == count_induced_matchings(line_graph(n), i));
        }
}

TEST_CASE("closed-form projective dimensions") {
    REQUIRE(pd_cycle(6) == 4);
    REQUIRE(pd_cycle(7) == 5);
    REQUIRE(pd_line(7) == 4);
    REQUIRE(pd_line(6) == 4);
    REQUIRE(pd_complete(4) == 3);
    REQUIRE(pd_complete_bipartite(3, 4) == 6);
    REQUIRE(pd_complete_multipartite({2, 2, 3}) == 6);

    for (int n = 3; n <= 12; ++n) REQUIRE(pd_cycle(n) == betti_cycle(n).pd());
    for (int n = 2; n <= 12; ++n) REQUIRE(pd_line(n) == betti_line(n).pd());
    for (int n = 2; n <= 8; ++n) REQUIRE(pd_complete(n) == betti_complete(n).pd());
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            REQUIRE(pd_complete_bipartite(n, m) == betti_complete_bipartite(n, m).pd());
    for (int n = 1; n <= 6; ++n) REQUIRE(pd_star(n) == betti_star(n).pd());
}
