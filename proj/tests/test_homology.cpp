#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edgeideals/fixtures.hpp"
#include "edgeideals/homology.hpp"

using namespace edgeideals;

namespace {

SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
    std::vector<VertexSet> facets;
    int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(m + 1));
    for (int k = 0; k < count; ++k) facets.push_back(rng() & full_set(m));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

ExactMatrix matrix_product(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix p(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < b.cols; ++c) {
            long long s = 0;
            for (int k = 0; k < a.cols; ++k) s += a.at(r, k) * b.at(k, c);
            p.at(r, c) = s;
        }
    return p;
}

} // namespace

TEST_CASE("boundary matrices") {
    SimplicialComplex two_points = SimplicialComplex::from_facets(2, {bit(0), bit(1)});
    ExactMatrix aug = boundary_matrix(two_points, 0, rationals());
    REQUIRE(aug.rows == 1);
    REQUIRE(aug.cols == 2);
    REQUIRE(aug.at(0, 0) == 1);
    REQUIRE(aug.at(0, 1) == 1);

    SimplicialComplex hollow =
        SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});
    ExactMatrix d1 = boundary_matrix(hollow, 1, rationals());
    REQUIRE(d1.rows == 3);
    REQUIRE(d1.cols == 3);
    for (int c = 0; c < 3; ++c) {
        long long sum = 0;
        for (int r = 0; r < 3; ++r) sum += d1.at(r, c);
        REQUIRE(sum == 0); // signs cancel down each column
    }

    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        SimplicialComplex d = random_complex(rng, 2 + static_cast<int>(rng() % 5));
        for (int i = 0; i <= d.dimension(); ++i) {
            ExactMatrix lo = boundary_matrix(d, i, rationals());
            ExactMatrix hi = boundary_matrix(d, i + 1, rationals());
            if (hi.cols == 0) continue;
            ExactMatrix prod = matrix_product(lo, hi);
            for (long long v : prod.a) REQUIRE(v == 0);
        }
    }
}

TEST_CASE("exact rank") {
    ExactMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    REQUIRE(rank(id, rationals()) == 3);

    ExactMatrix ones(2, 2);
    ones.a = {1, 1, 1, 1};
    REQUIRE(rank(ones, prime_field(2)) == 1);
    REQUIRE(rank(ones, rationals()) == 1);

    ExactMatrix zero(4, 5);
    REQUIRE(rank(zero, rationals()) == 0);
    REQUIRE(rank(zero, prime_field(3)) == 0);

    // rank depends on the characteristic: 2x2 with determinant 2
    ExactMatrix det2(2, 2);
    det2.a = {1, 1, -1, 1};
    REQUIRE(rank(det2, rationals()) == 2);
    REQUIRE(rank(det2, prime_field(2)) == 1);
    REQUIRE(rank(det2, prime_field(2147483647)) == 2);
}

TEST_CASE("rank survives 64-bit overflow") {
    // sum of two outer products of huge vectors: rank 2, but the
    // elimination's intermediate minors overflow 64-bit arithmetic and
    // must take the arbitrary-precision path
    const long long big = 1ll << 30;
    std::mt19937_64 rng(131);
    auto huge = [&] { return big + static_cast<long long>(rng() % 1000); };
    std::vector<long long> u1(6), v1(6), u2(6), v2(6);
    for (int i = 0; i < 6; ++i) {
        u1[static_cast<std::size_t>(i)] = huge();
        v1[static_cast<std::size_t>(i)] = huge();
        u2[static_cast<std::size_t>(i)] = huge();
        v2[static_cast<std::size_t>(i)] = huge();
    }
    ExactMatrix m(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c)
            m.at(r, c) = u1[static_cast<std::size_t>(r)] * v1[static_cast<std::size_t>(c)] +
                         u2[static_cast<std::size_t>(r)] * v2[static_cast<std::size_t>(c)];
    REQUIRE(rank(m, rationals()) == 2);
}

TEST_CASE("reduced homology basics") {
    REQUIRE(reduced_homology(SimplicialComplex::irrelevant(3), rationals()).dims ==
            std::map<int, long long>{{-1, 1}});
    REQUIRE(reduced_homology(SimplicialComplex::void_complex(3), rationals()).all_zero());

    SimplicialComplex two_points = SimplicialComplex::from_facets(2, {bit(0), bit(1)});
    REQUIRE(reduced_homology(two_points, rationals()).dims ==
            std::map<int, long long>{{0, 1}});

    REQUIRE(reduced_homology(SimplicialComplex::simplex(5), prime_field(2)).all_zero());

    SimplicialComplex hollow =
        SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});
    REQUIRE(reduced_homology(hollow, rationals()).dims ==
            std::map<int, long long>{{1, 1}});
}

TEST_CASE("projective plane homology depends on the characteristic") {
    SimplicialComplex rp2 = rp2_triangulation();
    REQUIRE(rp2.faces_of_dim(0).size() == 6);
    REQUIRE(rp2.faces_of_dim(1).size() == 15);
    REQUIRE(rp2.faces_of_dim(2).size() == 10);

    HomologyProfile f2 = reduced_homology(rp2, prime_field(2));
    REQUIRE(f2.dim(1) == 1);
    REQUIRE(f2.dim(2) == 1);
    REQUIRE(f2.dim(0) == 0);

    REQUIRE(reduced_homology(rp2, rationals()).all_zero());
    REQUIRE(reduced_homology(rp2, prime_field(3)).all_zero());
}

TEST_CASE("euler characteristic and cones") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        SimplicialComplex d = random_complex(rng, 2 + static_cast<int>(rng() % 6));
        for (FieldSpec f : {rationals(), prime_field(2), prime_field(3)}) {
            HomologyProfile h = reduced_homology(d, f);
            long long lhs = 0, rhs = 0;
            for (int i = -1; i <= d.dimension(); ++i) {
                const long long sign = ((i + 2) % 2 == 0) ? 1 : -1;
                lhs += sign * static_cast<long long>(d.faces_of_dim(i).size());
                rhs += sign * h.dim(i);
            }
            REQUIRE(lhs == rhs);
            if (is_cone(d)) REQUIRE(h.all_zero());
        }
    }
}

TEST_CASE("connected components show up in H0") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) e.emplace_back(u, v);
        Graph g = make_graph(n, std::move(e));
        // faces of this complex are the cliques of g, so its 1-skeleton is
        // g itself and its component count matches g's
        SimplicialComplex d = independence_complex(complement(g));
        HomologyProfile h = reduced_homology(d, rationals());
        long long comps = static_cast<long long>(connected_components(g).size());
        REQUIRE(h.dim(0) == comps - 1);
    }
}

TEST_CASE("alexander duality for homology") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 50; ++t) {
        int m = 2 + static_cast<int>(rng() % 6);
        SimplicialComplex d = random_complex(rng, m);
        SimplicialComplex dd = alexander_dual(d);
        for (FieldSpec f : {rationals(), prime_field(2)}) {
            HomologyProfile hd = reduced_homology(d, f);
            HomologyProfile hdd = reduced_homology(dd, f);
            for (int i = -1; i <= m; ++i) REQUIRE(hd.dim(i) == hdd.dim(m - i - 3));
        }
    }
}

TEST_CASE("single-dimension homology agrees with the full profile") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 30; ++t) {
        SimplicialComplex d = random_complex(rng, 2 + static_cast<int>(rng() % 5));
        HomologyProfile h = reduced_homology(d, prime_field(2));
        for (int j = -1; j <= d.dimension(); ++j)
            REQUIRE(reduced_homology_single(d, j, prime_field(2)) == h.dim(j));
    }
}
