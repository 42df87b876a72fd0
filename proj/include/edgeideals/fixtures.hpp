#pragma once

#include <utility>
#include <vector>

#include "edgeideals/complex.hpp"
#include "edgeideals/graph.hpp"

namespace edgeideals {

/**
 * The 6-vertex triangulation of the real projective plane (the antipodal
 * quotient of the icosahedron): 6 vertices, 15 edges, 10 triangles. Its
 * first reduced homology is k in characteristic 2 and zero otherwise,
 * which makes it the standard seed for characteristic-dependent examples.
 */
inline SimplicialComplex rp2_triangulation() {
    auto tri = [](int a, int b, int c) { return bit(a) | bit(b) | bit(c); };
    std::vector<VertexSet> facets = {
        tri(3, 4, 5), tri(1, 3, 5), tri(0, 1, 5), tri(0, 2, 5), tri(2, 4, 5),
        tri(1, 2, 4), tri(0, 1, 4), tri(0, 3, 4), tri(0, 2, 3), tri(1, 2, 3),
    };
    return SimplicialComplex::from_facets(6, std::move(facets));
}

/**
 * All nonempty faces of a complex, ordered by dimension and then
 * lexicographically; this fixes the vertex numbering of the
 * incomparability graph below.
 */
inline std::vector<VertexSet> nonempty_faces_sorted(const SimplicialComplex& d) {
    std::vector<VertexSet> faces;
    for (int i = 0; i <= d.dimension(); ++i)
        for (VertexSet f : d.faces_of_dim(i)) faces.push_back(f);
    return faces;
}

/**
 * The graph whose vertices are the nonempty faces of the complex and whose
 * edges join incomparable pairs (f not contained in g, g not contained
 * in f). Its independence complex is the order complex of the face poset,
 * i.e. the barycentric subdivision. For the projective-plane fixture this
 * graph has 31 vertices.
 */
inline Graph incomparability_graph(const SimplicialComplex& d) {
    std::vector<VertexSet> faces = nonempty_faces_sorted(d);
    const int n = static_cast<int>(faces.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool i_in_j = (faces[i] & ~faces[j]) == 0;
            const bool j_in_i = (faces[j] & ~faces[i]) == 0;
            if (!i_in_j && !j_in_i) edges.emplace_back(i, j);
        }
    return make_graph(n, std::move(edges));
}

inline Graph rp2_barycentric_graph() { return incomparability_graph(rp2_triangulation()); }

} // namespace edgeideals
