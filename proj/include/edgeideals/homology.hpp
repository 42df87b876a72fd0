#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "edgeideals/complex.hpp"
#include "edgeideals/matrix.hpp"

namespace edgeideals {

/// Map i -> dim H~_i; absent indices are zero.
struct HomologyProfile {
    std::map<int, long long> dims;

    long long dim(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }

    bool all_zero() const { return dims.empty(); }

    bool operator==(const HomologyProfile&) const = default;
};

/**
 * Faces of a complex grouped by dimension: level[k] holds the
 * (k-1)-dimensional faces in lexicographic order, so level[0] is {{}}
 * for every nonvoid complex. A VOID complex has no levels at all.
 */
struct FaceChain {
    std::vector<std::vector<VertexSet>> level;

    int top() const { return static_cast<int>(level.size()) - 1; }
    long long count(int k) const {
        return k >= 0 && k <= top() ? static_cast<long long>(level[k].size()) : 0;
    }
};

inline FaceChain face_chain(const SimplicialComplex& d) {
    FaceChain c;
    if (d.is_void()) return c;
    for (int i = -1; i <= d.dimension(); ++i) c.level.push_back(d.faces_of_dim(i));
    return c;
}

/**
 * Face chain of the independence complex of g, enumerated directly
 * (every independent set, in lexicographic order per dimension),
 * optionally truncated above `max_card` vertices per face.
 */
inline FaceChain independence_face_chain(const Graph& g, int max_card = 64) {
    FaceChain c;
    if (max_card > g.n) max_card = g.n;
    c.level.assign(static_cast<std::size_t>(max_card) + 1, {});
    c.level[0].push_back(0);
    // depth-first over increasing vertex indices keeps each level sorted
    struct Item {
        VertexSet face;
        int next;
        int size;
    };
    std::vector<Item> stack;
    for (int v = g.n - 1; v >= 0; --v) stack.push_back({bit(v), v + 1, 1});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        c.level[static_cast<std::size_t>(it.size)].push_back(it.face);
        if (it.size == max_card) continue;
        for (int v = g.n - 1; v >= it.next; --v)
            if (!(g.adj[v] & it.face)) stack.push_back({it.face | bit(v), v + 1, it.size + 1});
    }
    while (!c.level.empty() && c.level.back().empty()) c.level.pop_back();
    return c;
}

/**
 * Matrix of the simplicial boundary map from the faces in `hi` to the
 * faces in `lo` (one dimension lower), with alternating signs by position
 * of the removed vertex; the map from vertices to the empty face is the
 * augmentation with all entries 1. Over F_p the sign -1 is stored as p-1.
 */
inline ExactMatrix boundary_matrix_from_levels(const std::vector<VertexSet>& lo,
                                               const std::vector<VertexSet>& hi,
                                               FieldSpec field) {
    ExactMatrix m(static_cast<int>(lo.size()), static_cast<int>(hi.size()));
    std::unordered_map<VertexSet, int> row;
    row.reserve(lo.size() * 2);
    for (std::size_t r = 0; r < lo.size(); ++r) row[lo[r]] = static_cast<int>(r);
    const long long minus_one =
        field.is_rational() ? -1 : static_cast<long long>(field.characteristic) - 1;
    for (std::size_t cidx = 0; cidx < hi.size(); ++cidx) {
        VertexSet f = hi[cidx];
        int k = 0;
        for (VertexSet rest = f; rest; ++k) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            auto it = row.find(f & ~bit(v));
            if (it == row.end()) continue; // truncated chain
            m.at(it->second, static_cast<int>(cidx)) = (k % 2 == 0) ? 1 : minus_one;
        }
    }
    return m;
}

/// Boundary map from i-faces to (i-1)-faces of D in the fixed face order.
inline ExactMatrix boundary_matrix(const SimplicialComplex& d, int i, FieldSpec field) {
    if (i < -1) throw std::invalid_argument("boundary dimension must be >= -1");
    return boundary_matrix_from_levels(d.faces_of_dim(i - 1), d.faces_of_dim(i), field);
}

/**
 * All reduced homology dimensions of the chain:
 * dim H~_(k-1) = #level[k] - rank d_k - rank d_(k+1).
 */
inline HomologyProfile reduced_homology(const FaceChain& c, FieldSpec field) {
    HomologyProfile h;
    const int top = c.top();
    if (top < 0) return h; // VOID
    std::vector<int> rk(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k)
        rk[static_cast<std::size_t>(k)] =
            rank(boundary_matrix_from_levels(c.level[static_cast<std::size_t>(k) - 1],
                                             c.level[static_cast<std::size_t>(k)], field),
                 field);
    for (int k = 0; k <= top; ++k) {
        long long d = c.count(k) - rk[static_cast<std::size_t>(k)] -
                      rk[static_cast<std::size_t>(k) + 1];
        if (d != 0) h.dims[k - 1] = d;
    }
    return h;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& d, FieldSpec field) {
    return reduced_homology(face_chain(d), field);
}

/**
 * dim H~_j alone, touching only the two adjacent boundary maps. The chain
 * must carry full face lists at levels j, j+1 and j+2.
 */
inline long long reduced_homology_single(const FaceChain& c, int j, FieldSpec field) {
    const int k = j + 1;
    if (k < 0 || k > c.top()) return 0;
    long long faces = c.count(k);
    if (faces == 0) return 0;
    int r_lo = 0, r_hi = 0;
    if (k >= 1)
        r_lo = rank(boundary_matrix_from_levels(c.level[static_cast<std::size_t>(k) - 1],
                                                c.level[static_cast<std::size_t>(k)], field),
                    field);
    if (k + 1 <= c.top())
        r_hi = rank(boundary_matrix_from_levels(c.level[static_cast<std::size_t>(k)],
                                                c.level[static_cast<std::size_t>(k) + 1], field),
                    field);
    return faces - r_lo - r_hi;
}

inline long long reduced_homology_single(const SimplicialComplex& d, int j, FieldSpec field) {
    return reduced_homology_single(face_chain(d), j, field);
}

} // namespace edgeideals
