#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace edgeideals {

/// Subsets of {0,...,63} are packed into 64-bit words throughout.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// All-ones mask on n bits; n may be 64.
inline constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline int highest_vertex(VertexSet s) { return 63 - std::countl_zero(s); }

inline std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    while (s) {
        out.push_back(lowest_vertex(s));
        s &= s - 1;
    }
    return out;
}

/// Lexicographic order on faces viewed as sorted vertex tuples:
/// the face containing the smaller element at the first disagreement
/// comes first, and a face precedes its proper supersets.
inline bool face_lex_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    VertexSet diff = a ^ b;
    VertexSet low = diff & (~diff + 1);
    return (a & low) != 0;
}

/// C(a, b), zero whenever a < 0, b < 0 or b > a.
inline long long binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    unsigned long long r = 1;
    for (long long k = 1; k <= b; ++k) {
        unsigned long long num = static_cast<unsigned long long>(a - b + k);
        __uint128_t wide = static_cast<__uint128_t>(r) * num;
        wide /= static_cast<unsigned long long>(k);
        if (wide > static_cast<__uint128_t>(INT64_MAX))
            throw std::overflow_error("binomial overflows 64-bit range");
        r = static_cast<unsigned long long>(wide);
    }
    return static_cast<long long>(r);
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("count overflows 64-bit range");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("count overflows 64-bit range");
    return r;
}

} // namespace edgeideals
