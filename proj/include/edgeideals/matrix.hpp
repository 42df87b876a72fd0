#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgeideals/field.hpp"

namespace edgeideals {

/**
 * Dense integer matrix realizing a boundary map. Entries are signed
 * integers; over F_p they are stored already reduced (so -1 appears as
 * p - 1). No floating point is involved anywhere.
 */
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a; // row-major

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

namespace detail {

struct Int64Overflow {};

inline long long mul_checked(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw Int64Overflow{};
    return r;
}

inline long long sub_checked(long long x, long long y) {
    long long r;
    if (__builtin_sub_overflow(x, y, &r)) throw Int64Overflow{};
    return r;
}

/**
 * Fraction-free (Bareiss) elimination; every intermediate entry is a minor
 * of the input, so the division below is exact. Works over any signed
 * integer type providing mul/sub hooks.
 */
template <typename I, typename Mul, typename Sub>
int bareiss_rank(int rows, int cols, std::vector<I> m, Mul mul, Sub sub) {
    int rank = 0;
    I prev = 1;
    auto at = [&](int r, int c) -> I& { return m[static_cast<std::size_t>(r) * cols + c]; };
    int pr = 0, pc = 0;
    while (pr < rows && pc < cols) {
        int sr = -1, sc = -1;
        for (int c = pc; c < cols && sr < 0; ++c)
            for (int r = pr; r < rows; ++r)
                if (at(r, c) != 0) {
                    sr = r;
                    sc = c;
                    break;
                }
        if (sr < 0) break;
        if (sr != pr)
            for (int c = 0; c < cols; ++c) std::swap(at(pr, c), at(sr, c));
        if (sc != pc)
            for (int r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, sc));
        const I pivot = at(pr, pc);
        for (int r = pr + 1; r < rows; ++r) {
            const I factor = at(r, pc);
            for (int c = pc + 1; c < cols; ++c) {
                I t = sub(mul(at(pr, pc), at(r, c)), mul(factor, at(pr, c)));
                at(r, c) = t / prev;
            }
            at(r, pc) = 0;
        }
        prev = pivot;
        ++rank;
        ++pr;
        ++pc;
    }
    return rank;
}

inline int rank_int64(const ExactMatrix& m) {
    return bareiss_rank<long long>(m.rows, m.cols, m.a, mul_checked, sub_checked);
}

inline int rank_bigint(const ExactMatrix& m) {
    using big = boost::multiprecision::cpp_int;
    std::vector<big> w(m.a.begin(), m.a.end());
    return bareiss_rank<big>(
        m.rows, m.cols, std::move(w), [](const big& x, const big& y) { return big(x * y); },
        [](const big& x, const big& y) { return big(x - y); });
}

inline int rank_mod_p(const ExactMatrix& m, std::uint32_t p) {
    std::vector<std::uint64_t> w(m.a.size());
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        long long v = m.a[i] % static_cast<long long>(p);
        if (v < 0) v += p;
        w[i] = static_cast<std::uint64_t>(v);
    }
    auto at = [&](int r, int c) -> std::uint64_t& {
        return w[static_cast<std::size_t>(r) * m.cols + c];
    };
    int rank = 0;
    int pr = 0;
    for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        int sr = -1;
        for (int r = pr; r < m.rows; ++r)
            if (at(r, pc) != 0) {
                sr = r;
                break;
            }
        if (sr < 0) continue;
        if (sr != pr)
            for (int c = pc; c < m.cols; ++c) std::swap(at(pr, c), at(sr, c));
        // modular inverse of the pivot by Fermat
        std::uint64_t inv = 1, base = at(pr, pc), e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int r = pr + 1; r < m.rows; ++r) {
            std::uint64_t f = at(r, pc);
            if (!f) continue;
            std::uint64_t scale = f * inv % p;
            for (int c = pc; c < m.cols; ++c) {
                std::uint64_t t = at(pr, c) * scale % p;
                at(r, c) = (at(r, c) + p - t) % p;
            }
        }
        ++rank;
        ++pr;
    }
    return rank;
}

} // namespace detail

/**
 * Exact rank over the chosen field. Characteristic zero uses fraction-free
 * elimination in 64-bit integers, falling back to arbitrary precision if an
 * intermediate minor overflows; positive characteristic uses Gaussian
 * elimination mod p.
 */
inline int rank(const ExactMatrix& m, FieldSpec field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (!field.is_rational()) return detail::rank_mod_p(m, field.characteristic);
    try {
        return detail::rank_int64(m);
    } catch (const detail::Int64Overflow&) {
        return detail::rank_bigint(m);
    }
}

} // namespace edgeideals
