#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "edgeideals/betti.hpp"

namespace edgeideals {

/// beta_{i,i+1}(K_n) = i * C(n, i+1); zero in every other degree.
inline BettiTable betti_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    BettiTable t;
    t.n = n;
    t.add(0, 0, 1);
    for (int i = 1; i < n; ++i) t.add(i, i + 1, checked_mul(i, binomial(n, i + 1)));
    return t;
}

/// beta_{i,i+1}(K_{n,m}) = sum_{j+l=i+1, j,l>=1} C(n,j) C(m,l).
inline BettiTable betti_complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("bipartite sides must be >= 1");
    BettiTable t;
    t.n = n + m;
    t.add(0, 0, 1);
    for (int i = 1; i < n + m; ++i) {
        long long v = 0;
        for (int j = 1; j <= i; ++j)
            v = checked_add(v, checked_mul(binomial(n, j), binomial(m, i + 1 - j)));
        t.add(i, i + 1, v);
    }
    return t;
}

/**
 * beta_{i,i+1}(K_{n_1..n_t}) = sum_{l=2}^{t} (l-1) * sum over choices of
 * l parts and compositions a_1+...+a_l = i+1 with every a_s >= 1 of
 * prod C(n_{j_s}, a_s). Computed by a polynomial DP: part j contributes
 * (1+x)^{n_j} - 1, and the inner sum is the coefficient of x^{i+1} in the
 * l-th elementary symmetric polynomial of those.
 */
inline BettiTable betti_complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("multipartite needs >= 2 parts");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("multipartite part sizes must be >= 1");
    const int t_count = static_cast<int>(parts.size());
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    // esym[l][d]: choose l parts so far, d vertices in total
    std::vector<std::vector<long long>> esym(
        static_cast<std::size_t>(t_count) + 1,
        std::vector<long long>(static_cast<std::size_t>(total) + 1, 0));
    esym[0][0] = 1;
    int used = 0;
    for (int j = 0; j < t_count; ++j) {
        used += parts[j];
        for (int l = std::min(j + 1, t_count); l >= 1; --l)
            for (int d = used; d >= 1; --d)
                for (int a = 1; a <= parts[j] && a <= d; ++a)
                    esym[l][d] = checked_add(
                        esym[l][d], checked_mul(esym[l - 1][d - a], binomial(parts[j], a)));
    }
    BettiTable t;
    t.n = total;
    t.add(0, 0, 1);
    for (int i = 1; i < total; ++i) {
        long long v = 0;
        for (int l = 2; l <= t_count; ++l)
            v = checked_add(v, checked_mul(l - 1, esym[l][i + 1]));
        t.add(i, i + 1, v);
    }
    return t;
}

/// beta_i(S_n) = C(n, i) in degree i+1; the star has n+1 vertices.
inline BettiTable betti_star(int n) {
    if (n < 1) throw std::invalid_argument("star graph needs n >= 1");
    BettiTable t;
    t.n = n + 1;
    t.add(0, 0, 1);
    for (int i = 1; i <= n; ++i) t.add(i, i + 1, binomial(n, i));
    return t;
}

/// Ways to place m runs of length l in the cycle C_n avoiding both
/// endpoints 1 and n of the cut: C(n - l m - 1, m).
inline long long run_count_interior(int n, int l, int m) {
    if (n < 1 || l < 1 || m < 0) throw std::invalid_argument("run counts need n,l >= 1, m >= 0");
    return binomial(n - static_cast<long long>(l) * m - 1, m);
}

/// Ways to place m runs of length l anywhere in C_n:
/// C(n - l m, m) + l * C(n - l m - 1, m - 1).
inline long long run_count_cycle(int n, int l, int m) {
    if (n < 1 || l < 1 || m < 0) throw std::invalid_argument("run counts need n,l >= 1, m >= 0");
    const long long rem = n - static_cast<long long>(l) * m;
    return checked_add(binomial(rem, m), checked_mul(l, binomial(rem - 1, m - 1)));
}

/**
 * Graded Betti numbers of the cycle C_n. Below degree n, with i = d - l
 * and j = 2l - d,
 *
 *   beta_{l,d} = C(i, j) * [ C(n-2i, i) + 2 C(n-2i-1, i-1) ],
 *
 * the bracket being the number of placements of i runs of length 2.
 * Degree n carries a single extra entry decided by n mod 3.
 */
inline BettiTable betti_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    BettiTable t;
    t.n = n;
    t.add(0, 0, 1);
    for (int d = 1; d < n; ++d)
        for (int l = (d + 1) / 2; l <= d; ++l) {
            const int i = d - l, j = 2 * l - d;
            t.add(l, d, checked_mul(binomial(i, j), run_count_cycle(n, 2, i)));
        }
    const int m = n / 3;
    switch (n % 3) {
    case 0: t.add(2 * m, n, 2); break;
    case 1: t.add(2 * m + 1, n, 1); break;
    default: t.add(2 * m + 1, n, 1); break;
    }
    return t;
}

/**
 * Graded Betti numbers of the path L_n: with i = d - l and j = 2l - d,
 *   beta_{l,d} = C(i, j) C(n-2i, i) + C(i-1, j) C(n-2i, i-1).
 */
inline BettiTable betti_line(int n) {
    if (n < 2) throw std::invalid_argument("line graph needs n >= 2");
    BettiTable t;
    t.n = n;
    t.add(0, 0, 1);
    for (int d = 1; d <= n; ++d)
        for (int l = (d + 1) / 2; l <= d; ++l) {
            const int i = d - l, j = 2 * l - d;
            long long v = checked_add(
                checked_mul(binomial(i, j), binomial(n - 2 * i, i)),
                checked_mul(binomial(i - 1, j), binomial(n - 2 * i, i - 1)));
            t.add(l, d, v);
        }
    return t;
}

inline int pd_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    return n - 1;
}

inline int pd_complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("bipartite sides must be >= 1");
    return n + m - 1;
}

inline int pd_complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("multipartite needs >= 2 parts");
    int total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("multipartite part sizes must be >= 1");
        total += p;
    }
    return total - 1;
}

inline int pd_star(int n) {
    if (n < 1) throw std::invalid_argument("star graph needs n >= 1");
    return n;
}

/// (2n)/3, (2n+1)/3 or (2n-1)/3 according to n mod 3.
inline int pd_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    switch (n % 3) {
    case 0: return 2 * n / 3;
    case 1: return (2 * n + 1) / 3;
    default: return (2 * n - 1) / 3;
    }
}

/// (2n)/3, (2n-2)/3 or (2n-1)/3 according to n mod 3.
inline int pd_line(int n) {
    if (n < 2) throw std::invalid_argument("line graph needs n >= 2");
    switch (n % 3) {
    case 0: return 2 * n / 3;
    case 1: return (2 * n - 2) / 3;
    default: return (2 * n - 1) / 3;
    }
}

} // namespace edgeideals
