#pragma once

// Reference computations written without the library's algorithms. Tests
// compare library results against these.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Exponents = std::vector<unsigned>;

// Radical of a monomial ideal is generated by the squarefree parts of its
// generators, so a polynomial lies in it iff every term is divisible by one
// of those parts, i.e. some generator's support is inside the term's support.
inline bool in_monomial_radical(const std::vector<Exponents>& gens, const std::vector<Exponents>& terms) {
    for (const auto& t : terms) {
        bool covered = false;
        for (const auto& g : gens) {
            bool inside = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] > 0 && t[i] == 0) inside = false;
            if (inside) covered = true;
        }
        if (!covered) return false;
    }
    return true;
}

// Dimension of K[x]/I for a monomial ideal: largest variable set S such that
// no generator is supported inside S. Brute force over all subsets.
// Returns -1 for the unit ideal.
inline int monomial_dimension(const std::vector<Exponents>& gens, std::size_t n) {
    for (const auto& g : gens)
        if (std::all_of(g.begin(), g.end(), [](unsigned e) { return e == 0; })) return -1;
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (const auto& g : gens) {
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i)
                if (g[i] > 0 && !(s & (1u << i))) inside = false;
            if (inside) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// Dense matrices over F_p as vectors of rows.
using ModMatrix = std::vector<std::vector<std::uint32_t>>;

inline ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, std::uint32_t p) {
    ModMatrix c(a.size(), std::vector<std::uint32_t>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    return c;
}

// Rank over F_p from the size of the image: |{A v}| = p^rank.
inline unsigned rank_by_image(const ModMatrix& a, std::uint32_t p) {
    const std::size_t rows = a.size(), cols = a[0].size();
    std::set<std::vector<std::uint32_t>> image;
    std::vector<std::uint32_t> v(cols, 0);
    while (true) {
        std::vector<std::uint32_t> w(rows, 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) w[i] = (w[i] + a[i][j] * v[j]) % p;
        image.insert(w);
        std::size_t i = 0;
        while (i < cols && ++v[i] == p) v[i++] = 0;
        if (i == cols) break;
    }
    unsigned r = 0;
    for (std::size_t sz = image.size(); sz > 1; sz /= p) ++r;
    return r;
}

// Number of points of F_p^n fixed by x -> A x + b.
inline std::uint64_t fixed_point_count(const ModMatrix& a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
    const std::size_t n = a.size();
    std::vector<std::uint32_t> v(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool fixed = true;
        for (std::size_t i = 0; i < n && fixed; ++i) {
            std::uint32_t s = b[i];
            for (std::size_t j = 0; j < n; ++j) s = (s + a[i][j] * v[j]) % p;
            if (s != v[i]) fixed = false;
        }
        count += fixed;
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return count;
}

// Order of the group generated by matrices over F_p, by plain closure.
inline std::size_t closure_size(const std::vector<ModMatrix>& gens, std::uint32_t p, std::size_t n) {
    ModMatrix id(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    std::set<ModMatrix> seen{id};
    std::vector<ModMatrix> todo{id};
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            auto next = mod_mul(cur, g, p);
            if (seen.insert(next).second) todo.push_back(next);
        }
    }
    return seen.size();
}

// Multiplication in F_p[a]/(minpoly) on coefficient vectors (low first).
inline std::vector<std::uint32_t> ext_mul(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                                          const std::vector<std::uint32_t>& minpoly, std::uint32_t p) {
    const std::size_t m = minpoly.size() - 1;
    std::vector<std::uint32_t> c(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i + j] = (c[i + j] + x[i] * y[j]) % p;
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        const auto lead = c[d];
        if (lead == 0) continue;
        for (std::size_t k = 0; k <= m; ++k) c[d - m + k] = (c[d - m + k] + (p - lead) * minpoly[k]) % p;
    }
    c.resize(m);
    return c;
}

}  // namespace oracle
