#pragma once

// Independent reference implementations used only by the tests.  These
// deliberately avoid the library's elimination and enumeration code paths:
// rank is computed by plain rational Gauss-Jordan with immediate pivot
// normalization, antichain families by brute force over the candidate
// power set, and Bell numbers by the binomial recurrence.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracles {

using Rat = boost::multiprecision::cpp_rational;
using Big = boost::multiprecision::cpp_int;

// Rank by textbook Gauss-Jordan over the rationals: scale each pivot row to
// a leading 1 as soon as it is found, then clear its column everywhere.
inline std::size_t rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rat lead = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// All antichain families over the size->=2 subsets of {0..n-1}, found by
// testing every subset family for pairwise non-containment.  Exponential in
// 2^n, so only usable for n <= 4.  Returns families as lists of bitmasks.
inline std::vector<std::vector<std::uint32_t>> brute_force_antichains(std::size_t n) {
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (__builtin_popcount(s) >= 2) candidates.push_back(s);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t family = 0; family < (1ull << candidates.size()); ++family) {
        std::vector<std::uint32_t> edges;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (family >> i & 1) edges.push_back(candidates[i]);
        bool anti = true;
        for (std::size_t a = 0; a < edges.size() && anti; ++a)
            for (std::size_t b = 0; b < edges.size() && anti; ++b)
                if (a != b && (edges[a] & edges[b]) == edges[a]) anti = false;
        if (anti) out.push_back(edges);
    }
    return out;
}

// Bell numbers via B_{n+1} = sum_k C(n,k) B_k.
inline Big bell_by_recurrence(std::size_t n) {
    std::vector<Big> bell{1};
    for (std::size_t m = 1; m <= n; ++m) {
        Big next = 0;
        Big binom = 1;
        for (std::size_t k = 0; k < m; ++k) {
            next += binom * bell[k];
            binom = binom * (m - 1 - k) / (k + 1);
        }
        bell.push_back(next);
    }
    return bell[n];
}

}  // namespace oracles
