#pragma once

// Test-only reference computations, written independently of the library
// code paths they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

/// Textbook rotate-and-flip Hilbert d -> (x, y) on an n x n grid. Its curve
/// always starts at (0,0) and ends at (x = n-1, y = 0).
inline std::pair<std::uint64_t, std::uint64_t> d2xy(std::uint64_t n, std::uint64_t d) {
    std::uint64_t x = 0, y = 0, t = d;
    for (std::uint64_t s = 1; s < n; s *= 2) {
        const std::uint64_t rx = 1 & (t / 2);
        const std::uint64_t ry = 1 & (t ^ rx);
        if (ry == 0) {
            if (rx == 1) {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            std::swap(x, y);
        }
        x += s * rx;
        y += s * ry;
        t /= 4;
    }
    return {x, y};
}

/// (i, j) of cell d on the standard curve of side 2^level: exits upper-right
/// for even levels (i = y, j = x), lower-left for odd levels (transposed).
inline std::pair<std::uint32_t, std::uint32_t> hilbert_cell(unsigned level, std::uint64_t d) {
    const auto [x, y] = d2xy(std::uint64_t{1} << level, d);
    if (level % 2 == 0) {
        return {static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(x)};
    }
    return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
}

inline std::uint64_t interleave(std::uint32_t i, std::uint32_t j) {
    std::uint64_t h = 0;
    for (unsigned b = 0; b < 32; ++b) {
        h |= static_cast<std::uint64_t>((j >> b) & 1u) << (2 * b);
        h |= static_cast<std::uint64_t>((i >> b) & 1u) << (2 * b + 1);
    }
    return h;
}

/// LRU by linear search over a recency vector (front = most recent).
inline std::uint64_t lru_misses(const std::vector<std::uint64_t>& addresses,
                                std::uint64_t capacity, std::uint64_t block_size) {
    std::vector<std::uint64_t> stack;
    std::uint64_t misses = 0;
    for (auto a : addresses) {
        const auto b = a / block_size;
        auto it = std::find(stack.begin(), stack.end(), b);
        if (it == stack.end()) {
            ++misses;
            if (stack.size() == capacity) {
                stack.pop_back();
            }
        } else {
            stack.erase(it);
        }
        stack.insert(stack.begin(), b);
    }
    return misses;
}

/// a_ij = sum_k b_ik c_kj, k increasing. Row-major inputs.
inline std::vector<double> naive_matmul(const std::vector<double>& b, const std::vector<double>& c,
                                        std::size_t n, std::size_t k, std::size_t m) {
    std::vector<double> a(n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t t = 0; t < k; ++t) {
                s += b[i * k + t] * c[t * m + j];
            }
            a[i * m + j] = s;
        }
    }
    return a;
}

/// Classic triple loop on int64 weights; `inf` marks missing edges.
inline std::vector<std::int64_t> floyd(std::vector<std::int64_t> d, std::size_t n,
                                       std::int64_t inf) {
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i * n + k] != inf && d[k * n + j] != inf &&
                    d[i * n + k] + d[k * n + j] < d[i * n + j]) {
                    d[i * n + j] = d[i * n + k] + d[k * n + j];
                }
            }
        }
    }
    return d;
}

} // namespace oracle
