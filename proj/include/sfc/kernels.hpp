#pragma once

// Matrix multiplication and Floyd-Warshall parameterised by the order in
// which (i, j) pairs are processed. The serial functions are the reference;
// the *_parallel variants split the same pair sequence across OpenMP threads
// and produce bitwise identical results.

#include "sfc/cache_sim.hpp"
#include "sfc/curve.hpp"
#include "sfc/errors.hpp"
#include "sfc/nonsquare.hpp"

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace sfc {

class dense_matrix {
public:
    dense_matrix() = default;
    dense_matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    dense_matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    static dense_matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

    const double* row(std::size_t r) const { return values_.data() + r * cols_; }
    const std::vector<double>& values() const { return values_; }

    dense_matrix transposed() const;

    friend bool operator==(const dense_matrix&, const dense_matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// One row per line, comma separated. No header.
dense_matrix read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const dense_matrix& m);

struct traversal_order {
    enum class kind { nested, blocked, hilbert };

    kind type = kind::nested;
    /// Rows per block for `blocked`.
    std::uint32_t block_rows = 0;

    static traversal_order nested() { return {kind::nested, 0}; }
    static traversal_order blocked(std::uint32_t s) { return {kind::blocked, s}; }
    static traversal_order hilbert() { return {kind::hilbert, 0}; }

    /// "nested", "hilbert", "blocked" (s = 8) or "blocked:<s>".
    static traversal_order parse(const std::string& text);
    std::string name() const;
};

/// The sequence of (i, j) pairs of an n x m grid under a traversal order.
/// Hilbert uses the FUR loop, falling back to strips when the aspect ratio
/// admits no single overlay grid.
class pair_order {
public:
    pair_order(std::uint32_t n, std::uint32_t m, traversal_order order);

    std::uint32_t rows() const { return n_; }
    std::uint32_t cols() const { return m_; }

    template <class Visit>
    void for_each(Visit&& visit) const {
        switch (order_.type) {
        case traversal_order::kind::nested:
            for (std::uint32_t i = 0; i < n_; ++i) {
                for (std::uint32_t j = 0; j < m_; ++j) {
                    visit(i, j);
                }
            }
            break;
        case traversal_order::kind::blocked:
            for (std::uint32_t top = 0; top < n_; top += order_.block_rows) {
                const std::uint32_t bottom = std::min(n_, top + order_.block_rows);
                for (std::uint32_t j = 0; j < m_; ++j) {
                    for (std::uint32_t i = top; i < bottom; ++i) {
                        visit(i, j);
                    }
                }
            }
            break;
        case traversal_order::kind::hilbert:
            for (std::size_t s = 0; s < plans_.size(); ++s) {
                const auto& strip = strips_[s];
                plans_[s].for_each([&](std::uint32_t i, std::uint32_t j) {
                    visit(strip.i0 + i, strip.j0 + j);
                });
            }
            break;
        }
    }

    std::vector<coord_pair> materialize() const;

private:
    std::uint32_t n_;
    std::uint32_t m_;
    traversal_order order_;
    std::vector<fur_strip> strips_;
    std::vector<fur_plan> plans_;
};

/// A = B * C. Each entry is the scalar product of row i of B and row j of
/// C^T, summed in increasing k. Throws dimension_mismatch.
dense_matrix matmul(const dense_matrix& b, const dense_matrix& c, traversal_order order);
dense_matrix matmul_parallel(const dense_matrix& b, const dense_matrix& c,
                             traversal_order order);

/// Element reads of B (addresses [0, n*k)) and C^T (addresses
/// [n*k, n*k + m*k)) in the order matmul performs them.
access_trace matmul_trace(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                          traversal_order order);

/// Distance used for "no path"; additions involving it saturate.
inline constexpr double infinite_distance = std::numeric_limits<double>::max();

/// All-pairs shortest paths. Step k is sequential; inside it row k and
/// column k are settled first, the remaining pairs follow `order`.
/// Throws dimension_mismatch for non-square input, negative_cycle when a
/// diagonal entry turns negative.
dense_matrix floyd_warshall(const dense_matrix& d, traversal_order order);
dense_matrix floyd_warshall_parallel(const dense_matrix& d, traversal_order order);

/// Reads of the distance matrix (addresses [0, n*n)) made by floyd_warshall.
access_trace floyd_trace(std::uint32_t n, traversal_order order);

} // namespace sfc
