#include "sfc/kernels.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sfc {

dense_matrix::dense_matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

dense_matrix::dense_matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows * cols) {
        throw dimension_mismatch("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                                 " needs " + std::to_string(rows * cols) + " values, got " +
                                 std::to_string(values_.size()));
    }
}

dense_matrix dense_matrix::identity(std::size_t n) {
    dense_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

dense_matrix dense_matrix::transposed() const {
    dense_matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

dense_matrix read_matrix_csv(std::istream& in) {
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::size_t count = 0;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::size_t used = 0;
            double v = 0;
            try {
                v = std::stod(field, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || field.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::runtime_error("matrix row " + std::to_string(rows + 1) +
                                         ": bad number '" + field + "'");
            }
            values.push_back(v);
            ++count;
        }
        if (rows == 0) {
            cols = count;
        } else if (count != cols) {
            throw dimension_mismatch("matrix row " + std::to_string(rows + 1) + " has " +
                                     std::to_string(count) + " values, expected " +
                                     std::to_string(cols));
        }
        ++rows;
    }
    return dense_matrix(rows, cols, std::move(values));
}

void write_matrix_csv(std::ostream& out, const dense_matrix& m) {
    char buf[32];
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto res = std::to_chars(buf, buf + sizeof buf, m(r, c));
            out.write(buf, res.ptr - buf);
            out << (c + 1 < m.cols() ? ',' : '\n');
        }
    }
}

traversal_order traversal_order::parse(const std::string& text) {
    if (text == "nested") {
        return nested();
    }
    if (text == "hilbert") {
        return hilbert();
    }
    if (text == "blocked") {
        return blocked(8);
    }
    if (text.rfind("blocked:", 0) == 0) {
        std::uint32_t s = 0;
        const auto* first = text.data() + 8;
        const auto* last = text.data() + text.size();
        const auto res = std::from_chars(first, last, s);
        if (res.ec == std::errc{} && res.ptr == last && s > 0) {
            return blocked(s);
        }
    }
    throw std::invalid_argument("unknown traversal order '" + text + "'");
}

std::string traversal_order::name() const {
    switch (type) {
    case kind::nested: return "nested";
    case kind::hilbert: return "hilbert";
    case kind::blocked: return "blocked:" + std::to_string(block_rows);
    }
    return "?";
}

pair_order::pair_order(std::uint32_t n, std::uint32_t m, traversal_order order)
    : n_(n), m_(m), order_(order) {
    if (order.type == traversal_order::kind::blocked &&
        (order.block_rows < 1 || order.block_rows > n)) {
        throw std::invalid_argument("block rows " + std::to_string(order.block_rows) +
                                    " outside [1, " + std::to_string(n) + "]");
    }
    if (order.type == traversal_order::kind::hilbert && n > 0 && m > 0) {
        strips_ = tile_strips(n, m);
        plans_.reserve(strips_.size());
        for (const auto& s : strips_) {
            plans_.emplace_back(s.rows, s.cols);
        }
    }
}

std::vector<coord_pair> pair_order::materialize() const {
    std::vector<coord_pair> out;
    out.reserve(static_cast<std::size_t>(n_) * m_);
    for_each([&](std::uint32_t i, std::uint32_t j) { out.push_back({i, j}); });
    return out;
}

namespace {

void check_product(const dense_matrix& b, const dense_matrix& c) {
    if (b.cols() != c.rows()) {
        throw dimension_mismatch("cannot multiply " + std::to_string(b.rows()) + "x" +
                                 std::to_string(b.cols()) + " by " + std::to_string(c.rows()) +
                                 "x" + std::to_string(c.cols()));
    }
}

double dot(const double* x, const double* y, std::size_t len) {
    double s = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        s += x[k] * y[k];
    }
    return s;
}

double saturating_add(double a, double b) {
    if (a == infinite_distance || b == infinite_distance) {
        return infinite_distance;
    }
    const double s = a + b;
    return s > infinite_distance ? infinite_distance : s;
}

void relax(dense_matrix& d, std::size_t i, std::size_t j, std::size_t k) {
    const double via = saturating_add(d(i, k), d(k, j));
    if (via < d(i, j)) {
        d(i, j) = via;
    }
}

void check_square(const dense_matrix& d) {
    if (d.rows() != d.cols()) {
        throw dimension_mismatch("distance matrix must be square, got " +
                                 std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
    }
}

void settle_row_and_column(dense_matrix& d, std::size_t k) {
    if (d(k, k) < 0) {
        throw negative_cycle("negative cycle through node " + std::to_string(k));
    }
    const std::size_t n = d.rows();
    for (std::size_t j = 0; j < n; ++j) {
        relax(d, k, j, k);
    }
    for (std::size_t i = 0; i < n; ++i) {
        relax(d, i, k, k);
    }
}

void check_diagonal(const dense_matrix& d) {
    for (std::size_t v = 0; v < d.rows(); ++v) {
        if (d(v, v) < 0) {
            throw negative_cycle("negative cycle through node " + std::to_string(v));
        }
    }
}

std::uint32_t checked_dim(std::size_t v) {
    if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw std::length_error("matrix dimension exceeds 32 bits");
    }
    return static_cast<std::uint32_t>(v);
}

} // namespace

dense_matrix matmul(const dense_matrix& b, const dense_matrix& c, traversal_order order) {
    check_product(b, c);
    const auto ct = c.transposed();
    const std::size_t len = b.cols();
    dense_matrix a(b.rows(), c.cols());
    pair_order(checked_dim(b.rows()), checked_dim(c.cols()), order)
        .for_each([&](std::uint32_t i, std::uint32_t j) { a(i, j) = dot(b.row(i), ct.row(j), len); });
    return a;
}

dense_matrix matmul_parallel(const dense_matrix& b, const dense_matrix& c,
                             traversal_order order) {
    check_product(b, c);
    const auto ct = c.transposed();
    const std::size_t len = b.cols();
    dense_matrix a(b.rows(), c.cols());
    // Contiguous chunks of the pair sequence keep each thread's accesses local.
    const auto pairs = pair_order(checked_dim(b.rows()), checked_dim(c.cols()), order).materialize();
    const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < count; ++t) {
        const auto p = pairs[static_cast<std::size_t>(t)];
        a(p.i, p.j) = dot(b.row(p.i), ct.row(p.j), len);
    }
    return a;
}

access_trace matmul_trace(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                          traversal_order order) {
    if (n == 0 || k == 0 || m == 0) {
        throw std::invalid_argument("matmul trace needs positive dimensions");
    }
    access_trace t;
    const std::uint64_t ct_base = std::uint64_t{n} * k;
    t.footprint = ct_base + std::uint64_t{m} * k;
    t.addresses.reserve(2 * std::uint64_t{n} * m * k);
    pair_order(n, m, order).for_each([&](std::uint32_t i, std::uint32_t j) {
        const std::uint64_t b_row = std::uint64_t{i} * k;
        const std::uint64_t c_row = ct_base + std::uint64_t{j} * k;
        for (std::uint32_t kk = 0; kk < k; ++kk) {
            t.addresses.push_back(b_row + kk);
            t.addresses.push_back(c_row + kk);
        }
    });
    return t;
}

dense_matrix floyd_warshall(const dense_matrix& d0, traversal_order order) {
    check_square(d0);
    dense_matrix d = d0;
    const std::size_t n = d.rows();
    const pair_order pairs(checked_dim(n), checked_dim(n), order);
    for (std::size_t k = 0; k < n; ++k) {
        settle_row_and_column(d, k);
        pairs.for_each([&](std::uint32_t i, std::uint32_t j) {
            if (i != k && j != k) {
                relax(d, i, j, k);
            }
        });
        check_diagonal(d);
    }
    return d;
}

dense_matrix floyd_warshall_parallel(const dense_matrix& d0, traversal_order order) {
    check_square(d0);
    dense_matrix d = d0;
    const std::size_t n = d.rows();
    const auto pairs = pair_order(checked_dim(n), checked_dim(n), order).materialize();
    const auto count = static_cast<std::int64_t>(pairs.size());
    for (std::size_t k = 0; k < n; ++k) {
        settle_row_and_column(d, k);
        // Off row/column k every update reads only row k and column k, which
        // no longer change during this step.
#pragma omp parallel for schedule(static)
        for (std::int64_t t = 0; t < count; ++t) {
            const auto p = pairs[static_cast<std::size_t>(t)];
            if (p.i != k && p.j != k) {
                relax(d, p.i, p.j, k);
            }
        }
        check_diagonal(d);
    }
    return d;
}

access_trace floyd_trace(std::uint32_t n, traversal_order order) {
    if (n == 0) {
        throw std::invalid_argument("floyd trace needs n >= 1");
    }
    access_trace t;
    t.footprint = std::uint64_t{n} * n;
    const auto at = [n](std::uint64_t i, std::uint64_t j) { return i * n + j; };
    const pair_order pairs(n, n, order);
    for (std::uint32_t k = 0; k < n; ++k) {
        for (std::uint32_t j = 0; j < n; ++j) {
            t.addresses.push_back(at(k, k));
            t.addresses.push_back(at(k, j));
        }
        for (std::uint32_t i = 0; i < n; ++i) {
            t.addresses.push_back(at(i, k));
            t.addresses.push_back(at(k, k));
        }
        pairs.for_each([&](std::uint32_t i, std::uint32_t j) {
            if (i != k && j != k) {
                t.addresses.push_back(at(i, k));
                t.addresses.push_back(at(k, j));
                t.addresses.push_back(at(i, j));
            }
        });
    }
    return t;
}

} // namespace sfc
