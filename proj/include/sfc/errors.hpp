#pragma once

#include <stdexcept>
#include <string>

namespace sfc {

/// Base class for domain errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The rectangle cannot be covered by a single overlay grid.
class aspect_ratio_error : public error {
public:
    aspect_ratio_error(std::size_t n, std::size_t m)
        : error("no overlay grid fits a " + std::to_string(n) + "x" + std::to_string(m) +
                " rectangle; tile it into strips (e.g. iter_fur_tiled)"),
          rows(n), cols(m) {}

    std::size_t rows;
    std::size_t cols;
};

/// A region predicate returned contradicting verdicts for a quadrant and its parent.
class inconsistent_predicate : public error {
public:
    using error::error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

class negative_cycle : public error {
public:
    using error::error;
};

} // namespace sfc
