#pragma once

// Hilbert-order loops beyond the power-of-two square:
//  - iter_fur: arbitrary n x m rectangles through a K x K overlay grid of
//    2..4 sized cells, each traversed by a precomputed cell path.
//  - iter_fgf: predicate-defined regions of a 2^L square, skipping whole
//    quadrants and reporting true Hilbert values.

#include "sfc/curve.hpp"
#include "sfc/errors.hpp"
#include "sfc/lindenmayer.hpp"
#include "sfc/nano_program.hpp"

#include <cstdint>
#include <vector>

namespace sfc {

struct overlay_grid {
    std::uint32_t k = 1;
    std::vector<std::uint32_t> row_extents;
    std::vector<std::uint32_t> col_extents;
    std::vector<std::uint32_t> row_offsets;
    std::vector<std::uint32_t> col_offsets;

    std::uint32_t rows() const { return row_offsets.back() + row_extents.back(); }
    std::uint32_t cols() const { return col_offsets.back() + col_extents.back(); }
};

/// Overlay grid with the largest power of two K such that 2K <= min(n, m)
/// and 4K >= max(n, m); a single n x m cell when n, m <= 4 and no K >= 2
/// fits. Extents differ by at most one, larger extents first.
/// Throws aspect_ratio_error when no K exists.
overlay_grid overlay_plan(std::uint32_t n, std::uint32_t m);

/// Precomputed cell sequence of a FUR traversal. When the larger extents
/// placed first make a unit-step path impossible (checkerboard parity of
/// odd-sized cells), other placements are tried; grid() reports the one used. Each step holds the global
/// entry point of one overlay cell and the packed path through it.
class fur_plan {
public:
    struct step {
        std::uint32_t i;
        std::uint32_t j;
        std::uint64_t path;
    };

    fur_plan(std::uint32_t n, std::uint32_t m);

    const overlay_grid& grid() const { return grid_; }
    const std::vector<step>& steps() const { return steps_; }

    /// Replays the plan; visit(i, j) for every cell of [0,n) x [0,m).
    template <class Visit>
    void for_each(Visit&& visit) const {
        for (const auto& s : steps_) {
            std::int64_t i = s.i;
            std::int64_t j = s.j;
            visit(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            const unsigned len = packed_length(s.path);
            for (unsigned k = 0; k < len; ++k) {
                const auto d = static_cast<unsigned>(packed_move(s.path, k));
                i += direction_di[d];
                j += direction_dj[d];
                visit(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            }
        }
    }

private:
    overlay_grid grid_;
    std::vector<step> steps_;
};

/// Visits every (i, j) in [0,n) x [0,m) exactly once with unit steps.
/// Overlay cells follow the Hilbert order of the K x K grid; at powers of
/// two the sequence equals iter_nonrecursive. Throws aspect_ratio_error.
template <class Visit>
void iter_fur(std::uint32_t n, std::uint32_t m, Visit&& visit) {
    fur_plan(n, m).for_each(visit);
}

/// Side-by-side strips, each an independent iter_fur traversal. Works for
/// every n, m >= 1. Locality (and unit-step continuity) is lost at the
/// seams between strips.
struct fur_strip {
    std::uint32_t i0, j0, rows, cols;
};

std::vector<fur_strip> tile_strips(std::uint32_t n, std::uint32_t m);

template <class Visit>
void iter_fur_tiled(std::uint32_t n, std::uint32_t m, Visit&& visit) {
    for (const auto& s : tile_strips(n, m)) {
        fur_plan(s.rows, s.cols).for_each([&](std::uint32_t i, std::uint32_t j) {
            visit(s.i0 + i, s.j0 + j);
        });
    }
}

enum class quadrant_verdict : std::uint8_t { skip, partial, full };

/// A 2^level x 2^level quadrant with top-left corner `anchor`.
struct quadrant_query {
    unsigned level;
    coord_pair anchor;
};

/// Region predicate {(i, j) : i < j}. Callable as a query for iter_fgf.
struct triangle_predicate {
    quadrant_verdict operator()(unsigned level, coord_pair anchor) const;
    quadrant_verdict operator()(quadrant_query q) const { return (*this)(q.level, q.anchor); }
};

inline constexpr triangle_predicate triangle_query{};

namespace detail {

template <class Query, class Visit>
class jump_over {
public:
    jump_over(Query& query, Visit& visit) : query_(query), visit_(visit) {}

    void descend(hilbert_state s, unsigned level, coord_pair anchor, order_value first,
                 quadrant_verdict verdict) {
        if (verdict == quadrant_verdict::skip) {
            return;
        }
        if (level == 0) {
            visit_(anchor.i, anchor.j, first);
            return;
        }
        const unsigned half = level - 1;
        const order_value span = order_value{1} << (2 * half);
        if (verdict == quadrant_verdict::full) {
            for (unsigned k = 0; k < 4; ++k) {
                if (ask(half, child(s, anchor, half, k)) == quadrant_verdict::skip) {
                    throw inconsistent_predicate("quadrant reported full has a skipped child");
                }
            }
            expand_pattern(s, level, anchor, first, visit_);
            return;
        }
        for (unsigned k = 0; k < 4; ++k) {
            const auto a = child(s, anchor, half, k);
            descend(hilbert_inverse_step(s, k).next, half, a, first + k * span, ask(half, a));
        }
    }

    quadrant_verdict ask(unsigned level, coord_pair anchor) {
        return query_(quadrant_query{level, anchor});
    }

private:
    static coord_pair child(hilbert_state s, coord_pair anchor, unsigned half, unsigned digit) {
        const auto t = hilbert_inverse_step(s, digit);
        return {anchor.i + (std::uint32_t{t.i_bit} << half),
                anchor.j + (std::uint32_t{t.j_bit} << half)};
    }

    Query& query_;
    Visit& visit_;
};

} // namespace detail

/// Visits the cells of [0, 2^level)^2 whose singleton quadrant is not
/// skipped, in increasing true Hilbert value h (equal to hilbert_encode).
/// query(quadrant_query) -> quadrant_verdict; visit(i, j, h).
/// Skipped quadrants cost one query; reaching the next visited cell costs
/// O(level) queries. Throws inconsistent_predicate when a full quadrant
/// reports a skipped child.
template <class Query, class Visit>
void iter_fgf(unsigned level, Query&& query, Visit&& visit) {
    if (level > 31) {
        throw std::invalid_argument("level exceeds 31");
    }
    detail::jump_over<std::remove_reference_t<Query>, std::remove_reference_t<Visit>> walker(
        query, visit);
    walker.descend(start_state(level), level, coord_pair{}, 0, walker.ask(level, coord_pair{}));
}

} // namespace sfc
