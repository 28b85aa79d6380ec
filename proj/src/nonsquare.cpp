#include "sfc/nonsquare.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace sfc {

namespace {

std::optional<std::uint32_t> overlay_side(std::uint32_t n, std::uint32_t m) {
    const auto lo = std::min(n, m);
    const auto hi = std::max(n, m);
    if (lo == 0) {
        return std::nullopt;
    }
    const std::uint64_t k = std::bit_floor(lo / 2);
    if (k >= 1 && 4 * k >= hi) {
        return static_cast<std::uint32_t>(k);
    }
    if (hi <= 4) {
        return 1;
    }
    return std::nullopt;
}

enum class placement { larger_first, larger_last, spread, parity_safe };

constexpr placement placements[] = {placement::larger_first, placement::larger_last,
                                    placement::spread, placement::parity_safe};

// Extents differing by at most one, or for parity_safe only 2s and 4s plus
// a leading 3 when the total is odd. The latter leaves at most one odd-area
// cell per grid, at an even offset.
void distribute(std::uint32_t total, std::uint32_t k, placement where,
                std::vector<std::uint32_t>& extents, std::vector<std::uint32_t>& offsets) {
    extents.assign(k, total / k);
    offsets.resize(k);
    if (where == placement::parity_safe && k > 1) {
        const std::uint32_t odd = total % 2;
        const std::uint32_t slots = k - odd;
        const std::uint32_t fours = (total - 3 * odd - 2 * slots) / 2;
        if (odd) {
            extents[0] = 3;
        }
        for (std::uint32_t t = 0; t < slots; ++t) {
            const bool four = std::uint64_t{t + 1} * fours / slots > std::uint64_t{t} * fours / slots;
            extents[odd + t] = four ? 4 : 2;
        }
    } else {
        const auto extra = total % k;
        for (std::uint32_t t = 0; t < k; ++t) {
            bool larger = false;
            switch (where) {
            case placement::larger_first: larger = t < extra; break;
            case placement::larger_last: larger = t >= k - extra; break;
            default:
                larger = std::uint64_t{t + 1} * extra / k > std::uint64_t{t} * extra / k;
                break;
            }
            extents[t] += larger ? 1 : 0;
        }
    }
    std::uint32_t at = 0;
    for (std::uint32_t t = 0; t < k; ++t) {
        offsets[t] = at;
        at += extents[t];
    }
}

unsigned distance(cell_position a, cell_position b) {
    return static_cast<unsigned>(std::abs(a.r - b.r) + std::abs(a.c - b.c));
}

struct overlay_cell {
    std::uint32_t r;
    std::uint32_t c;
    hilbert_state state;
};

} // namespace

overlay_grid overlay_plan(std::uint32_t n, std::uint32_t m) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("overlay grid needs n, m >= 1");
    }
    const auto k = overlay_side(n, m);
    if (!k) {
        throw aspect_ratio_error(n, m);
    }
    overlay_grid g;
    g.k = *k;
    distribute(n, g.k, placement::larger_first, g.row_extents, g.row_offsets);
    distribute(m, g.k, placement::larger_first, g.col_extents, g.col_offsets);
    return g;
}

fur_plan::fur_plan(std::uint32_t n, std::uint32_t m) : grid_(overlay_plan(n, m)) {
    const std::uint32_t k = grid_.k;
    const auto bits = static_cast<unsigned>(std::countr_zero(k));
    // Each cell stands for one more bisection level below the overlay grid.
    const auto top = start_state(bits + 1);

    // The overlay order is the K x K curve started from `top`, i.e. the
    // transpose of the standard K x K curve.
    std::vector<overlay_cell> order;
    order.reserve(static_cast<std::size_t>(k) * k);
    iter_nonrecursive(k, [&](std::uint32_t i, std::uint32_t j, order_value) {
        order.push_back({j, i, hilbert_walk(coord_pair{j, i}, bits, top).state});
    });

    // Parity of odd-sized cells can rule out a continuous path for one
    // placement of the larger extents but not for another.
    const auto attempt = [&](const overlay_grid& grid) -> bool {
        const auto height = [&](std::size_t t) { return grid.row_extents[order[t].r]; };
        const auto width = [&](std::size_t t) { return grid.col_extents[order[t].c]; };
        const std::size_t count = order.size();

        // Entered on colour e (of (i + j) mod 2), an even-area cell is left
        // so that the next one is entered on e again; an odd-area cell must
        // be entered and left on its majority colour, its corner colour.
        unsigned colour = 0;
        for (std::size_t t = 0; t < count; ++t) {
            if (height(t) * width(t) % 2 == 1) {
                const auto corner =
                    (grid.row_offsets[order[t].r] + grid.col_offsets[order[t].c]) % 2;
                if (colour != corner) {
                    return false;
                }
                colour = 1 - corner;
            }
        }

        // Exit candidates of cell t in preference order: cells on the edge
        // shared with cell t+1 (every cell for the last one), nearest to the
        // pattern's exit corner first.
        const auto candidates = [&](std::size_t t) {
            const unsigned h = height(t);
            const unsigned w = width(t);
            std::vector<cell_position> out;
            for (unsigned r = 0; r < h; ++r) {
                for (unsigned c = 0; c < w; ++c) {
                    bool on_edge = true;
                    if (t + 1 < count) {
                        const auto dr = int(order[t + 1].r) - int(order[t].r);
                        const auto dc = int(order[t + 1].c) - int(order[t].c);
                        on_edge = (dr == 1 && r == h - 1) || (dr == -1 && r == 0) ||
                                  (dc == 1 && c == w - 1) || (dc == -1 && c == 0);
                    }
                    if (on_edge) {
                        out.push_back({static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(c)});
                    }
                }
            }
            const auto goal = exit_corner(order[t].state, h, w);
            std::stable_sort(out.begin(), out.end(), [&](cell_position a, cell_position b) {
                return distance(a, goal) < distance(b, goal);
            });
            return out;
        };

        // Entry of cell t+1 after leaving cell t at x.
        const auto next_entry = [&](std::size_t t, cell_position x) -> cell_position {
            const auto dr = static_cast<int>(order[t + 1].r) - static_cast<int>(order[t].r);
            const auto dc = static_cast<int>(order[t + 1].c) - static_cast<int>(order[t].c);
            if (dr == 1) {
                return {0, x.c};
            }
            if (dr == -1) {
                return {static_cast<std::uint8_t>(height(t + 1) - 1), x.c};
            }
            if (dc == 1) {
                return {x.r, 0};
            }
            return {x.r, static_cast<std::uint8_t>(width(t + 1) - 1)};
        };

        const auto bit = [](cell_position p, unsigned w) {
            return static_cast<std::uint16_t>(1u << (p.r * w + p.c));
        };

        // reachable[t]: entry points of cell t from which the rest of the
        // traversal can be completed with unit steps.
        std::vector<std::vector<cell_position>> cands(count);
        std::vector<std::uint16_t> reachable(count, 0);
        for (std::size_t t = count; t-- > 0;) {
            cands[t] = candidates(t);
            const unsigned h = height(t);
            const unsigned w = width(t);
            for (unsigned e = 0; e < h * w; ++e) {
                const cell_position from{static_cast<std::uint8_t>(e / w),
                                         static_cast<std::uint8_t>(e % w)};
                for (auto x : cands[t]) {
                    if (!cell_path(h, w, from, x)) {
                        continue;
                    }
                    if (t + 1 == count ||
                        (reachable[t + 1] & bit(next_entry(t, x), width(t + 1)))) {
                        reachable[t] |= std::uint16_t(1u << e);
                        break;
                    }
                }
            }
        }

        cell_position entry = entry_corner(top, height(0), width(0));
        if (!(reachable[0] & bit(entry, width(0)))) {
            return false;
        }
        steps_.clear();
        steps_.reserve(count);
        for (std::size_t t = 0; t < count; ++t) {
            const unsigned h = height(t);
            const unsigned w = width(t);
            for (auto x : cands[t]) {
                const auto path = cell_path(h, w, entry, x);
                if (!path) {
                    continue;
                }
                if (t + 1 < count && !(reachable[t + 1] & bit(next_entry(t, x), width(t + 1)))) {
                    continue;
                }
                steps_.push_back({grid.row_offsets[order[t].r] + entry.r,
                                  grid.col_offsets[order[t].c] + entry.c, *path});
                if (t + 1 < count) {
                    entry = next_entry(t, x);
                }
                break;
            }
        }
        return true;
    };

    for (auto rows : placements) {
        for (auto cols : placements) {
            overlay_grid g;
            g.k = k;
            distribute(n, k, rows, g.row_extents, g.row_offsets);
            distribute(m, k, cols, g.col_extents, g.col_offsets);
            if (attempt(g)) {
                grid_ = std::move(g);
                return;
            }
        }
    }
    throw std::logic_error("no continuous overlay traversal for " + std::to_string(n) + "x" +
                           std::to_string(m));
}

std::vector<fur_strip> tile_strips(std::uint32_t n, std::uint32_t m) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("tiling needs n, m >= 1");
    }
    if (overlay_side(n, m)) {
        return {{0, 0, n, m}};
    }
    const bool split_cols = m >= n;
    const std::uint32_t along = split_cols ? m : n;
    const std::uint32_t across = split_cols ? n : m;
    for (std::uint32_t parts = 2; parts <= along; ++parts) {
        const auto base = along / parts;
        const auto extra = along % parts;
        if (!overlay_side(across, base + (extra ? 1 : 0)) || !overlay_side(across, base)) {
            continue;
        }
        std::vector<fur_strip> strips;
        std::uint32_t at = 0;
        for (std::uint32_t p = 0; p < parts; ++p) {
            const auto len = base + (p < extra ? 1 : 0);
            strips.push_back(split_cols ? fur_strip{0, at, n, len} : fur_strip{at, 0, len, m});
            at += len;
        }
        return strips;
    }
    throw aspect_ratio_error(n, m);
}

quadrant_verdict triangle_predicate::operator()(unsigned level, coord_pair anchor) const {
    if (level > 31) {
        throw std::invalid_argument("level exceeds 31");
    }
    const std::uint64_t size = std::uint64_t{1} << level;
    if (anchor.i % size != 0 || anchor.j % size != 0) {
        throw std::invalid_argument("quadrant anchor not aligned to its level");
    }
    const std::uint64_t i0 = anchor.i;
    const std::uint64_t j0 = anchor.j;
    if (i0 + size - 1 < j0) {
        return quadrant_verdict::full;
    }
    if (i0 >= j0 + size - 1) {
        return quadrant_verdict::skip;
    }
    return quadrant_verdict::partial;
}

} // namespace sfc
