#pragma once

// Full Hilbert traversal of a 2^L x 2^L grid, generated two ways: by
// expanding the four-rule grammar recursively, and by the constant-space
// loop that recovers the production level from the trailing zeros of h.

#include "sfc/curve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sfc {

/// Movement coding shared by the iterator and nano-programs.
enum class direction : std::uint8_t { right = 0, down = 1, left = 2, up = 3 };

inline constexpr int direction_di[4] = {0, 1, 0, -1};
inline constexpr int direction_dj[4] = {1, 0, -1, 0};

struct production_rule {
    std::array<hilbert_state, 4> children;
    std::array<direction, 3> moves;
};

/// U ::= D v U > U ^ C,  D ::= U > D v D < A,  A ::= C ^ A < A v D,  C ::= A < C ^ C > U
inline constexpr std::array<production_rule, 4> production_rules{{
    {{hilbert_state::D, hilbert_state::U, hilbert_state::U, hilbert_state::C},
     {direction::down, direction::right, direction::up}},
    {{hilbert_state::U, hilbert_state::D, hilbert_state::D, hilbert_state::A},
     {direction::right, direction::down, direction::left}},
    {{hilbert_state::C, hilbert_state::A, hilbert_state::A, hilbert_state::D},
     {direction::up, direction::left, direction::down}},
    {{hilbert_state::A, hilbert_state::C, hilbert_state::C, hilbert_state::U},
     {direction::left, direction::up, direction::right}},
}};

constexpr const production_rule& production(hilbert_state s) {
    return production_rules[static_cast<unsigned>(s)];
}

/// Start symbol for a 2^L x 2^L grid: U for even L, D for odd L. This keeps
/// the traversal consistent with hilbert_encode's even-length padding.
constexpr hilbert_state start_state(unsigned level) {
    return (level & 1u) ? hilbert_state::D : hilbert_state::U;
}

/// Instrumentation of one recursive expansion.
struct recursion_stats {
    std::uint64_t calls = 0;
    unsigned max_depth = 0;
};

namespace detail {

template <class Visit>
class grammar_expander {
public:
    grammar_expander(std::uint32_t i, std::uint32_t j, order_value h, Visit& visit)
        : i_(i), j_(j), h_(h), visit_(visit) {}

    void expand(hilbert_state s, int level) {
        ++stats_.calls;
        ++depth_;
        stats_.max_depth = std::max(stats_.max_depth, depth_);
        if (level < 0) {
            visit_(i_, j_, h_);
        } else {
            const auto& rule = production(s);
            expand(rule.children[0], level - 1);
            for (unsigned k = 0; k < 3; ++k) {
                const auto d = static_cast<unsigned>(rule.moves[k]);
                i_ = static_cast<std::uint32_t>(static_cast<std::int64_t>(i_) + direction_di[d]);
                j_ = static_cast<std::uint32_t>(static_cast<std::int64_t>(j_) + direction_dj[d]);
                ++h_;
                expand(rule.children[k + 1], level - 1);
            }
        }
        --depth_;
    }

    const recursion_stats& stats() const { return stats_; }

private:
    std::uint32_t i_;
    std::uint32_t j_;
    order_value h_;
    Visit& visit_;
    unsigned depth_ = 0;
    recursion_stats stats_;
};

} // namespace detail

/// Expands pattern `s` over a 2^levels x 2^levels quadrant whose top-left
/// corner is `anchor`, numbering cells from `first`. The walk starts at the
/// pattern's entry corner (top-left for U/D, bottom-right for A/C).
template <class Visit>
recursion_stats expand_pattern(hilbert_state s, unsigned levels, coord_pair anchor,
                               order_value first, Visit&& visit) {
    const std::uint32_t last = (std::uint32_t{1} << levels) - 1;
    const bool from_bottom_right = s == hilbert_state::A || s == hilbert_state::C;
    detail::grammar_expander<std::remove_reference_t<Visit>> ex(
        anchor.i + (from_bottom_right ? last : 0), anchor.j + (from_bottom_right ? last : 0),
        first, visit);
    ex.expand(s, static_cast<int>(levels) - 1);
    return ex.stats();
}

/// Visits all 4^level cells of the 2^level square in Hilbert order by
/// mutual recursion over the production rules. visit(i, j, h).
template <class Visit>
recursion_stats generate_recursive(unsigned level, Visit&& visit) {
    if (level > 31) {
        throw std::invalid_argument("level " + std::to_string(level) + " exceeds 31");
    }
    return expand_pattern(start_state(level), level, coord_pair{}, 0, visit);
}

/// Number of recursive invocations made by generate_recursive(level).
std::uint64_t count_recursive_calls(unsigned level);

/// Number of trailing zero bits of h. h must be positive.
constexpr unsigned trailing_zeros(order_value h) {
    return static_cast<unsigned>(std::countr_zero(h));
}

/// Elementary-operation accounting for the non-recursive loop body.
struct no_op_count {
    constexpr void tick(unsigned) {}
    constexpr void end_iteration() {}
};

/// Records the number of elementary operations of every iteration.
struct op_counter {
    std::uint64_t current = 0;
    std::uint64_t iterations = 0;
    std::uint64_t min_per_iteration = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_per_iteration = 0;

    void tick(unsigned k) { current += k; }
    void end_iteration() {
        ++iterations;
        min_per_iteration = std::min(min_per_iteration, current);
        max_per_iteration = std::max(max_per_iteration, current);
        current = 0;
    }
};

/// Entire mutable state of the non-recursive loop.
///
/// `c` is the movement register, initialised to 3 and updated by two xor
/// steps per iteration. It moves the
/// walk by j += (c-2) rem 2, i += (c-1) rem 2 with truncated remainder, so
/// the direction it encodes between the two updates is c xor 3 in the
/// `direction` coding.
struct hilbert_cursor {
    std::int64_t i = 0;
    std::int64_t j = 0;
    order_value h = 0;
    int c = 3;
    unsigned level = 0;
    unsigned digit = 0;

    /// Direction of the move made by the last advance (right before any).
    direction heading() const {
        if (h == 0) {
            return direction::right;
        }
        const int odd = static_cast<int>((level - 1) & 1u);
        return static_cast<direction>(c ^ odd ^ static_cast<int>(digit == 1) ^ 3);
    }

    template <class Ops = no_op_count>
    constexpr void advance(Ops&& ops = Ops{}) {
        h += 1;
        ops.tick(1);
        level = trailing_zeros(h) / 2 + 1;
        ops.tick(3);
        digit = static_cast<unsigned>(h >> (2 * (level - 1))) & 3u;
        ops.tick(4);
        const int odd = static_cast<int>((level - 1) & 1u);
        c ^= 3 * (odd ^ static_cast<int>(digit == 3));
        ops.tick(6);
        j += (c - 2) % 2;
        ops.tick(3);
        i += (c - 1) % 2;
        ops.tick(3);
        c ^= odd ^ static_cast<int>(digit == 1);
        ops.tick(5);
    }
};

inline void check_power_of_two_side(std::uint64_t n) {
    if (n == 0 || !std::has_single_bit(n) || n > (std::uint64_t{1} << 31)) {
        throw std::invalid_argument("side length " + std::to_string(n) +
                                    " is not a power of two in [1, 2^31]");
    }
}

/// Visits the n x n square (n a power of two) in Hilbert order with constant
/// space and a constant number of operations per step. visit(i, j, h).
template <class Visit, class Ops = no_op_count>
void iter_nonrecursive(std::uint64_t n, Visit&& visit, Ops&& ops = Ops{}) {
    check_power_of_two_side(n);
    const order_value total = n * n;
    hilbert_cursor cur;
    while (cur.h < total) {
        ops.tick(1);
        visit(static_cast<std::uint32_t>(cur.i), static_cast<std::uint32_t>(cur.j), cur.h);
        cur.advance(ops);
        ops.end_iteration();
    }
}

struct hilbert_visit {
    std::uint32_t i;
    std::uint32_t j;
    order_value h;
};

/// Range form of iter_nonrecursive: `for (auto [i, j, h] : hilbert(n))`.
class hilbert {
public:
    class iterator {
    public:
        using value_type = hilbert_visit;
        using difference_type = std::ptrdiff_t;

        iterator() = default;

        hilbert_visit operator*() const {
            return {static_cast<std::uint32_t>(cur_.i), static_cast<std::uint32_t>(cur_.j),
                    cur_.h};
        }
        iterator& operator++() {
            cur_.advance();
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(std::default_sentinel_t) const { return cur_.h >= total_; }

    private:
        friend class hilbert;
        explicit iterator(order_value total) : total_(total) {}

        hilbert_cursor cur_;
        order_value total_ = 0;
    };

    explicit hilbert(std::uint64_t n) : total_(n * n) { check_power_of_two_side(n); }

    iterator begin() const { return iterator(total_); }
    std::default_sentinel_t end() const { return {}; }

private:
    order_value total_;
};

} // namespace sfc
