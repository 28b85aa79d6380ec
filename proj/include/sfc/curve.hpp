#pragma once

// Coordinate <-> order value conversions for the Z-order and the Hilbert
// curve. Coordinates are (i, j) with i growing downward (row) and j growing
// rightward (column).

#include <array>
#include <cstdint>
#include <string_view>

namespace sfc {

using order_value = std::uint64_t;

struct coord_pair {
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    friend constexpr bool operator==(coord_pair, coord_pair) = default;
};

/// Largest coordinate accepted by the encoders (31 bits), so every order
/// value fits into 64 bits.
inline constexpr std::uint32_t max_coordinate = (std::uint32_t{1} << 31) - 1;

/// The four base traversal patterns of a Hilbert quadrant. They double as
/// automaton states and as grammar non-terminals.
///   U: upper-left -> down, right, up -> upper-right
///   D: upper-left -> right, down, left -> lower-left
///   A: lower-right -> up, left, down -> lower-left
///   C: lower-right -> left, up, right -> upper-right
enum class hilbert_state : std::uint8_t { U = 0, D = 1, A = 2, C = 3 };

inline constexpr std::array<hilbert_state, 4> all_hilbert_states{
    hilbert_state::U, hilbert_state::D, hilbert_state::A, hilbert_state::C};

std::string_view to_string(hilbert_state s);

struct hilbert_transition {
    std::uint8_t digit;
    hilbert_state next;
};

struct hilbert_inverse_transition {
    std::uint8_t i_bit;
    std::uint8_t j_bit;
    hilbert_state next;
};

namespace detail {

using hs = hilbert_state;

// Indexed by [state][2 * i_bit + j_bit].
inline constexpr hilbert_transition hilbert_table[4][4] = {
    // U
    {{0, hs::D}, {3, hs::C}, {1, hs::U}, {2, hs::U}},
    // D
    {{0, hs::U}, {1, hs::D}, {3, hs::A}, {2, hs::D}},
    // A
    {{2, hs::A}, {1, hs::A}, {3, hs::D}, {0, hs::C}},
    // C
    {{2, hs::C}, {3, hs::U}, {1, hs::C}, {0, hs::A}},
};

constexpr auto make_inverse_table() {
    std::array<std::array<hilbert_inverse_transition, 4>, 4> inv{};
    for (unsigned s = 0; s < 4; ++s) {
        for (unsigned bits = 0; bits < 4; ++bits) {
            const auto t = hilbert_table[s][bits];
            inv[s][t.digit] = {static_cast<std::uint8_t>(bits >> 1),
                               static_cast<std::uint8_t>(bits & 1), t.next};
        }
    }
    return inv;
}

inline constexpr auto hilbert_inverse_table = make_inverse_table();

} // namespace detail

/// One transition of the Hilbert Mealy automaton: consumes the bit pair
/// (i_bit, j_bit), emits a four-adic digit.
constexpr hilbert_transition hilbert_step(hilbert_state s, unsigned i_bit, unsigned j_bit) {
    return detail::hilbert_table[static_cast<unsigned>(s)][((i_bit & 1u) << 1) | (j_bit & 1u)];
}

/// The inverse automaton: consumes a four-adic digit, emits a bit pair.
constexpr hilbert_inverse_transition hilbert_inverse_step(hilbert_state s, unsigned digit) {
    return detail::hilbert_inverse_table[static_cast<unsigned>(s)][digit & 3u];
}

/// Z-order value by bit interleaving, i-bits in the higher position of each pair.
/// Throws std::overflow_error if a coordinate exceeds max_coordinate.
order_value z_encode(coord_pair p);

/// Per-bit loop form of z_encode. Reference for the fast path.
order_value z_encode_reference(coord_pair p);

coord_pair z_decode(order_value h);

/// Smallest even bit count L >= 2 with 2^L > max(i, j). Encoding with any
/// L' >= L from state U yields the same value.
unsigned effective_length(coord_pair p);

/// Number of four-adic digits consumed by hilbert_decode: smallest even
/// count >= 2 that covers h.
unsigned effective_digits(order_value h);

struct hilbert_walk_result {
    order_value value;
    hilbert_state state;
};

/// Runs the automaton from `start` over the low `bits` bit pairs of p,
/// most significant first. Returns the concatenated digits and the final state.
constexpr hilbert_walk_result hilbert_walk(coord_pair p, unsigned bits,
                                           hilbert_state start = hilbert_state::U) {
    order_value h = 0;
    hilbert_state s = start;
    for (unsigned l = bits; l-- > 0;) {
        const auto t = hilbert_step(s, (p.i >> l) & 1u, (p.j >> l) & 1u);
        h = (h << 2) | t.digit;
        s = t.next;
    }
    return {h, s};
}

/// Hilbert order value. Always starts in state U over effective_length(p)
/// bit pairs. Throws std::overflow_error if a coordinate exceeds max_coordinate.
order_value hilbert_encode(coord_pair p);

coord_pair hilbert_decode(order_value h);

/// Row-major order i * n + j. Throws std::invalid_argument if j >= n.
order_value canonic_order(coord_pair p, std::uint64_t n);

/// Applies `curve` to the transposed pair (j, i).
template <class Curve>
order_value transposed_encode(Curve&& curve, coord_pair p) {
    return curve(coord_pair{p.j, p.i});
}

} // namespace sfc
