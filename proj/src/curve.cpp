#include "sfc/curve.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace sfc {

namespace {

void check_coordinates(coord_pair p) {
    if (p.i > max_coordinate || p.j > max_coordinate) {
        throw std::overflow_error("coordinate (" + std::to_string(p.i) + "," +
                                  std::to_string(p.j) + ") exceeds 31 bits");
    }
}

#if !defined(__BMI2__)
// Spreads the low 32 bits of x to the even bit positions.
constexpr std::uint64_t spread_bits(std::uint64_t x) {
    x &= 0xffffffffull;
    x = (x | (x << 16)) & 0x0000ffff0000ffffull;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffull;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

constexpr std::uint32_t compact_bits(std::uint64_t x) {
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x >> 4)) & 0x00ff00ff00ff00ffull;
    x = (x | (x >> 8)) & 0x0000ffff0000ffffull;
    x = (x | (x >> 16)) & 0x00000000ffffffffull;
    return static_cast<std::uint32_t>(x);
}
#endif

constexpr std::uint64_t even_bits = 0x5555555555555555ull;

} // namespace

std::string_view to_string(hilbert_state s) {
    switch (s) {
    case hilbert_state::U: return "U";
    case hilbert_state::D: return "D";
    case hilbert_state::A: return "A";
    case hilbert_state::C: return "C";
    }
    return "?";
}

order_value z_encode(coord_pair p) {
    check_coordinates(p);
#if defined(__BMI2__)
    return _pdep_u64(p.i, even_bits << 1) | _pdep_u64(p.j, even_bits);
#else
    return (spread_bits(p.i) << 1) | spread_bits(p.j);
#endif
}

order_value z_encode_reference(coord_pair p) {
    check_coordinates(p);
    order_value h = 0;
    for (unsigned l = 32; l-- > 0;) {
        h = (h << 2) | (((p.i >> l) & 1u) << 1) | ((p.j >> l) & 1u);
    }
    return h;
}

coord_pair z_decode(order_value h) {
#if defined(__BMI2__)
    return {static_cast<std::uint32_t>(_pext_u64(h, even_bits << 1)),
            static_cast<std::uint32_t>(_pext_u64(h, even_bits))};
#else
    return {compact_bits(h >> 1), compact_bits(h)};
#endif
}

unsigned effective_length(coord_pair p) {
    const auto width = static_cast<unsigned>(std::bit_width(std::max(p.i, p.j)));
    return std::max(2u, (width + 1) & ~1u);
}

unsigned effective_digits(order_value h) {
    const auto digits = (static_cast<unsigned>(std::bit_width(h)) + 1) / 2;
    return std::max(2u, (digits + 1) & ~1u);
}

order_value hilbert_encode(coord_pair p) {
    check_coordinates(p);
    return hilbert_walk(p, effective_length(p)).value;
}

coord_pair hilbert_decode(order_value h) {
    coord_pair p;
    hilbert_state s = hilbert_state::U;
    for (unsigned l = effective_digits(h); l-- > 0;) {
        const auto t = hilbert_inverse_step(s, static_cast<unsigned>(h >> (2 * l)));
        p.i = (p.i << 1) | t.i_bit;
        p.j = (p.j << 1) | t.j_bit;
        s = t.next;
    }
    return p;
}

order_value canonic_order(coord_pair p, std::uint64_t n) {
    if (p.j >= n) {
        throw std::invalid_argument("column " + std::to_string(p.j) +
                                    " out of range for row length " + std::to_string(n));
    }
    return static_cast<order_value>(p.i) * n + p.j;
}

} // namespace sfc
