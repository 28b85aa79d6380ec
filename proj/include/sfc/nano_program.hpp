#pragma once

// Nano-programs: the traversal of a small sub-grid (at most 4x4) packed into
// one 64-bit word. Bits 0..5 hold the number of movements, movement k sits
// at bits 6+2k..7+2k in the `direction` coding.

#include "sfc/curve.hpp"
#include "sfc/lindenmayer.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace sfc {

inline constexpr unsigned max_cell_side = 4;
inline constexpr unsigned max_nano_moves = max_cell_side * max_cell_side - 1;

/// Local position inside a cell, row-major index r * width + c.
struct cell_position {
    std::uint8_t r = 0;
    std::uint8_t c = 0;

    friend constexpr bool operator==(cell_position, cell_position) = default;
};

std::uint64_t pack_moves(std::span<const direction> moves);
std::vector<direction> unpack_moves(std::uint64_t packed);

constexpr unsigned packed_length(std::uint64_t packed) {
    return static_cast<unsigned>(packed & 63u);
}

constexpr direction packed_move(std::uint64_t packed, unsigned k) {
    return static_cast<direction>((packed >> (6 + 2 * k)) & 3u);
}

struct nano_program {
    std::uint64_t packed = 0;
    std::uint8_t height = 1;
    std::uint8_t width = 1;
    hilbert_state orientation = hilbert_state::U;

    unsigned length() const { return packed_length(packed); }
    std::vector<direction> moves() const { return unpack_moves(packed); }
};

/// Entry and preferred exit corner of a pattern on a height x width cell.
cell_position entry_corner(hilbert_state s, unsigned height, unsigned width);
cell_position exit_corner(hilbert_state s, unsigned height, unsigned width);

/// Packed Hamiltonian path of the height x width grid graph from `from` to
/// `to`, if one exists. Paths are precomputed once for every cell size up to
/// 4x4; among several paths the first in right/down/left/up search order wins.
std::optional<std::uint64_t> cell_path(unsigned height, unsigned width, cell_position from,
                                       cell_position to);

/// Traversal of a height x width cell for the given orientation. Starts at
/// the orientation's entry corner and ends at its exit corner, or at the
/// reachable end point nearest to it when the corners admit no
/// Hamiltonian path (same-colour corners of an even-area cell).
/// Throws std::invalid_argument unless 1 <= height, width <= 4.
nano_program nano_program_for(unsigned height, unsigned width, hilbert_state orientation);

/// Flat table of all 64 nano-programs, indexed by
/// ((height-1) * 4 + (width-1)) * 4 + orientation.
using nano_table = std::array<std::uint64_t, max_cell_side * max_cell_side * 4>;

nano_table build_nano_table();
constexpr std::size_t nano_table_index(unsigned height, unsigned width, hilbert_state s) {
    return ((height - 1) * max_cell_side + (width - 1)) * 4 + static_cast<unsigned>(s);
}

/// Binary form: 64-bit little-endian words, no header.
void write_nano_table(const std::filesystem::path& path, const nano_table& table);
nano_table read_nano_table(const std::filesystem::path& path);

} // namespace sfc
