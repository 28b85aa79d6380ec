#include "sfc/nano_program.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace sfc {

namespace {

constexpr std::uint64_t no_path = ~std::uint64_t{0};
constexpr unsigned cells = max_cell_side * max_cell_side;

// paths[h-1][w-1][from][to], local indices r * w + c.
using path_table = std::array<std::array<std::array<std::array<std::uint64_t, cells>, cells>,
                                         max_cell_side>,
                              max_cell_side>;

struct path_search {
    unsigned h;
    unsigned w;
    std::array<std::uint64_t, cells>* found;
    std::array<bool, cells> seen{};
    std::array<direction, cells> moves{};

    void run(unsigned r, unsigned c, unsigned depth) {
        if (depth + 1 == h * w) {
            auto& slot = (*found)[r * w + c];
            if (slot == no_path) {
                slot = pack_moves(std::span(moves.data(), depth));
            }
            return;
        }
        for (unsigned d = 0; d < 4; ++d) {
            const int nr = static_cast<int>(r) + direction_di[d];
            const int nc = static_cast<int>(c) + direction_dj[d];
            if (nr < 0 || nc < 0 || nr >= static_cast<int>(h) || nc >= static_cast<int>(w)) {
                continue;
            }
            const auto idx = static_cast<unsigned>(nr) * w + static_cast<unsigned>(nc);
            if (seen[idx]) {
                continue;
            }
            seen[idx] = true;
            moves[depth] = static_cast<direction>(d);
            run(static_cast<unsigned>(nr), static_cast<unsigned>(nc), depth + 1);
            seen[idx] = false;
        }
    }
};

path_table build_paths() {
    path_table t;
    for (unsigned h = 1; h <= max_cell_side; ++h) {
        for (unsigned w = 1; w <= max_cell_side; ++w) {
            for (unsigned from = 0; from < cells; ++from) {
                auto& row = t[h - 1][w - 1][from];
                row.fill(no_path);
                if (from >= h * w) {
                    continue;
                }
                path_search s{h, w, &row};
                s.seen[from] = true;
                s.run(from / w, from % w, 0);
            }
        }
    }
    return t;
}

const path_table& paths() {
    static const path_table table = build_paths();
    return table;
}

void check_cell(unsigned height, unsigned width) {
    if (height < 1 || height > max_cell_side || width < 1 || width > max_cell_side) {
        throw std::invalid_argument("cell " + std::to_string(height) + "x" +
                                    std::to_string(width) + " outside 1..4");
    }
}

unsigned manhattan(cell_position a, cell_position b) {
    return static_cast<unsigned>(std::abs(a.r - b.r) + std::abs(a.c - b.c));
}

} // namespace

std::uint64_t pack_moves(std::span<const direction> moves) {
    if (moves.size() > max_nano_moves) {
        throw std::length_error("nano-program holds at most 15 movements");
    }
    std::uint64_t packed = moves.size();
    for (std::size_t k = 0; k < moves.size(); ++k) {
        packed |= static_cast<std::uint64_t>(moves[k]) << (6 + 2 * k);
    }
    return packed;
}

std::vector<direction> unpack_moves(std::uint64_t packed) {
    std::vector<direction> out(packed_length(packed));
    for (unsigned k = 0; k < out.size(); ++k) {
        out[k] = packed_move(packed, k);
    }
    return out;
}

cell_position entry_corner(hilbert_state s, unsigned height, unsigned width) {
    if (s == hilbert_state::U || s == hilbert_state::D) {
        return {0, 0};
    }
    return {static_cast<std::uint8_t>(height - 1), static_cast<std::uint8_t>(width - 1)};
}

cell_position exit_corner(hilbert_state s, unsigned height, unsigned width) {
    if (s == hilbert_state::U || s == hilbert_state::C) {
        return {0, static_cast<std::uint8_t>(width - 1)};
    }
    return {static_cast<std::uint8_t>(height - 1), 0};
}

std::optional<std::uint64_t> cell_path(unsigned height, unsigned width, cell_position from,
                                       cell_position to) {
    check_cell(height, width);
    if (from.r >= height || from.c >= width || to.r >= height || to.c >= width) {
        return std::nullopt;
    }
    const auto p = paths()[height - 1][width - 1][from.r * width + from.c][to.r * width + to.c];
    if (p == no_path) {
        return std::nullopt;
    }
    return p;
}

nano_program nano_program_for(unsigned height, unsigned width, hilbert_state orientation) {
    check_cell(height, width);
    const auto from = entry_corner(orientation, height, width);
    const auto goal = exit_corner(orientation, height, width);
    std::optional<std::uint64_t> best;
    unsigned best_distance = ~0u;
    for (unsigned r = 0; r < height; ++r) {
        for (unsigned c = 0; c < width; ++c) {
            const cell_position to{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(c)};
            const auto p = cell_path(height, width, from, to);
            if (p && manhattan(to, goal) < best_distance) {
                best = p;
                best_distance = manhattan(to, goal);
            }
        }
    }
    // A serpentine from any corner always exists.
    return {*best, static_cast<std::uint8_t>(height), static_cast<std::uint8_t>(width),
            orientation};
}

nano_table build_nano_table() {
    nano_table t{};
    for (unsigned h = 1; h <= max_cell_side; ++h) {
        for (unsigned w = 1; w <= max_cell_side; ++w) {
            for (auto s : all_hilbert_states) {
                t[nano_table_index(h, w, s)] = nano_program_for(h, w, s).packed;
            }
        }
    }
    return t;
}

void write_nano_table(const std::filesystem::path& path, const nano_table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    for (auto word : table) {
        char bytes[8];
        for (unsigned b = 0; b < 8; ++b) {
            bytes[b] = static_cast<char>((word >> (8 * b)) & 0xffu);
        }
        out.write(bytes, 8);
    }
    if (!out) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
}

nano_table read_nano_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    nano_table table{};
    for (auto& word : table) {
        unsigned char bytes[8];
        if (!in.read(reinterpret_cast<char*>(bytes), 8)) {
            throw std::runtime_error(path.string() + ": truncated nano-program table");
        }
        word = 0;
        for (unsigned b = 0; b < 8; ++b) {
            word |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
        }
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw std::runtime_error(path.string() + ": trailing bytes after nano-program table");
    }
    return table;
}

} // namespace sfc
