#include "oracles.hpp"

#include "sfc/curve.hpp"
#include "sfc/lindenmayer.hpp"

#include <doctest.h>

#include <ranges>
#include <vector>

using namespace sfc;

namespace {

struct cell {
    std::uint32_t i, j;
    order_value h;
    friend bool operator==(const cell&, const cell&) = default;
};

std::vector<cell> recursive_cells(unsigned level) {
    std::vector<cell> out;
    generate_recursive(level, [&](std::uint32_t i, std::uint32_t j, order_value h) {
        out.push_back({i, j, h});
    });
    return out;
}

std::vector<cell> loop_cells(std::uint64_t n) {
    std::vector<cell> out;
    iter_nonrecursive(n, [&](std::uint32_t i, std::uint32_t j, order_value h) {
        out.push_back({i, j, h});
    });
    return out;
}

} // namespace

TEST_CASE("production rules agree with the automaton") {
    // Child k of pattern s is the quadrant carrying digit k, and its pattern
    // is the state the automaton enters on that digit.
    for (auto s : all_hilbert_states) {
        const auto& rule = production(s);
        for (unsigned k = 0; k < 4; ++k) {
            CHECK(rule.children[k] == hilbert_inverse_step(s, k).next);
        }
        for (unsigned k = 0; k < 3; ++k) {
            const auto a = hilbert_inverse_step(s, k);
            const auto b = hilbert_inverse_step(s, k + 1);
            const auto d = static_cast<unsigned>(rule.moves[k]);
            CHECK(int(b.i_bit) - int(a.i_bit) == direction_di[d]);
            CHECK(int(b.j_bit) - int(a.j_bit) == direction_dj[d]);
        }
    }
}

TEST_CASE("start state alternates with the level") {
    CHECK(start_state(0) == hilbert_state::U);
    CHECK(start_state(1) == hilbert_state::D);
    CHECK(start_state(2) == hilbert_state::U);
    CHECK(start_state(7) == hilbert_state::D);
}

TEST_CASE("recursive generation of the 2x2 square") {
    const auto cells = recursive_cells(1);
    const std::vector<cell> want{{0, 0, 0}, {0, 1, 1}, {1, 1, 2}, {1, 0, 3}};
    CHECK(cells == want);
}

TEST_CASE("recursive generation equals decode for every h") {
    for (unsigned level = 0; level <= 6; ++level) {
        const auto cells = recursive_cells(level);
        REQUIRE(cells.size() == (std::size_t{1} << (2 * level)));
        for (std::size_t t = 0; t < cells.size(); ++t) {
            CHECK(cells[t].h == t);
            CHECK(hilbert_decode(t) == coord_pair{cells[t].i, cells[t].j});
            const auto [oi, oj] = oracle::hilbert_cell(level, t);
            CHECK(cells[t].i == oi);
            CHECK(cells[t].j == oj);
        }
    }
}

TEST_CASE("recursion call count and depth") {
    for (unsigned level = 0; level <= 8; ++level) {
        std::uint64_t visits = 0;
        const auto stats = generate_recursive(level, [&](auto, auto, auto) { ++visits; });
        std::uint64_t calls = 0;
        for (unsigned l = 0; l <= level; ++l) {
            calls += std::uint64_t{1} << (2 * l);
        }
        CHECK(visits == (std::uint64_t{1} << (2 * level)));
        CHECK(stats.calls == calls);
        CHECK(stats.max_depth == level + 1);
        CHECK(count_recursive_calls(level) == calls);
    }
    CHECK_THROWS_AS(generate_recursive(32, [](auto, auto, auto) {}), std::invalid_argument);
}

TEST_CASE("expand_pattern starts at the entry corner of each pattern") {
    for (auto s : all_hilbert_states) {
        std::vector<coord_pair> cells;
        expand_pattern(s, 1, coord_pair{4, 6}, 100, [&](std::uint32_t i, std::uint32_t j, order_value h) {
            CHECK(h == 100 + cells.size());
            cells.push_back({i, j});
        });
        REQUIRE(cells.size() == 4);
        for (unsigned k = 0; k < 4; ++k) {
            const auto t = hilbert_inverse_step(s, k);
            CHECK(cells[k] == coord_pair{4u + t.i_bit, 6u + t.j_bit});
        }
    }
}

TEST_CASE("trailing zeros match the and-negate formulation") {
    for (order_value h = 1; h < 5000; ++h) {
        // log2(h & -h) counted by shifting
        order_value low = h & (~h + 1);
        unsigned lg = 0;
        while (low > 1) {
            low >>= 1;
            ++lg;
        }
        CHECK(trailing_zeros(h) == lg);
    }
    CHECK(trailing_zeros(order_value{1} << 63) == 63);
}

TEST_CASE("non-recursive loop examples") {
    const std::vector<cell> two{{0, 0, 0}, {0, 1, 1}, {1, 1, 2}, {1, 0, 3}};
    CHECK(loop_cells(2) == two);
    CHECK(loop_cells(1) == std::vector<cell>{{0, 0, 0}});
    const auto four = loop_cells(4);
    REQUIRE(four.size() == 16);
    CHECK(four[4].i == 2);
    CHECK(four[4].j == 0);
    CHECK(four.back().i == 0);
    CHECK(four.back().j == 3);
}

TEST_CASE("non-recursive loop equals recursive generation") {
    for (unsigned level = 0; level <= 8; ++level) {
        CHECK(loop_cells(std::uint64_t{1} << level) == recursive_cells(level));
    }
}

TEST_CASE("non-recursive loop rejects bad sides") {
    const auto none = [](auto, auto, auto) {};
    CHECK_THROWS_AS(iter_nonrecursive(0, none), std::invalid_argument);
    CHECK_THROWS_AS(iter_nonrecursive(3, none), std::invalid_argument);
    CHECK_THROWS_AS(iter_nonrecursive(12, none), std::invalid_argument);
}

TEST_CASE("constant number of operations per step") {
    for (unsigned level = 1; level <= 9; ++level) {
        op_counter ops;
        iter_nonrecursive(std::uint64_t{1} << level, [](auto, auto, auto) {}, ops);
        CHECK(ops.iterations == (std::uint64_t{1} << (2 * level)));
        CHECK(ops.min_per_iteration == ops.max_per_iteration);
        CHECK(ops.max_per_iteration == 26);
    }
}

TEST_CASE("cursor heading is the move just made") {
    hilbert_cursor cur;
    CHECK(cur.heading() == direction::right);
    for (int t = 0; t < 4095; ++t) {
        const auto i = cur.i;
        const auto j = cur.j;
        cur.advance();
        const auto d = static_cast<unsigned>(cur.heading());
        CHECK(cur.i - i == direction_di[d]);
        CHECK(cur.j - j == direction_dj[d]);
    }
}

TEST_CASE("range form equals the loop") {
    for (unsigned level = 0; level <= 6; ++level) {
        const std::uint64_t n = std::uint64_t{1} << level;
        std::vector<cell> got;
        for (auto [i, j, h] : hilbert(n)) {
            got.push_back({i, j, h});
        }
        CHECK(got == loop_cells(n));
    }
    static_assert(std::input_iterator<hilbert::iterator>);
    CHECK_THROWS_AS(hilbert(6), std::invalid_argument);
}
