#include "oracles.hpp"

#include "sfc/curve.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace sfc;

TEST_CASE("transition table: digits and inputs are permutations per state") {
    for (auto s : all_hilbert_states) {
        std::set<unsigned> digits;
        for (unsigned bits = 0; bits < 4; ++bits) {
            digits.insert(hilbert_step(s, bits >> 1, bits & 1).digit);
        }
        CHECK(digits.size() == 4);
        for (unsigned d = 0; d < 4; ++d) {
            const auto inv = hilbert_inverse_step(s, d);
            const auto fwd = hilbert_step(s, inv.i_bit, inv.j_bit);
            CHECK(fwd.digit == d);
            CHECK(fwd.next == inv.next);
        }
    }
}

TEST_CASE("transition labels of state U") {
    CHECK(hilbert_step(hilbert_state::U, 0, 0).digit == 0);
    CHECK(hilbert_step(hilbert_state::U, 0, 0).next == hilbert_state::D);
    CHECK(hilbert_step(hilbert_state::U, 1, 0).digit == 1);
    CHECK(hilbert_step(hilbert_state::U, 0, 1).digit == 3);
    CHECK(hilbert_step(hilbert_state::U, 0, 1).next == hilbert_state::C);
    CHECK(hilbert_step(hilbert_state::D, 0, 0).next == hilbert_state::U);
}

TEST_CASE("z_encode examples") {
    CHECK(z_encode({0, 0}) == 0);
    CHECK(z_encode({1, 0}) == 2);
    CHECK(z_encode({2, 3}) == 13);
    CHECK(oracle::interleave(2, 3) == 13);
}

TEST_CASE("z_decode examples") {
    CHECK(z_decode(0) == coord_pair{0, 0});
    CHECK(z_decode(2) == coord_pair{1, 0});
    CHECK(z_decode(13) == coord_pair{2, 3});
}

TEST_CASE("z_encode matches per-bit loop and single-state automaton") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> coord(0, max_coordinate);
    // The trivial Mealy automaton: (i_l, j_l) -> 2 i_l + j_l.
    const auto automaton = [](coord_pair p) {
        order_value h = 0;
        for (unsigned l = 32; l-- > 0;) {
            h = h * 4 + 2 * ((p.i >> l) & 1u) + ((p.j >> l) & 1u);
        }
        return h;
    };
    for (int t = 0; t < 2000; ++t) {
        const coord_pair p{coord(rng), coord(rng)};
        const auto h = z_encode(p);
        CHECK(h == z_encode_reference(p));
        CHECK(h == oracle::interleave(p.i, p.j));
        CHECK(h == automaton(p));
        CHECK(z_decode(h) == p);
    }
}

TEST_CASE("encoders reject coordinates above 31 bits") {
    CHECK_THROWS_AS(z_encode({max_coordinate + 1, 0}), std::overflow_error);
    CHECK_THROWS_AS(z_encode_reference({0, max_coordinate + 1}), std::overflow_error);
    CHECK_THROWS_AS(hilbert_encode({0xffffffffu, 0}), std::overflow_error);
    CHECK_NOTHROW(hilbert_encode({max_coordinate, max_coordinate}));
}

// Smallest even L >= 2 for which the walk from U already equals the full
// 32-pair walk.
unsigned stable_length(coord_pair p) {
    const auto full = hilbert_walk(p, 32).value;
    for (unsigned l = 2;; l += 2) {
        if (hilbert_walk(p, l).value == full) {
            return l;
        }
    }
}

TEST_CASE("effective_length examples") {
    CHECK(effective_length({3, 5}) == 4);
    CHECK(effective_length({1, 1}) == 2);
    CHECK(effective_length({16, 2}) == 6);
    CHECK(effective_length({0, 0}) == 2);
    CHECK(stable_length({16, 2}) == 6);
    CHECK(stable_length({3, 5}) == 4);
}

TEST_CASE("effective_length equals the prefix-stability brute force") {
    for (std::uint32_t i = 0; i < 70; ++i) {
        for (std::uint32_t j = 0; j < 70; ++j) {
            CHECK(effective_length({i, j}) == stable_length({i, j}));
        }
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> coord(0, max_coordinate);
    for (int t = 0; t < 500; ++t) {
        const coord_pair p{coord(rng) >> (t % 31), coord(rng) >> (t % 29)};
        CHECK(effective_length(p) == stable_length(p));
    }
}

TEST_CASE("hilbert_encode examples") {
    CHECK(hilbert_encode({0, 0}) == 0);
    CHECK(hilbert_encode({3, 3}) == 10);
    CHECK(hilbert_encode({0, 2}) == 14);
    // Even-length padding puts (1,0) behind (0,1): 00|10 runs U -> D -> digit 3.
    CHECK(hilbert_encode({1, 0}) == 3);
    CHECK(hilbert_encode({0, 1}) == 1);
}

TEST_CASE("hilbert_decode examples") {
    CHECK(hilbert_decode(0) == coord_pair{0, 0});
    CHECK(hilbert_decode(10) == coord_pair{3, 3});
    CHECK(hilbert_decode(3) == coord_pair{1, 0});
    CHECK(hilbert_decode(1) == coord_pair{0, 1});
}

TEST_CASE("hilbert values agree with the rotate-and-flip oracle") {
    for (unsigned level = 0; level <= 6; ++level) {
        for (std::uint64_t d = 0; d < (std::uint64_t{1} << (2 * level)); ++d) {
            const auto [i, j] = oracle::hilbert_cell(level, d);
            REQUIRE(hilbert_encode({i, j}) == d);
            REQUIRE(hilbert_decode(d) == coord_pair{i, j});
        }
    }
}

TEST_CASE("bijection, adjacency and quadrant contiguity up to 64x64") {
    for (unsigned level = 0; level <= 6; ++level) {
        const std::uint32_t n = 1u << level;
        std::vector<bool> seen(std::size_t{n} * n, false);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) {
                const auto h = hilbert_encode({i, j});
                REQUIRE(h < seen.size());
                CHECK_FALSE(seen[h]);
                seen[h] = true;
                CHECK(hilbert_decode(h) == coord_pair{i, j});
            }
        }
        for (std::uint64_t h = 0; h + 1 < std::uint64_t{n} * n; ++h) {
            const auto a = hilbert_decode(h);
            const auto b = hilbert_decode(h + 1);
            const auto di = a.i > b.i ? a.i - b.i : b.i - a.i;
            const auto dj = a.j > b.j ? a.j - b.j : b.j - a.j;
            CHECK(di + dj == 1);
        }
        for (unsigned sub = 0; sub <= level; ++sub) {
            const std::uint32_t s = 1u << sub;
            for (std::uint32_t qi = 0; qi < n; qi += s) {
                for (std::uint32_t qj = 0; qj < n; qj += s) {
                    order_value lo = ~order_value{0}, hi = 0;
                    for (std::uint32_t i = qi; i < qi + s; ++i) {
                        for (std::uint32_t j = qj; j < qj + s; ++j) {
                            const auto h = hilbert_encode({i, j});
                            lo = std::min(lo, h);
                            hi = std::max(hi, h);
                        }
                    }
                    CHECK(hi - lo + 1 == std::uint64_t{s} * s);
                }
            }
        }
    }
}

TEST_CASE("prefix stability: two more leading zero pairs change nothing") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint32_t> coord(0, (1u << 20) - 1);
    for (int t = 0; t < 1000; ++t) {
        const coord_pair p{coord(rng), coord(rng)};
        const auto l = effective_length(p);
        const auto base = hilbert_walk(p, l).value;
        CHECK(hilbert_walk(p, l + 2).value == base);
        CHECK(hilbert_walk(p, l + 4).value == base);
        CHECK(hilbert_walk(p, l + 2).state == hilbert_walk(p, l).state);
        CHECK(hilbert_decode(hilbert_encode(p)) == p);
    }
}

TEST_CASE("hilbert decode handles the full 64-bit range") {
    const order_value h = ~order_value{0};
    const auto p = hilbert_decode(h);
    CHECK(hilbert_walk(p, 32).value == h);
    CHECK(effective_digits(h) == 32);
    CHECK(effective_digits(0) == 2);
    CHECK(effective_digits(16) == 4);
}

TEST_CASE("canonic order") {
    CHECK(canonic_order({0, 0}, 4) == 0);
    CHECK(canonic_order({2, 3}, 4) == 11);
    CHECK(canonic_order({1, 0}, 7) == 7);
    CHECK_THROWS_AS(canonic_order({0, 4}, 4), std::invalid_argument);
}

TEST_CASE("transposed encode") {
    const auto h = [](coord_pair p) { return hilbert_encode(p); };
    const auto z = [](coord_pair p) { return z_encode(p); };
    CHECK(transposed_encode(h, {1, 0}) == hilbert_encode({0, 1}));
    CHECK(transposed_encode(h, {1, 0}) == 1);
    CHECK(transposed_encode(z, {1, 0}) == 1);
    CHECK(transposed_encode(z, {0, 0}) == 0);
    CHECK(transposed_encode(h, {0, 0}) == 0);
}
