#pragma once

// Fully associative LRU cache over abstract element addresses.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace sfc {

struct cache_config {
    std::uint64_t capacity_blocks = 1;
    /// Addresses per block; a power of two.
    std::uint64_t block_size = 8;
};

struct access_trace {
    std::vector<std::uint64_t> addresses;
    /// Every address is below this bound.
    std::uint64_t footprint = 0;

    std::uint64_t footprint_blocks(std::uint64_t block_size) const {
        return (footprint + block_size - 1) / block_size;
    }
};

struct miss_point {
    double fraction;
    std::uint64_t capacity_blocks;
    std::uint64_t misses;
    std::uint64_t accesses;
};

struct miss_report {
    std::uint64_t accesses = 0;
    std::uint64_t misses = 0;
    std::vector<miss_point> points;
};

/// Exact miss count of an LRU cache with config.capacity_blocks blocks.
/// Throws std::invalid_argument on an invalid config or an address outside
/// the declared footprint.
miss_report simulate(const cache_config& config, const access_trace& trace);

/// Capacity in blocks for a fraction of the trace footprint:
/// ceil(fraction * footprint / block_size), at least one block.
std::uint64_t capacity_for_fraction(double fraction, std::uint64_t footprint,
                                    std::uint64_t block_size);

/// Runs simulate at every fraction (each in (0, 1]). The aggregate
/// accesses/misses of the report belong to the last fraction.
miss_report sweep(std::uint64_t block_size, const access_trace& trace,
                  std::span<const double> fractions);

/// OpenMP form of sweep: the per-fraction simulations run concurrently.
/// Produces the same report as sweep.
miss_report sweep_parallel(std::uint64_t block_size, const access_trace& trace,
                           std::span<const double> fractions);

/// Newline-delimited decimal addresses. Blank lines are ignored; the
/// footprint becomes max address + 1.
access_trace read_trace(std::istream& in);
void write_trace(std::ostream& out, const access_trace& trace);

/// CSV with header "fraction,misses,accesses".
void write_report_csv(std::ostream& out, const miss_report& report);

} // namespace sfc
