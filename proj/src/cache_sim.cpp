#include "sfc/cache_sim.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace sfc {

namespace {

constexpr std::uint64_t none = ~std::uint64_t{0};

// Intrusive recency list over dense block ids; head is most recent.
class lru_list {
public:
    explicit lru_list(std::uint64_t blocks) : prev_(blocks, none), next_(blocks, none),
                                              resident_(blocks, false) {}

    /// Touches `block`; returns true on a miss.
    bool access(std::uint64_t block, std::uint64_t capacity) {
        if (resident_[block]) {
            if (head_ != block) {
                unlink(block);
                push_front(block);
            }
            return false;
        }
        if (size_ == capacity) {
            const auto victim = tail_;
            unlink(victim);
            resident_[victim] = false;
            --size_;
        }
        push_front(block);
        resident_[block] = true;
        ++size_;
        return true;
    }

private:
    void unlink(std::uint64_t b) {
        const auto p = prev_[b];
        const auto n = next_[b];
        (p == none ? head_ : next_[p]) = n;
        (n == none ? tail_ : prev_[n]) = p;
    }

    void push_front(std::uint64_t b) {
        prev_[b] = none;
        next_[b] = head_;
        if (head_ != none) {
            prev_[head_] = b;
        } else {
            tail_ = b;
        }
        head_ = b;
    }

    std::vector<std::uint64_t> prev_;
    std::vector<std::uint64_t> next_;
    std::vector<bool> resident_;
    std::uint64_t head_ = none;
    std::uint64_t tail_ = none;
    std::uint64_t size_ = 0;
};

void check_config(const cache_config& c) {
    if (c.capacity_blocks == 0) {
        throw std::invalid_argument("cache capacity must be at least one block");
    }
    if (c.block_size == 0 || !std::has_single_bit(c.block_size)) {
        throw std::invalid_argument("block size must be a positive power of two");
    }
}

void check_fractions(std::span<const double> fractions) {
    for (double f : fractions) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw std::invalid_argument("capacity fraction " + std::to_string(f) +
                                        " outside (0, 1]");
        }
    }
}

miss_report finish(std::vector<miss_point> points, std::uint64_t accesses) {
    miss_report r;
    r.accesses = accesses;
    r.misses = points.empty() ? 0 : points.back().misses;
    r.points = std::move(points);
    return r;
}

} // namespace

miss_report simulate(const cache_config& config, const access_trace& trace) {
    check_config(config);
    const auto shift = static_cast<unsigned>(std::countr_zero(config.block_size));
    lru_list lru(trace.footprint_blocks(config.block_size));
    miss_report r;
    r.accesses = trace.addresses.size();
    for (auto a : trace.addresses) {
        if (a >= trace.footprint) {
            throw std::invalid_argument("address " + std::to_string(a) +
                                        " outside trace footprint " +
                                        std::to_string(trace.footprint));
        }
        r.misses += lru.access(a >> shift, config.capacity_blocks) ? 1 : 0;
    }
    return r;
}

std::uint64_t capacity_for_fraction(double fraction, std::uint64_t footprint,
                                    std::uint64_t block_size) {
    const auto blocks = static_cast<std::uint64_t>(
        std::ceil(fraction * static_cast<double>(footprint) / static_cast<double>(block_size)));
    return blocks == 0 ? 1 : blocks;
}

miss_report sweep(std::uint64_t block_size, const access_trace& trace,
                  std::span<const double> fractions) {
    check_fractions(fractions);
    std::vector<miss_point> points;
    for (double f : fractions) {
        const auto cap = capacity_for_fraction(f, trace.footprint, block_size);
        const auto r = simulate({cap, block_size}, trace);
        points.push_back({f, cap, r.misses, r.accesses});
    }
    return finish(std::move(points), trace.addresses.size());
}

miss_report sweep_parallel(std::uint64_t block_size, const access_trace& trace,
                           std::span<const double> fractions) {
    check_fractions(fractions);
    check_config({1, block_size});
    std::vector<miss_point> points(fractions.size());
    const auto count = static_cast<std::int64_t>(fractions.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < count; ++t) {
        const double f = fractions[static_cast<std::size_t>(t)];
        const auto cap = capacity_for_fraction(f, trace.footprint, block_size);
        const auto r = simulate({cap, block_size}, trace);
        points[static_cast<std::size_t>(t)] = {f, cap, r.misses, r.accesses};
    }
    return finish(std::move(points), trace.addresses.size());
}

access_trace read_trace(std::istream& in) {
    access_trace t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        const auto token = line.substr(first, last - first + 1);
        std::size_t used = 0;
        std::uint64_t value = 0;
        try {
            if (token.front() == '-') {
                throw std::invalid_argument("negative");
            }
            value = std::stoull(token, &used, 10);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            throw std::runtime_error("trace line " + std::to_string(lineno) +
                                     ": not a non-negative decimal address: " + token);
        }
        t.addresses.push_back(value);
        if (value >= t.footprint) {
            t.footprint = value + 1;
        }
    }
    return t;
}

void write_trace(std::ostream& out, const access_trace& trace) {
    for (auto a : trace.addresses) {
        out << a << '\n';
    }
}

void write_report_csv(std::ostream& out, const miss_report& report) {
    out << "fraction,misses,accesses\n";
    for (const auto& p : report.points) {
        out << p.fraction << ',' << p.misses << ',' << p.accesses << '\n';
    }
}

} // namespace sfc
