#include "sfc/lindenmayer.hpp"

namespace sfc {

std::uint64_t count_recursive_calls(unsigned level) {
    return generate_recursive(level, [](std::uint32_t, std::uint32_t, order_value) {}).calls;
}

} // namespace sfc
