#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace arith {

/// Knobs shared by the enumeration entry points. Deadlines are checked
/// cooperatively at node granularity and raise TimeCapExceeded.
struct EnumOptions {
    int threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Search counters reported alongside enumeration results.
struct EnumStats {
    std::size_t start_points = 0;
    std::size_t find_nodes = 0;
    std::size_t completion_nodes = 0;
    double wall_ms = 0.0;
};

inline constexpr std::uint64_t kDefaultBoxCap = 100'000'000ULL;

} // namespace arith
