#pragma once

#include <cmath>
#include <cstdint>

namespace ntnsim {

// Simulation clock in integer nanoseconds. Integer time gives exact
// event-ordering and tie-breaking.
using TimeNs = std::int64_t;

constexpr TimeNs kNsPerSec = 1'000'000'000;
constexpr TimeNs kNsPerMs = 1'000'000;

inline TimeNs seconds_to_ns(double s) { return static_cast<TimeNs>(std::llround(s * 1e9)); }
inline TimeNs ms_to_ns(double ms) { return static_cast<TimeNs>(std::llround(ms * 1e6)); }
inline double ns_to_seconds(TimeNs t) { return static_cast<double>(t) * 1e-9; }

} // namespace ntnsim
