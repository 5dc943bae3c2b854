#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ntnsim {

// Counter-based generator giving one independent, reproducible stream per
// (run_seed, component_label) pair. Streams with distinct labels or seeds
// never share state.
class RngStream {
public:
    RngStream(std::uint64_t run_seed, std::string_view component_label);

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double uniform();

    // Uniform in [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n);

    bool bernoulli(double p);

    // Gaussian, mean 0, std sigma. sigma == 0 always yields 0.
    double normal(double sigma);

private:
    std::uint64_t state_;
    std::uint64_t stream_;
};

} // namespace ntnsim
