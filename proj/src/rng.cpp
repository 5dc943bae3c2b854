#include "ntnsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace ntnsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

RngStream::RngStream(std::uint64_t run_seed, std::string_view component_label)
{
    const std::uint64_t label_hash = fnv1a(component_label);
    state_ = splitmix64(splitmix64(run_seed) ^ label_hash);
    // Per-stream Weyl increment, forced odd so every stream walks a full
    // period of the state space.
    stream_ = splitmix64(label_hash ^ (run_seed * 0x9e3779b97f4a7c15ULL)) | 1ULL;
}

std::uint64_t RngStream::next_u64()
{
    state_ += stream_;
    return splitmix64(state_);
}

double RngStream::uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

std::uint64_t RngStream::uniform_int(std::uint64_t n)
{
    // Modulo bias is below 2^-53 for the n used here.
    return next_u64() % n;
}

bool RngStream::bernoulli(double p)
{
    return uniform() < p;
}

double RngStream::normal(double sigma)
{
    if (sigma <= 0.0) {
        return 0.0;
    }
    // Box-Muller, no cached second draw so the stream advances by exactly
    // two words per sample.
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace ntnsim
