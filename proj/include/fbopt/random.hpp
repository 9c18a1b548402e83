#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace fbopt {

/**
 * SplitMix64 with counter-derived substreams. A substream is fully determined
 * by (seed, index), so work can be split across threads in any way and still
 * reproduce the sequential draws bit for bit.
 */
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
        return SplitMix64(mix(mix(seed) + 0x9e3779b97f4a7c15ULL * (index + 1)));
    }

    result_type operator()() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open_low() noexcept { return 1.0 - uniform(); }

    double exponential() noexcept { return -std::log(uniform_open_low()); }

private:
    std::uint64_t state_;
};

}  // namespace fbopt
