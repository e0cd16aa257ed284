#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace goodhart {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

/// splitmix64 finalizer: full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic per-stream seed: the first splitmix64 output of the
/// generator seeded with master_seed XOR (stream_id * golden gamma).
/// Pure and total on the 64-bit domain; wrapping arithmetic throughout.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id) noexcept {
    return mix64((master_seed ^ (stream_id * kGoldenGamma)) + kGoldenGamma);
}

/// Named, counter-based random stream (splitmix64). One stream per
/// (scenario, replicate, purpose); identical (master_seed, stream_id)
/// reproduces the identical sequence on every platform. All variates are
/// derived from next_u64 with explicit arithmetic: no std::*_distribution
/// is used anywhere, since those are implementation-defined.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : state_(master_seed ^ (stream_id * kGoldenGamma)) {}

    std::uint64_t next_u64() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Child stream keyed by purpose; does not advance this stream.
    RngStream fork(std::uint64_t purpose) const noexcept {
        return RngStream(mix64(state_ + kGoldenGamma), purpose);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1]; safe as a log() argument.
    double next_open() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * next_double();
    }

    /// Unbiased uniform integer in [0, n) by rejection; n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n) noexcept {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) noexcept { return next_double() < p; }

    /// Standard normal via Box-Muller; consumes exactly two words.
    double normal() noexcept {
        const double u1 = next_open();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double sd) noexcept { return mean + sd * normal(); }

  private:
    std::uint64_t state_;
};

} // namespace goodhart
