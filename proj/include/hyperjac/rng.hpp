#pragma once

#include <cstdint>

namespace hyperjac {

// Deterministic 64-bit generator (splitmix64, Steele/Lea/Flood constants).
// The same seed yields the same stream on every platform, so every seeded
// report produced by this library is reproducible bit for bit.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, n), n >= 1, unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    bool coin() { return (next() & 1) != 0; }

    // Independent child stream seeded from this one.
    SplitMix64 fork() { return SplitMix64(next()); }

  private:
    std::uint64_t state_;
};

}  // namespace hyperjac
