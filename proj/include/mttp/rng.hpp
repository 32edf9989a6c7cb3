#pragma once

#include <cstdint>
#include <random>

namespace mttp {

/// Deterministic random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; the helpers below avoid the
/// library's distributions, whose algorithms vary between implementations,
/// so a seed reproduces the same run on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // reject the tail so every residue is equally likely
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

    int index(int size) { return static_cast<int>(below(static_cast<std::uint64_t>(size))); }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

  private:
    std::mt19937_64 engine_;
};

} // namespace mttp
