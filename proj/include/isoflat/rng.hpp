#pragma once

#include <cstdint>
#include <random>

namespace isoflat {

/// Seeded random stream with a fixed mapping from integers to doubles, so
/// identical seeds give identical samples on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Modulo bias is irrelevant for sampling mesh nodes (n << 2^64).
        return gen_() % n;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace isoflat
