#pragma once

#include <cstdint>
#include <random>

namespace nkdet {

/// Seeded generator with a fixed bit-to-double mapping so that identical
/// seeds reproduce identical draws on every platform (the standard
/// distributions are implementation-defined; this is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace nkdet
