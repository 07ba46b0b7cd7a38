#pragma once

#include <cstdint>
#include <random>

namespace hocc {

// Portable seeded generator. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the draws below avoid the
// implementation-defined std::*_distribution classes so a seed produces the
// same graph with every standard library.
//
// Stream split: the generator for ensemble member i of base seed s is seeded
// with derive_seed(s, i) = splitmix64(s ^ splitmix64(i + 1)).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, bound), bound > 0. Multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 1));
}

}  // namespace hocc
