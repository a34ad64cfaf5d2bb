#pragma once

#include <cstdint>

// Deterministic RNG used everywhere instead of <random> distributions:
// libstdc++/libc++ disagree on distribution algorithms, and reproducibility
// of emitted records across toolchains is part of the contract.

namespace rgl {

// splitmix64 finalizer (public-domain constants).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent stream seed for sub-task `index` of a master seed.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index));
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, n). Rejection from the top, no modulo bias.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// Exact Binomial(n, p) sample by CDF inversion.  Handles huge n with tiny p
// (n up to ~1e18) by splitting into chunks whose zero-probability stays
// representable; each chunk walks the pmf incrementally.
std::uint64_t binomial(std::uint64_t n, double p, SplitMix64& rng);

} // namespace rgl
