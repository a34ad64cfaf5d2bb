#include "rgl/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rgl {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

namespace {

// Inversion for a chunk small enough that (1-p)^n does not underflow.
std::uint64_t binomial_inversion(std::uint64_t n, double p, SplitMix64& rng) {
    const double q = 1.0 - p;
    double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
    double cdf = pmf;
    const double odds = p / q;
    const double u = rng.next_double();
    std::uint64_t k = 0;
    while (u > cdf && k < n) {
        pmf *= odds * static_cast<double>(n - k) / static_cast<double>(k + 1);
        cdf += pmf;
        ++k;
        if (pmf < 1e-320) break; // far right tail, pmf dead
    }
    return k;
}

} // namespace

std::uint64_t binomial(std::uint64_t n, double p, SplitMix64& rng) {
    if (!(p >= 0.0) || !(p <= 1.0)) throw std::invalid_argument("binomial: p outside [0,1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;

    // Keep n_chunk * -log1p(-p) <= 300 so exp() in the chunk stays normal.
    const double lambda_per_trial = -std::log1p(-p);
    std::uint64_t max_chunk = n;
    if (lambda_per_trial * static_cast<double>(n) > 300.0) {
        max_chunk = static_cast<std::uint64_t>(300.0 / lambda_per_trial);
        if (max_chunk == 0) max_chunk = 1;
    }

    std::uint64_t total = 0;
    std::uint64_t remaining = n;
    while (remaining > 0) {
        const std::uint64_t chunk = remaining < max_chunk ? remaining : max_chunk;
        total += binomial_inversion(chunk, p, rng);
        remaining -= chunk;
    }
    return total;
}

} // namespace rgl
