#pragma once

#include "rgl/graph.hpp"
#include "rgl/probability.hpp"
#include "rgl/rng.hpp"
#include "rgl/search.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rgl {

// Independent vertex survival, one Bernoulli(p) draw per vertex in order.
std::vector<bool> sample_vertices(int n, double p, SplitMix64& rng);

// One sampled vertex set, measured against the acceptance thresholds:
// |H| <= beta * n and surviving classes >= (beta + gamma) * n.
struct SampleReport {
    int trial_index = 0;
    int h_size = 0;
    int survivors_single = 0;
    int survivors_matching2 = 0;
    int survivors_triangle = 0;
    int rainbow_edge_count = 0; // total surviving classes
    bool size_ok = false;
    bool surplus_ok = false;
    bool success = false;
    // Shortfalls when a condition fails (0 when it holds).
    double size_excess = 0.0;
    double surplus_shortfall = 0.0;
};

// Counts surviving classes of g inside H.  g must be reduced (only
// Single/Matching2/Triangle classes), else throws.
SampleReport evaluate_sample(const EdgeColoredGraph& g, const std::vector<bool>& in_h,
                             const SamplingParameters& params);

struct SamplerResult {
    bool success = false;
    std::optional<RainbowCycle> cycle;
    std::optional<int> cycle_length;
    SampleReport report;          // the successful trial, or the best near miss
    int tries_used = 0;
    bool input_was_reduced = false; // true when Star/Other classes were reduced away
    // Girth bound for the representative subgraph when its excess is >= 2.
    std::optional<double> length_bound;
};

// Repeats sample -> evaluate until a trial meets both thresholds, then
// extracts a short rainbow cycle from the representative subgraph of H.
// Star/Other classes are reduced away first (reported in the result).
// Trial t draws from the stream derive_stream(seed, t); the whole call is
// deterministic in (g, params, max_tries, seed).  On failure the report of
// the near miss with the most surviving classes is returned.
SamplerResult find_short_rainbow_cycle(const EdgeColoredGraph& g,
                                       const SamplingParameters& params, int max_tries,
                                       std::uint64_t seed);

} // namespace rgl
