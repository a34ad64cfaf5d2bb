#pragma once

#include "rgl/graph.hpp"
#include "rgl/tuples.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgl {

// Master seed used by the CLI when --seed is absent.
inline constexpr std::uint64_t kDefaultSeed = 20250601;

// Raised when an experiment cannot start (no grid point satisfies the
// sampling inequality for the requested census).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrialRecord {
    std::uint64_t seed = 0;       // per-trial derived seed
    int n = 0;
    std::string construction;
    double alpha_effective = 0.0;
    double p = 0.0;
    double epsilon = 0.0;
    bool success = false;
    int h_size = 0;
    int rainbow_edge_count = 0;
    std::optional<int> cycle_length;
    std::optional<int> oracle_length; // brute-force rainbow girth, small n only
    std::int64_t elapsed_ms = 0;      // 0 unless timing was requested
};

struct ExpConfig {
    std::string construction = "random-mixed";
    std::vector<int> n_values;
    std::vector<double> alphas = {0.75};
    int trials_per_cell = 100;
    int tries_per_trial = 20;
    std::uint64_t master_seed = kDefaultSeed;
    bool with_oracle = false; // fill oracle_length when n <= 14
    bool timing = false;      // measure elapsed_ms (breaks byte-identical reruns)
    int jobs = 1;
};

// One sampler call per (n, alpha, trial) cell entry, fresh random instance
// each time.  Output order and content are deterministic in the config;
// jobs only changes wall-clock time.
std::vector<TrialRecord> run_trials(const ExpConfig& cfg);

// Least squares fit cycle_length = c_hat * log2(n) + intercept over the
// successful trials.  Requires >= 3 such trials spanning >= 3 distinct n.
struct FitResult {
    double c_hat = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    int points = 0;
};

FitResult fit_log_constant(const std::vector<TrialRecord>& records);

struct LowerBoundRecord {
    int n = 0;
    std::uint64_t seed = 0;
    int raw_size = 0;
    int overlap_removed = 0;
    int cycle_removed = 0;
    int final_size = 0;
    int max_len = 0;             // floor(c * log2 n)
    bool certified_absent = false; // no rainbow cycle of length <= max_len
    bool intersections_ok = false; // re-checked pairwise overlaps <= 1
    std::int64_t elapsed_ms = 0;
};

struct LowerBoundConfig {
    std::vector<int> n_values;
    double c = 0.25;
    int seeds_per_n = 50;
    std::uint64_t master_seed = kDefaultSeed;
    bool timing = false;
    int jobs = 1;
};

std::vector<LowerBoundRecord> lower_bound_experiment(const LowerBoundConfig& cfg);

// CSV with a fixed header; floats use %.6g, absent optionals are empty
// fields, lines end with \n.
std::string to_csv(const std::vector<TrialRecord>& records);
std::string to_csv(const std::vector<LowerBoundRecord>& records);

// {"config": ..., "records": [...], "fit": ...}; fit omitted when null.
std::string to_json(const ExpConfig& cfg, const std::vector<TrialRecord>& records,
                    const std::optional<FitResult>& fit);
std::string to_json(const LowerBoundConfig& cfg, const std::vector<LowerBoundRecord>& records);

// %.6g rendering shared by the CSV writers and the CLI.
std::string format_double(double x);

} // namespace rgl
