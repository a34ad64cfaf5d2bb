#include "rgl/experiments.hpp"

#include "rgl/constructions.hpp"
#include "rgl/probability.hpp"
#include "rgl/rng.hpp"
#include "rgl/sampler.hpp"
#include "rgl/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace rgl {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

namespace {

std::int64_t elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// Deterministic parallel map over [0, total): worker w handles w, w+jobs, ...
template <typename Fn>
void parallel_for(int total, int jobs, Fn&& fn) {
    jobs = std::max(1, std::min(jobs, total));
    if (jobs == 1) {
        for (int i = 0; i < total; ++i) fn(i);
        return;
    }
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            try {
                for (int i = w; i < total; i += jobs) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace

std::vector<TrialRecord> run_trials(const ExpConfig& cfg) {
    if (cfg.construction != "random-mixed")
        throw std::invalid_argument("run_trials: unknown construction '" + cfg.construction + "'");
    if (cfg.n_values.empty()) throw std::invalid_argument("run_trials: no n values");
    if (cfg.alphas.empty()) throw std::invalid_argument("run_trials: no alpha values");
    if (cfg.trials_per_cell < 0) throw std::invalid_argument("run_trials: negative trial count");
    if (cfg.tries_per_trial < 1) throw std::invalid_argument("run_trials: tries_per_trial < 1");

    struct Cell {
        int n;
        double alpha;
        int trial;
    };
    std::vector<Cell> cells;
    for (int n : cfg.n_values)
        for (double alpha : cfg.alphas)
            for (int t = 0; t < cfg.trials_per_cell; ++t) cells.push_back({n, alpha, t});

    std::vector<TrialRecord> records(cells.size());
    parallel_for(static_cast<int>(cells.size()), cfg.jobs, [&](int idx) {
        const Cell& cell = cells[static_cast<std::size_t>(idx)];
        const auto t0 = std::chrono::steady_clock::now();

        TrialRecord rec;
        rec.seed = derive_stream(cfg.master_seed, static_cast<std::uint64_t>(idx));
        rec.n = cell.n;
        rec.construction = cfg.construction;

        EdgeColoredGraph g = random_mixed(cell.n, mixed_counts_for_alpha(cell.n, cell.alpha),
                                          derive_stream(rec.seed, 0));
        ClassCensus cen = census(g);
        rec.alpha_effective = cen.alpha_effective();

        auto params = find_sampling_parameters(cen);
        if (!params) {
            std::ostringstream os;
            os << "no sampling parameters satisfy the inequality for n=" << cell.n
               << " alpha=" << cell.alpha;
            throw InfeasibleError(os.str());
        }
        rec.p = params->p;
        rec.epsilon = params->epsilon;

        SamplerResult res =
            find_short_rainbow_cycle(g, *params, cfg.tries_per_trial, derive_stream(rec.seed, 1));
        rec.success = res.success;
        rec.h_size = res.report.h_size;
        rec.rainbow_edge_count = res.report.rainbow_edge_count;
        if (res.cycle_length) rec.cycle_length = res.cycle_length;

        if (cfg.with_oracle && cell.n <= 14) {
            auto oracle = brute_force_rainbow_girth(g);
            if (oracle.length) rec.oracle_length = oracle.length;
        }

        if (cfg.timing) rec.elapsed_ms = elapsed_ms_since(t0);
        records[static_cast<std::size_t>(idx)] = std::move(rec);
    });
    return records;
}

FitResult fit_log_constant(const std::vector<TrialRecord>& records) {
    std::vector<std::pair<double, double>> pts; // (log2 n, length)
    std::unordered_set<int> distinct_n;
    for (const auto& r : records)
        if (r.success && r.cycle_length) {
            pts.emplace_back(std::log2(static_cast<double>(r.n)),
                             static_cast<double>(*r.cycle_length));
            distinct_n.insert(r.n);
        }
    if (pts.size() < 3 || distinct_n.size() < 3)
        throw std::invalid_argument(
            "fit_log_constant: need >= 3 successful trials over >= 3 distinct n");

    const double m = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    if (denom <= 0)
        throw std::invalid_argument("fit_log_constant: degenerate design (equal n everywhere)");

    FitResult fit;
    fit.c_hat = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.c_hat * sx) / m;
    double ss = 0;
    for (auto [x, y] : pts) {
        const double r = y - (fit.c_hat * x + fit.intercept);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / m);
    fit.points = static_cast<int>(pts.size());
    return fit;
}

namespace {

bool pairwise_intersections_ok(const TupleFamily& fam) {
    std::unordered_set<std::uint64_t> pairs;
    for (const auto& t : fam.tuples)
        for (std::size_t i = 0; i < t.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < t.vertices.size(); ++j) {
                std::uint64_t key =
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.vertices[i])) << 32) |
                    static_cast<std::uint32_t>(t.vertices[j]);
                if (!pairs.insert(key).second) return false;
            }
    return true;
}

} // namespace

std::vector<LowerBoundRecord> lower_bound_experiment(const LowerBoundConfig& cfg) {
    if (cfg.n_values.empty()) throw std::invalid_argument("lower_bound_experiment: no n values");
    if (cfg.seeds_per_n < 1) throw std::invalid_argument("lower_bound_experiment: seeds_per_n < 1");
    if (!(cfg.c > 0.0)) throw std::invalid_argument("lower_bound_experiment: c must be positive");

    struct Cell {
        int n;
        int seed_index;
    };
    std::vector<Cell> cells;
    for (int n : cfg.n_values)
        for (int s = 0; s < cfg.seeds_per_n; ++s) cells.push_back({n, s});

    std::vector<LowerBoundRecord> records(cells.size());
    parallel_for(static_cast<int>(cells.size()), cfg.jobs, [&](int idx) {
        const Cell& cell = cells[static_cast<std::size_t>(idx)];
        const auto t0 = std::chrono::steady_clock::now();

        LowerBoundRecord rec;
        rec.n = cell.n;
        rec.seed = derive_stream(cfg.master_seed, static_cast<std::uint64_t>(idx));
        rec.max_len =
            static_cast<int>(std::floor(cfg.c * std::log2(static_cast<double>(cell.n))));

        TupleFamily raw = lower_bound_family(cell.n, rec.seed);
        rec.raw_size = static_cast<int>(raw.tuples.size());

        PruneResult overlap = prune_overlaps(raw);
        rec.overlap_removed = overlap.removed;

        PruneResult cyc = prune_short_rainbow_cycles(overlap.family, rec.max_len);
        rec.cycle_removed = cyc.removed;
        rec.final_size = static_cast<int>(cyc.family.tuples.size());

        rec.intersections_ok = pairwise_intersections_ok(cyc.family);
        if (rec.max_len < 3) {
            rec.certified_absent = true; // no simple cycle is shorter than 3
        } else {
            EdgeColoredGraph realized = realize_tuples(cyc.family);
            rec.certified_absent = !rainbow_girth_exact(realized, rec.max_len).length.has_value();
        }

        if (cfg.timing) rec.elapsed_ms = elapsed_ms_since(t0);
        records[static_cast<std::size_t>(idx)] = rec;
    });
    return records;
}

namespace {

constexpr const char* kTrialHeader =
    "seed,n,construction,alpha_effective,p,epsilon,outcome,h_size,"
    "rainbow_edge_count,cycle_length,oracle_length,elapsed_ms";

constexpr const char* kLowerBoundHeader =
    "n,seed,raw_size,overlap_removed,cycle_removed,final_size,max_len,"
    "certified_absent,intersections_ok,elapsed_ms";

} // namespace

std::string to_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream os;
    os << kTrialHeader << "\n";
    for (const auto& r : records) {
        os << r.seed << "," << r.n << "," << r.construction << ","
           << format_double(r.alpha_effective) << "," << format_double(r.p) << ","
           << format_double(r.epsilon) << "," << (r.success ? "success" : "fail") << ","
           << r.h_size << "," << r.rainbow_edge_count << ",";
        if (r.cycle_length) os << *r.cycle_length;
        os << ",";
        if (r.oracle_length) os << *r.oracle_length;
        os << "," << r.elapsed_ms << "\n";
    }
    return os.str();
}

std::string to_csv(const std::vector<LowerBoundRecord>& records) {
    std::ostringstream os;
    os << kLowerBoundHeader << "\n";
    for (const auto& r : records) {
        os << r.n << "," << r.seed << "," << r.raw_size << "," << r.overlap_removed << ","
           << r.cycle_removed << "," << r.final_size << "," << r.max_len << ","
           << (r.certified_absent ? "true" : "false") << ","
           << (r.intersections_ok ? "true" : "false") << "," << r.elapsed_ms << "\n";
    }
    return os.str();
}

namespace {

nlohmann::json record_to_json(const TrialRecord& r) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["construction"] = r.construction;
    j["alpha_effective"] = r.alpha_effective;
    j["p"] = r.p;
    j["epsilon"] = r.epsilon;
    j["outcome"] = r.success ? "success" : "fail";
    j["h_size"] = r.h_size;
    j["rainbow_edge_count"] = r.rainbow_edge_count;
    j["cycle_length"] = r.cycle_length ? nlohmann::json(*r.cycle_length) : nlohmann::json();
    j["oracle_length"] = r.oracle_length ? nlohmann::json(*r.oracle_length) : nlohmann::json();
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace

std::string to_json(const ExpConfig& cfg, const std::vector<TrialRecord>& records,
                    const std::optional<FitResult>& fit) {
    nlohmann::json j;
    j["config"] = {{"construction", cfg.construction},
                   {"n_values", cfg.n_values},
                   {"alphas", cfg.alphas},
                   {"trials_per_cell", cfg.trials_per_cell},
                   {"tries_per_trial", cfg.tries_per_trial},
                   {"master_seed", cfg.master_seed},
                   {"with_oracle", cfg.with_oracle},
                   {"timing", cfg.timing}};
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) j["records"].push_back(record_to_json(r));
    if (fit)
        j["fit"] = {{"c_hat", fit->c_hat},
                    {"intercept", fit->intercept},
                    {"residual_rms", fit->residual_rms},
                    {"points", fit->points}};
    return j.dump(2) + "\n";
}

std::string to_json(const LowerBoundConfig& cfg, const std::vector<LowerBoundRecord>& records) {
    nlohmann::json j;
    j["config"] = {{"n_values", cfg.n_values},
                   {"c", cfg.c},
                   {"seeds_per_n", cfg.seeds_per_n},
                   {"master_seed", cfg.master_seed},
                   {"timing", cfg.timing}};
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json rec;
        rec["n"] = r.n;
        rec["seed"] = r.seed;
        rec["raw_size"] = r.raw_size;
        rec["overlap_removed"] = r.overlap_removed;
        rec["cycle_removed"] = r.cycle_removed;
        rec["final_size"] = r.final_size;
        rec["max_len"] = r.max_len;
        rec["certified_absent"] = r.certified_absent;
        rec["intersections_ok"] = r.intersections_ok;
        rec["elapsed_ms"] = r.elapsed_ms;
        j["records"].push_back(rec);
    }
    return j.dump(2) + "\n";
}

} // namespace rgl
