#include "rgl/constructions.hpp"
#include "rgl/ecg_io.hpp"
#include "rgl/experiments.hpp"
#include "rgl/probability.hpp"
#include "rgl/sampler.hpp"
#include "rgl/search.hpp"
#include "rgl/tuples.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace rgl;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

void emit_graph(const EdgeColoredGraph& g, const std::string& out_path) {
    if (out_path.empty())
        serialize_ecg(g, std::cout);
    else
        save_ecg_file(g, out_path);
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

void print_witness(const RainbowCycle& c) {
    std::cout << "witness:";
    for (Vertex v : c.vertices) std::cout << ' ' << v;
    std::cout << "\nwitness colors:";
    for (int col : c.colors) std::cout << ' ' << col;
    std::cout << "\n";
}

std::string census_line(const ClassCensus& c) {
    std::string s = "census: n=" + std::to_string(c.n_vertices);
    s += " singles=" + std::to_string(c.n_single);
    s += " matching2=" + std::to_string(c.n_matching2);
    s += " triangles=" + std::to_string(c.n_triangle);
    if (c.n_star) s += " stars=" + std::to_string(c.n_star);
    if (c.n_other) s += " other=" + std::to_string(c.n_other);
    s += " (alpha_effective " + format_double(c.alpha_effective()) + ")";
    return s;
}

std::string params_line(const SamplingParameters& p) {
    return "params: p=" + format_double(p.p) + " eps=" + format_double(p.epsilon) +
           " beta=" + format_double(p.beta) + " gamma=" + format_double(p.gamma);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-colored graphs: generators, rainbow girth search, sampling pipeline"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
    std::string format = "csv";
    int jobs = 1;
    app.add_option("--seed", seed, "master RNG seed")->capture_default_str();
    app.add_option("--out", out_path, "output path (stdout when absent)");
    app.add_option("--format", format, "data output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    int rc = 0;

    // gen: every generator emits ecg text.
    auto* gen = app.add_subcommand("gen", "generate a graph in ecg format");
    gen->require_subcommand(1);
    gen->fallthrough();

    auto* gen_star =
        gen->add_subcommand("star-extremal", "circulant star coloring, rainbow girth r+1");
    gen_star->fallthrough();
    int se_k = 0, se_r = 0;
    gen_star->add_option("--k", se_k, "edges per star")->required();
    gen_star->add_option("--r", se_r, "girth parameter, n = k*r + 1")->required();
    gen_star->callback([&] { emit_graph(star_extremal(se_k, se_r), out_path); });

    auto* gen_hb = gen->add_subcommand("half-barrier", "gadget chain with census (2m, m, 3m)");
    gen_hb->fallthrough();
    int hb_m = 0;
    gen_hb->add_option("--m", hb_m, "gadget count")->required();
    gen_hb->callback([&] {
        EdgeColoredGraph g = half_barrier(hb_m);
        emit_graph(g, out_path);
        if (g.n <= 14) {
            auto res = brute_force_rainbow_girth(g);
            std::cerr << "note: measured rainbow girth "
                      << (res.length ? std::to_string(*res.length) : "none")
                      << " vs the intended 2n/3 = " << 2 * g.n / 3
                      << "; each gadget admits a 3-cycle mixing triangle, matching and single"
                         " colors\n";
        } else {
            std::cerr << "note: each gadget admits a rainbow 3-cycle (triangle, matching and"
                         " single colors), so the intended 2n/3 girth is not met\n";
        }
    });

    auto* gen_rm = gen->add_subcommand("random-mixed", "random classes with a given census");
    gen_rm->fallthrough();
    int rm_n = 0;
    double rm_alpha = 0.0;
    MixedCounts rm_counts;
    gen_rm->add_option("--n", rm_n, "vertex and class count")->required();
    auto* rm_alpha_opt = gen_rm->add_option(
        "--alpha", rm_alpha, "matching/triangle share of classes, remainder singles");
    auto* rm_s = gen_rm->add_option("--singles", rm_counts.singles, "single-edge classes");
    auto* rm_m = gen_rm->add_option("--matching2s", rm_counts.matching2s, "2-matching classes");
    auto* rm_t = gen_rm->add_option("--triangles", rm_counts.triangles, "triangle classes");
    auto* rm_st = gen_rm->add_option("--stars", rm_counts.stars, "star classes");
    gen_rm->add_option("--star-size", rm_counts.star_size, "edges per star class")
        ->capture_default_str();
    for (auto* opt : {rm_s, rm_m, rm_t, rm_st}) rm_alpha_opt->excludes(opt);
    gen_rm->callback([&] {
        MixedCounts counts = rm_counts;
        if (rm_alpha_opt->count()) {
            int star_size = counts.star_size;
            counts = mixed_counts_for_alpha(rm_n, rm_alpha);
            counts.star_size = star_size;
        } else if (counts.singles + counts.matching2s + counts.triangles + counts.stars == 0) {
            throw std::invalid_argument("give --alpha or explicit class counts");
        }
        emit_graph(random_mixed(rm_n, counts, seed), out_path);
    });

    auto* gen_dg = gen->add_subcommand("digraph", "out-arc star image of a digon-free digraph");
    gen_dg->fallthrough();
    int dg_n = 0;
    std::vector<std::string> dg_arcs;
    gen_dg->add_option("--n", dg_n, "vertex count")->required();
    gen_dg->add_option("--arc", dg_arcs, "directed arc 'u,v' (repeatable)")->required();
    gen_dg->callback([&] {
        std::vector<std::pair<Vertex, Vertex>> arcs;
        for (const auto& s : dg_arcs) {
            const auto comma = s.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("arc '" + s + "' is not of the form u,v");
            arcs.emplace_back(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
        }
        emit_graph(digraph_to_edge_colored(make_digraph(dg_n, std::move(arcs))), out_path);
    });

    auto* gen_lb =
        gen->add_subcommand("lower-bound", "pruned random tuple family as color classes");
    gen_lb->fallthrough();
    int lb_n = 0;
    double lb_c = 0.25;
    gen_lb->add_option("--n", lb_n, "vertex count (>= 10)")->required();
    gen_lb->add_option("--c", lb_c, "prune cycles of length <= floor(c log2 n)")
        ->capture_default_str();
    gen_lb->callback([&] {
        const int max_len = static_cast<int>(std::floor(lb_c * std::log2(lb_n)));
        const TupleFamily raw = lower_bound_family(lb_n, seed);
        const PruneResult overlap = prune_overlaps(raw);
        const PruneResult cyc = prune_short_rainbow_cycles(overlap.family, max_len);
        emit_graph(realize_tuples(cyc.family), out_path);
        std::cerr << "family: raw " << raw.tuples.size() << ", overlap removed "
                  << overlap.removed << ", cycle removed " << cyc.removed << ", final "
                  << cyc.family.tuples.size() << "; no rainbow cycle of length <= " << max_len
                  << "\n";
    });

    // rgirth: exact bounded search, optionally the exhaustive oracle.
    auto* rgirth_cmd = app.add_subcommand("rgirth", "rainbow girth of an ecg file");
    rgirth_cmd->fallthrough();
    std::string rg_input;
    int rg_max_len = 0;
    bool rg_oracle = false, rg_witness = false;
    rgirth_cmd->add_option("--input", rg_input, "ecg file")->required()->check(CLI::ExistingFile);
    rgirth_cmd->add_option("--max-len", rg_max_len, "search bound (default ceil(8 log2 n))");
    rgirth_cmd->add_flag("--oracle", rg_oracle, "use the exhaustive oracle (n <= 14)");
    rgirth_cmd->add_flag("--witness", rg_witness, "print the cycle");
    rgirth_cmd->callback([&] {
        const EdgeColoredGraph g = load_ecg_file(rg_input);
        const RainbowGirthResult res = rg_oracle
                                           ? brute_force_rainbow_girth(g)
                                           : rainbow_girth_exact(
                                                 g, rg_max_len > 0 ? rg_max_len
                                                                   : default_rainbow_bound(g.n));
        if (res.length) {
            std::cout << "rainbow girth: " << *res.length << "\n";
            if (rg_witness && res.witness) print_witness(*res.witness);
        } else {
            std::cout << "no rainbow cycle of length <= " << res.exhausted_bound << "\n";
        }
    });

    // sample: one end-to-end pipeline run.
    auto* sample_cmd = app.add_subcommand("sample", "sampling pipeline on an ecg file");
    sample_cmd->fallthrough();
    std::string sm_input;
    double sm_p = 0.0, sm_eps = 0.0;
    int sm_tries = 64;
    bool sm_auto = false, sm_emit = false;
    sample_cmd->add_option("--input", sm_input, "ecg file")->required()->check(CLI::ExistingFile);
    auto* sm_p_opt = sample_cmd->add_option("--p", sm_p, "vertex survival probability");
    auto* sm_eps_opt = sample_cmd->add_option("--eps", sm_eps, "inequality slack");
    auto* sm_auto_opt =
        sample_cmd->add_flag("--auto-params", sm_auto, "grid-search (p, eps) from the census");
    sample_cmd->add_option("--tries", sm_tries, "sampling attempts")->capture_default_str();
    sample_cmd->add_flag("--emit-witness", sm_emit, "print the cycle");
    sm_p_opt->needs(sm_eps_opt);
    sm_eps_opt->needs(sm_p_opt);
    sm_auto_opt->excludes(sm_p_opt);
    sample_cmd->callback([&] {
        const EdgeColoredGraph g = load_ecg_file(sm_input);
        const ClassCensus raw_census = census(g);
        if (raw_census.n_star > 0 || raw_census.n_other > 0)
            std::cerr << "notice: reducing " << raw_census.n_star + raw_census.n_other
                      << " star/other classes to singles/matchings\n";
        const ClassCensus cen = census(reduce_classes(g));

        SamplingParameters params;
        if (sm_auto) {
            const auto found = find_sampling_parameters(cen);
            if (!found) {
                std::cerr << "no feasible (p, eps) on the default grid for this census\n";
                rc = kExitInfeasible;
                return;
            }
            params = *found;
        } else {
            if (!sm_p_opt->count())
                throw CLI::ValidationError("sample", "give --auto-params or both --p and --eps");
            params.p = sm_p;
            params.epsilon = sm_eps;
            params.beta = (1 + sm_eps) * sm_p;
            params.gamma = sampling_margin(cen, sm_p, sm_eps);
            if (params.gamma <= 0.0) {
                std::cerr << "the sampling inequality fails at (p, eps): margin "
                          << format_double(params.gamma) << "\n";
                rc = kExitInfeasible;
                return;
            }
        }
        std::cout << params_line(params) << "\n";

        const SamplerResult res = find_short_rainbow_cycle(g, params, sm_tries, seed);
        if (!res.success) {
            std::cerr << "no success in " << res.tries_used << " tries; best near miss: |H| = "
                      << res.report.h_size << ", surviving classes "
                      << res.report.rainbow_edge_count << ", size excess "
                      << format_double(res.report.size_excess) << ", surplus shortfall "
                      << format_double(res.report.surplus_shortfall) << "\n";
            rc = kExitInfeasible;
            return;
        }
        std::cout << "success on trial " << res.report.trial_index << ": cycle length "
                  << *res.cycle_length << " (|H| = " << res.report.h_size
                  << ", surviving classes " << res.report.rainbow_edge_count << ")\n";
        if (res.length_bound)
            std::cout << "length bound: " << format_double(*res.length_bound) << "\n";
        if (sm_emit && res.cycle) print_witness(*res.cycle);
    });

    // bound: evaluate the sparse girth bound.
    auto* bound_cmd = app.add_subcommand("bound", "girth bound for n vertices and n + k edges");
    bound_cmd->fallthrough();
    int b_n = 0, b_k = 0;
    bound_cmd->add_option("--n", b_n, "vertex count (>= 4)")->required();
    bound_cmd->add_option("--k", b_k, "edge excess (>= 2)")->required();
    bound_cmd->callback([&] {
        const double value = bs_bound(b_n, b_k);
        std::cout << "bs_bound(" << b_n << ", " << b_k << ") = " << format_double(value)
                  << "\n";
    });

    // verify: closed forms against enumeration.
    auto* verify_cmd =
        app.add_subcommand("verify", "closed-form survival polynomials vs enumeration");
    verify_cmd->fallthrough();
    verify_cmd->callback([&] {
        bool ok = true;
        for (const auto& check : verify_closed_forms()) {
            std::cout << check.name << ": max|err| = " << format_double(check.max_abs_error)
                      << "\n";
            if (check.max_abs_error > 1e-12) ok = false;
        }
        if (!ok) {
            std::cout << "mismatch above 1e-12\n";
            rc = kExitValidation;
        } else {
            std::cout << "all forms within 1e-12\n";
        }
    });

    // params: census -> grid search.
    auto* params_cmd = app.add_subcommand("params", "sampling parameters for an ecg file");
    params_cmd->fallthrough();
    std::string pr_input;
    params_cmd->add_option("--input", pr_input, "ecg file")->required()->check(CLI::ExistingFile);
    params_cmd->callback([&] {
        const EdgeColoredGraph g = load_ecg_file(pr_input);
        const ClassCensus cen = census(reduce_classes(g));
        std::cout << census_line(cen) << "\n";
        const auto found = find_sampling_parameters(cen);
        if (!found) {
            std::cout << "no feasible (p, eps) on the default grid\n";
            rc = kExitInfeasible;
            return;
        }
        std::cout << params_line(*found) << "\n";
    });

    // exp: batch sampling trials.
    auto* exp_cmd = app.add_subcommand("exp", "batch random-mixed sampling trials");
    exp_cmd->fallthrough();
    ExpConfig exp_cfg;
    exp_cmd->add_option("--n", exp_cfg.n_values, "graph sizes")->required()->delimiter(',');
    exp_cmd->add_option("--alpha", exp_cfg.alphas, "matching/triangle densities")
        ->delimiter(',')
        ->capture_default_str();
    exp_cmd->add_option("--trials", exp_cfg.trials_per_cell, "trials per (n, alpha) cell")
        ->capture_default_str();
    exp_cmd->add_option("--tries", exp_cfg.tries_per_trial, "sampling attempts per trial")
        ->capture_default_str();
    exp_cmd->add_option("--construction", exp_cfg.construction, "instance generator")
        ->capture_default_str();
    exp_cmd->add_flag("--with-oracle", exp_cfg.with_oracle,
                      "record the exhaustive rainbow girth when n <= 14");
    exp_cmd->add_flag("--timing", exp_cfg.timing,
                      "record wall-clock per trial (breaks byte-identical reruns)");
    exp_cmd->callback([&] {
        exp_cfg.master_seed = seed;
        exp_cfg.jobs = jobs;
        const auto records = run_trials(exp_cfg);

        std::optional<FitResult> fit;
        try {
            fit = fit_log_constant(records);
        } catch (const std::invalid_argument&) {
        }
        write_text(format == "json" ? to_json(exp_cfg, records, fit) : to_csv(records),
                   out_path);

        std::map<std::pair<int, double>, std::pair<int, int>> cells;
        for (const auto& r : records) {
            auto& cell = cells[{r.n, r.alpha_effective}];
            cell.second += 1;
            cell.first += r.success ? 1 : 0;
        }
        for (const auto& [key, counts] : cells)
            std::cerr << "n=" << key.first << " alpha_effective=" << format_double(key.second)
                      << ": " << counts.first << "/" << counts.second << " successes\n";
        // Success rate is expected to rise with alpha; flag dips, don't fail.
        std::map<int, double> last_rate;
        for (const auto& [key, counts] : cells) {
            const double rate =
                counts.second ? static_cast<double>(counts.first) / counts.second : 0.0;
            const auto it = last_rate.find(key.first);
            if (it != last_rate.end() && rate < it->second)
                std::cerr << "note: success rate dips at n=" << key.first
                          << " alpha_effective=" << format_double(key.second) << "\n";
            last_rate[key.first] = rate;
        }
        if (fit)
            std::cerr << "fit: c_hat " << format_double(fit->c_hat) << ", intercept "
                      << format_double(fit->intercept) << ", residual rms "
                      << format_double(fit->residual_rms) << " over " << fit->points
                      << " points\n";
        else
            std::cerr << "fit: skipped (need >= 3 successes over >= 3 distinct n)\n";
    });

    // lower-bound: batch tuple family runs.
    auto* lbe_cmd = app.add_subcommand("lower-bound", "batch tuple family construction");
    lbe_cmd->fallthrough();
    LowerBoundConfig lbe_cfg;
    lbe_cmd->add_option("--n", lbe_cfg.n_values, "vertex counts")->required()->delimiter(',');
    lbe_cmd->add_option("--c", lbe_cfg.c, "prune length constant")->capture_default_str();
    lbe_cmd->add_option("--seeds", lbe_cfg.seeds_per_n, "runs per n")->capture_default_str();
    lbe_cmd->add_flag("--timing", lbe_cfg.timing, "record wall-clock per run");
    lbe_cmd->callback([&] {
        lbe_cfg.master_seed = seed;
        lbe_cfg.jobs = jobs;
        const auto records = lower_bound_experiment(lbe_cfg);
        write_text(format == "json" ? to_json(lbe_cfg, records) : to_csv(records), out_path);

        std::map<int, std::pair<int, int>> final_at_least_n;
        bool all_certified = true, all_disjoint = true;
        for (const auto& r : records) {
            auto& cell = final_at_least_n[r.n];
            cell.second += 1;
            cell.first += r.final_size >= r.n ? 1 : 0;
            all_certified = all_certified && r.certified_absent;
            all_disjoint = all_disjoint && r.intersections_ok;
        }
        for (const auto& [n, counts] : final_at_least_n)
            std::cerr << "n=" << n << ": final size >= n in " << counts.first << "/"
                      << counts.second << " runs\n";
        std::cerr << (all_certified ? "all runs certified cycle-free up to the bound"
                                    : "WARNING: some runs kept a short rainbow cycle")
                  << "; "
                  << (all_disjoint ? "all pairwise intersections <= 1"
                                   : "WARNING: an intersection above 1 slipped through")
                  << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const rgl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return rc;
}
