#include "rgl/sampler.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgl {

std::vector<bool> sample_vertices(int n, double p, SplitMix64& rng) {
    if (n < 0) throw std::invalid_argument("sample_vertices: negative n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_vertices: p outside [0,1]");
    std::vector<bool> in_h(n);
    for (int i = 0; i < n; ++i) in_h[i] = rng.bernoulli(p);
    return in_h;
}

SampleReport evaluate_sample(const EdgeColoredGraph& g, const std::vector<bool>& in_h,
                             const SamplingParameters& params) {
    if (static_cast<int>(in_h.size()) != g.n)
        throw std::invalid_argument("evaluate_sample: membership size != n");

    SampleReport r;
    for (int i = 0; i < g.n; ++i)
        if (in_h[i]) ++r.h_size;

    for (const auto& c : g.classes) {
        bool survives = false;
        for (const Edge& e : c.edges)
            if (in_h[e.u] && in_h[e.v]) { survives = true; break; }
        if (!survives) continue;
        switch (c.kind) {
            case ClassKind::Single: ++r.survivors_single; break;
            case ClassKind::Matching2: ++r.survivors_matching2; break;
            case ClassKind::Triangle: ++r.survivors_triangle; break;
            case ClassKind::Star:
            case ClassKind::Other:
                throw std::invalid_argument("evaluate_sample: reduce Star/Other classes first");
        }
    }
    r.rainbow_edge_count = r.survivors_single + r.survivors_matching2 + r.survivors_triangle;

    const double nd = static_cast<double>(g.n);
    const double size_cap = params.beta * nd;
    const double surplus_need = (params.beta + params.gamma) * nd;
    r.size_ok = static_cast<double>(r.h_size) <= size_cap;
    r.surplus_ok = static_cast<double>(r.rainbow_edge_count) >= surplus_need;
    r.success = r.size_ok && r.surplus_ok;
    if (!r.size_ok) r.size_excess = static_cast<double>(r.h_size) - size_cap;
    if (!r.surplus_ok) r.surplus_shortfall = surplus_need - static_cast<double>(r.rainbow_edge_count);
    return r;
}

SamplerResult find_short_rainbow_cycle(const EdgeColoredGraph& g,
                                       const SamplingParameters& params, int max_tries,
                                       std::uint64_t seed) {
    if (max_tries < 1) throw std::invalid_argument("find_short_rainbow_cycle: max_tries < 1");
    if (g.n < 1) throw std::invalid_argument("find_short_rainbow_cycle: empty graph");

    SamplerResult out;
    const EdgeColoredGraph* work = &g;
    EdgeColoredGraph reduced;
    ClassCensus cen = census(g);
    if (cen.n_star > 0 || cen.n_other > 0) {
        reduced = reduce_classes(g);
        work = &reduced;
        out.input_was_reduced = true;
    }

    bool have_near_miss = false;
    for (int t = 0; t < max_tries; ++t) {
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t)));
        std::vector<bool> in_h = sample_vertices(work->n, params.p, rng);
        SampleReport rep = evaluate_sample(*work, in_h, params);
        rep.trial_index = t;
        out.tries_used = t + 1;

        if (!rep.success) {
            if (!have_near_miss || rep.rainbow_edge_count > out.report.rainbow_edge_count) {
                out.report = rep;
                have_near_miss = true;
            }
            continue;
        }

        RepresentativeSubgraph rep_sub = representative_subgraph(*work, in_h);
        GirthResult gr = girth(rep_sub.graph);
        if (!gr.length)
            throw std::logic_error("find_short_rainbow_cycle: surplus edges but no cycle");

        RainbowCycle cycle;
        cycle.vertices = gr.witness;
        const std::size_t l = cycle.vertices.size();
        cycle.colors.reserve(l);
        for (std::size_t i = 0; i < l; ++i) {
            Edge e = make_edge(cycle.vertices[i], cycle.vertices[(i + 1) % l]);
            auto col = rep_sub.color_of(e);
            if (!col) throw std::logic_error("find_short_rainbow_cycle: witness edge uncolored");
            cycle.colors.push_back(*col);
        }
        if (!verify_rainbow(*work, cycle))
            throw std::logic_error("find_short_rainbow_cycle: witness failed verification");

        const int excess = static_cast<int>(rep_sub.graph.edges.size()) - rep.h_size;
        if (rep.h_size >= 4 && excess >= 2) out.length_bound = bs_bound(rep.h_size, excess);

        out.success = true;
        out.cycle = std::move(cycle);
        out.cycle_length = *gr.length;
        out.report = rep;
        return out;
    }
    return out;
}

} // namespace rgl
