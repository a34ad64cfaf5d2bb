#include "rgl/tuples.hpp"

#include "rgl/rng.hpp"
#include "rgl/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace rgl {

namespace {

std::uint64_t choose(std::uint64_t n, int k) {
    unsigned __int128 num = 1;
    for (int i = 0; i < k; ++i) num *= n - static_cast<std::uint64_t>(i);
    for (int i = 2; i <= k; ++i) num /= static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(num);
}

// Uniform sorted k-subset of [n] (Floyd's algorithm).
std::vector<Vertex> sample_subset(int n, int k, SplitMix64& rng) {
    std::vector<Vertex> out;
    out.reserve(k);
    for (int i = n - k; i < n; ++i) {
        Vertex t = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(i) + 1));
        if (std::find(out.begin(), out.end(), t) != out.end())
            out.push_back(static_cast<Vertex>(i));
        else
            out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

double expected_family_size(int n) {
    const double p = std::min(1.0, 144.0 / (static_cast<double>(n) * n * n));
    return (static_cast<double>(choose(n, 2)) + static_cast<double>(choose(n, 3)) +
            static_cast<double>(choose(n, 4))) *
           p;
}

TupleFamily lower_bound_family(int n, std::uint64_t seed) {
    if (n < 10) throw std::invalid_argument("lower_bound_family: n must be >= 10");
    const double p = std::min(1.0, 144.0 / (static_cast<double>(n) * n * n));

    SplitMix64 rng(mix64(seed));
    TupleFamily fam;
    fam.n = n;
    fam.stage = FamilyStage::Raw;

    for (int arity = 2; arity <= 4; ++arity) {
        const std::uint64_t total = choose(static_cast<std::uint64_t>(n), arity);
        const std::uint64_t want = binomial(total, p, rng);
        std::set<std::vector<Vertex>> picked;
        while (picked.size() < want) picked.insert(sample_subset(n, arity, rng));
        for (auto& vs : picked) fam.tuples.push_back(VertexTuple{vs});
    }
    std::sort(fam.tuples.begin(), fam.tuples.end());
    return fam;
}

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

} // namespace

PruneResult prune_overlaps(const TupleFamily& f) {
    if (f.stage != FamilyStage::Raw)
        throw std::invalid_argument("prune_overlaps: family already pruned");

    std::vector<VertexTuple> sorted = f.tuples;
    std::sort(sorted.begin(), sorted.end());

    PruneResult out;
    out.family.n = f.n;
    out.family.stage = FamilyStage::OverlapPruned;
    std::unordered_set<std::uint64_t> seen_pairs;
    for (const auto& t : sorted) {
        bool clash = false;
        for (std::size_t i = 0; i < t.vertices.size() && !clash; ++i)
            for (std::size_t j = i + 1; j < t.vertices.size() && !clash; ++j)
                clash = seen_pairs.count(pair_key(t.vertices[i], t.vertices[j])) > 0;
        if (clash) {
            ++out.removed;
            continue;
        }
        for (std::size_t i = 0; i < t.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < t.vertices.size(); ++j)
                seen_pairs.insert(pair_key(t.vertices[i], t.vertices[j]));
        out.family.tuples.push_back(t);
    }
    return out;
}

EdgeColoredGraph realize_tuples(const TupleFamily& f) {
    if (f.stage == FamilyStage::Raw)
        throw std::invalid_argument("realize_tuples: run prune_overlaps first");

    EdgeColoredGraph g;
    g.n = f.n;
    g.classes.reserve(f.tuples.size());
    for (std::size_t i = 0; i < f.tuples.size(); ++i) {
        const auto& vs = f.tuples[i].vertices;
        ColorClass c;
        c.color = static_cast<int>(i);
        switch (vs.size()) {
            case 2:
                c.kind = ClassKind::Single;
                c.edges = {make_edge(vs[0], vs[1])};
                break;
            case 3:
                c.kind = ClassKind::Triangle;
                c.edges = {make_edge(vs[0], vs[1]), make_edge(vs[0], vs[2]),
                           make_edge(vs[1], vs[2])};
                break;
            case 4:
                c.kind = ClassKind::Matching2;
                c.edges = {make_edge(vs[0], vs[1]), make_edge(vs[2], vs[3])};
                break;
            default:
                throw std::invalid_argument("realize_tuples: tuple arity outside 2..4");
        }
        g.classes.push_back(std::move(c));
    }
    g.rebuild_index();
    return g;
}

PruneResult prune_short_rainbow_cycles(const TupleFamily& f, int max_len) {
    if (f.stage != FamilyStage::OverlapPruned)
        throw std::invalid_argument("prune_short_rainbow_cycles: need an overlap-pruned family");

    PruneResult out;
    out.family = f;
    out.family.stage = FamilyStage::CyclePruned;
    if (max_len < 3) return out;

    for (;;) {
        EdgeColoredGraph g = realize_tuples(out.family);
        auto res = rainbow_girth_exact(g, max_len);
        if (!res.length) break;

        const auto& c = *res.witness;
        Edge least = make_edge(c.vertices[0], c.vertices[1]);
        int least_color = c.colors[0];
        for (std::size_t i = 1; i < c.vertices.size(); ++i) {
            Edge e = make_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
            if (e < least) {
                least = e;
                least_color = c.colors[i];
            }
        }
        // Colors of the realized graph are positions in the tuple list.
        out.family.tuples.erase(out.family.tuples.begin() + least_color);
        ++out.removed;
    }
    return out;
}

} // namespace rgl
