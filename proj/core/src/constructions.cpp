#include "rgl/constructions.hpp"

#include "rgl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace rgl {

EdgeColoredGraph star_extremal(int k, int r) {
    if (k < 1) throw std::invalid_argument("star_extremal: k must be >= 1");
    if (r < 2) throw std::invalid_argument("star_extremal: r must be >= 2");
    const long long n_ll = static_cast<long long>(k) * r + 1;
    if (n_ll <= 2 * k) throw std::invalid_argument("star_extremal: need k*r+1 > 2k");
    if (n_ll > 10'000'000) throw std::invalid_argument("star_extremal: size out of range");
    const int n = static_cast<int>(n_ll);

    EdgeColoredGraph g;
    g.n = n;
    g.classes.reserve(n);
    for (int i = 0; i < n; ++i) {
        ColorClass c;
        c.color = i;
        for (int j = 1; j <= k; ++j) c.edges.push_back(make_edge(i, (i + j) % n));
        std::sort(c.edges.begin(), c.edges.end());
        c.kind = classify_class(c.edges);
        g.classes.push_back(std::move(c));
    }
    g.rebuild_index();
    return g;
}

EdgeColoredGraph half_barrier(int m) {
    if (m < 1) throw std::invalid_argument("half_barrier: m must be >= 1");
    EdgeColoredGraph g;
    g.n = 6 * m;
    g.classes.reserve(6 * m);

    auto add = [&](int color, ClassKind kind, std::vector<Edge> edges) {
        std::sort(edges.begin(), edges.end());
        g.classes.push_back(ColorClass{color, kind, std::move(edges)});
    };

    for (int i = 0; i < m; ++i) {
        const int b = 6 * i;               // gadget base vertex
        const int nb = 6 * ((i + 1) % m);  // next gadget base
        add(6 * i + 0, ClassKind::Triangle,
            {make_edge(b, b + 1), make_edge(b, b + 2), make_edge(b + 1, b + 2)});
        add(6 * i + 1, ClassKind::Triangle,
            {make_edge(b + 3, b + 4), make_edge(b + 3, b + 5), make_edge(b + 4, b + 5)});
        add(6 * i + 2, ClassKind::Matching2, {make_edge(b + 1, b + 3), make_edge(b + 2, b + 4)});
        add(6 * i + 3, ClassKind::Single, {make_edge(b + 1, b + 4)});
        add(6 * i + 4, ClassKind::Single, {make_edge(b + 2, b + 3)});
        add(6 * i + 5, ClassKind::Single, {make_edge(b + 5, nb)});
    }
    g.rebuild_index();
    return g;
}

Digraph make_digraph(int n, std::vector<std::pair<Vertex, Vertex>> arcs) {
    if (n < 0) throw std::invalid_argument("make_digraph: negative n");
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (auto [u, v] : arcs) {
        if (u == v) throw std::invalid_argument("make_digraph: loop arc");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("make_digraph: arc endpoint out of range");
    }
    return Digraph{n, std::move(arcs)};
}

std::optional<int> shortest_directed_cycle(const Digraph& d) {
    std::vector<std::vector<Vertex>> out(d.n);
    for (auto [u, v] : d.arcs) out[u].push_back(v);

    std::optional<int> best;
    std::vector<int> dist(d.n);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < d.n; ++s) {
        // Shortest path back to s over arcs = shortest cycle through s.
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : out[v]) {
                if (w == s) {
                    int len = dist[v] + 1;
                    if (!best || len < *best) best = len;
                    continue;
                }
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return best;
}

EdgeColoredGraph digraph_to_edge_colored(const Digraph& d) {
    std::unordered_set<std::uint64_t> seen;
    for (auto [u, v] : d.arcs) {
        if (!seen.insert(edge_key(make_edge(u, v))).second)
            throw std::invalid_argument("digraph_to_edge_colored: digon between " +
                                        std::to_string(std::min(u, v)) + " and " +
                                        std::to_string(std::max(u, v)));
    }

    EdgeColoredGraph g;
    g.n = d.n;
    std::vector<std::vector<Edge>> by_tail(d.n);
    for (auto [u, v] : d.arcs) by_tail[u].push_back(make_edge(u, v));
    for (Vertex v = 0; v < d.n; ++v) {
        if (by_tail[v].empty()) continue;
        ColorClass c;
        c.color = v;
        c.edges = std::move(by_tail[v]);
        std::sort(c.edges.begin(), c.edges.end());
        c.kind = classify_class(c.edges);
        g.classes.push_back(std::move(c));
    }
    g.rebuild_index();
    return g;
}

namespace {

constexpr int kPlacementRounds = 1000;

// Distinct vertices, uniform, sorted.
std::vector<Vertex> sample_support(int n, int count, SplitMix64& rng) {
    std::vector<Vertex> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

EdgeColoredGraph random_mixed(int n, const MixedCounts& counts, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_mixed: n must be >= 1");
    if (counts.singles < 0 || counts.matching2s < 0 || counts.triangles < 0 ||
        counts.stars < 0 || counts.star_size < 2)
        throw std::invalid_argument("random_mixed: bad counts");
    const long long total = static_cast<long long>(counts.singles) + counts.matching2s +
                            counts.triangles + counts.stars;
    if (total != n)
        throw std::invalid_argument("random_mixed: counts must sum to n");
    if (counts.star_size > n - 1)
        throw std::invalid_argument("random_mixed: star_size needs star_size + 1 vertices");

    SplitMix64 rng(mix64(seed));
    EdgeColoredGraph g;
    g.n = n;
    std::unordered_set<std::uint64_t> used;

    auto place = [&](ClassKind kind) {
        for (int round = 0; round < kPlacementRounds; ++round) {
            std::vector<Edge> edges;
            switch (kind) {
                case ClassKind::Single: {
                    auto s = sample_support(n, 2, rng);
                    edges = {make_edge(s[0], s[1])};
                    break;
                }
                case ClassKind::Matching2: {
                    auto s = sample_support(n, 4, rng);
                    edges = {make_edge(s[0], s[1]), make_edge(s[2], s[3])};
                    break;
                }
                case ClassKind::Triangle: {
                    auto s = sample_support(n, 3, rng);
                    edges = {make_edge(s[0], s[1]), make_edge(s[0], s[2]),
                             make_edge(s[1], s[2])};
                    break;
                }
                case ClassKind::Star: {
                    auto s = sample_support(n, counts.star_size + 1, rng);
                    Vertex center = s[static_cast<std::size_t>(
                        rng.below(static_cast<std::uint64_t>(s.size())))];
                    for (Vertex leaf : s)
                        if (leaf != center) edges.push_back(make_edge(center, leaf));
                    break;
                }
                case ClassKind::Other:
                    throw std::logic_error("random_mixed: unsupported kind");
            }
            std::sort(edges.begin(), edges.end());
            bool fresh = true;
            for (const Edge& e : edges)
                if (used.count(edge_key(e))) { fresh = false; break; }
            if (!fresh) continue;

            for (const Edge& e : edges) used.insert(edge_key(e));
            ColorClass c;
            c.color = static_cast<int>(g.classes.size());
            c.kind = classify_class(edges);
            c.edges = std::move(edges);
            g.classes.push_back(std::move(c));
            return;
        }
        throw std::runtime_error("random_mixed: could not place a " +
                                 std::string(to_string(kind)) + " class in " +
                                 std::to_string(kPlacementRounds) + " rounds");
    };

    for (int i = 0; i < counts.matching2s; ++i) place(ClassKind::Matching2);
    for (int i = 0; i < counts.triangles; ++i) place(ClassKind::Triangle);
    for (int i = 0; i < counts.stars; ++i) place(ClassKind::Star);
    for (int i = 0; i < counts.singles; ++i) place(ClassKind::Single);

    g.rebuild_index();
    return g;
}

MixedCounts mixed_counts_for_alpha(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("mixed_counts_for_alpha: n must be >= 1");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("mixed_counts_for_alpha: alpha outside [0,1]");
    MixedCounts c;
    const int mt = static_cast<int>(std::lround(alpha * n));
    c.matching2s = mt / 2;
    c.triangles = mt - c.matching2s;
    c.singles = n - mt;
    return c;
}

} // namespace rgl
