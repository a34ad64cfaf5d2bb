#include "rgl/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace rgl {

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle) {
    const std::size_t l = cycle.size();
    if (l < 3) throw std::invalid_argument("canonical_cycle: fewer than 3 vertices");
    std::size_t mi = 0;
    for (std::size_t i = 1; i < l; ++i)
        if (cycle[i] < cycle[mi]) mi = i;

    std::vector<Vertex> fwd(l), bwd(l);
    for (std::size_t i = 0; i < l; ++i) {
        fwd[i] = cycle[(mi + i) % l];
        bwd[i] = cycle[(mi + l - i) % l];
    }
    return fwd[1] < bwd[1] ? fwd : bwd;
}

namespace {

struct PlainAdj {
    std::vector<std::vector<Vertex>> nbr;
    explicit PlainAdj(const SimpleGraph& g) : nbr(g.n) {
        for (const Edge& e : g.edges) {
            nbr[e.u].push_back(e.v);
            nbr[e.v].push_back(e.u);
        }
        for (auto& v : nbr) std::sort(v.begin(), v.end());
    }
};

void bfs(const std::vector<std::vector<Vertex>>& nbr, Vertex s,
         std::vector<int>& dist, std::vector<Vertex>& parent) {
    dist.assign(nbr.size(), -1);
    parent.assign(nbr.size(), -1);
    std::vector<Vertex> queue;
    queue.reserve(nbr.size());
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : nbr[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
    }
}

} // namespace

GirthResult girth(const SimpleGraph& g) {
    GirthResult out;
    out.exhausted_bound = g.n;
    if (g.n == 0) return out;
    PlainAdj adj(g);

    std::vector<int> dist;
    std::vector<Vertex> parent;
    int best = std::numeric_limits<int>::max();

    for (Vertex s = 0; s < g.n; ++s) {
        bfs(adj.nbr, s, dist, parent);
        for (const Edge& e : g.edges) {
            if (dist[e.u] < 0 || dist[e.v] < 0) continue;
            if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
            best = std::min(best, dist[e.u] + dist[e.v] + 1);
        }
    }
    if (best == std::numeric_limits<int>::max()) return out;

    // Second pass: reconstruct every candidate achieving the optimum and
    // keep the lexicographically least canonical witness.
    std::vector<Vertex> best_witness;
    for (Vertex s = 0; s < g.n; ++s) {
        bfs(adj.nbr, s, dist, parent);
        for (const Edge& e : g.edges) {
            if (dist[e.u] < 0 || dist[e.v] < 0) continue;
            if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
            if (dist[e.u] + dist[e.v] + 1 != best) continue;

            std::vector<Vertex> cyc;
            for (Vertex x = e.u; x != -1; x = parent[x]) cyc.push_back(x);
            std::reverse(cyc.begin(), cyc.end()); // s ... u
            std::size_t fixed = cyc.size();
            for (Vertex x = e.v; x != -1; x = parent[x]) cyc.push_back(x); // v ... s
            cyc.pop_back(); // drop the second s

            // At the optimum the two tree paths share only the root.
            std::vector<Vertex> check = cyc;
            std::sort(check.begin(), check.end());
            if (std::adjacent_find(check.begin(), check.end()) != check.end()) continue;
            (void)fixed;

            std::vector<Vertex> canon = canonical_cycle(cyc);
            if (best_witness.empty() || canon < best_witness) best_witness = std::move(canon);
        }
    }
    if (best_witness.empty())
        throw std::logic_error("girth: optimum found but no candidate reconstructed");
    out.length = best;
    out.witness = std::move(best_witness);
    return out;
}

namespace {

// Adjacency of an edge-colored graph; second member is the class index
// (position in g.classes), not the color id.
struct ColoredAdj {
    int n = 0;
    std::vector<std::vector<std::pair<Vertex, int>>> nbr;
    explicit ColoredAdj(const EdgeColoredGraph& g) : n(g.n), nbr(g.n) {
        for (std::size_t ci = 0; ci < g.classes.size(); ++ci)
            for (const Edge& e : g.classes[ci].edges) {
                nbr[e.u].emplace_back(e.v, static_cast<int>(ci));
                nbr[e.v].emplace_back(e.u, static_cast<int>(ci));
            }
        for (auto& v : nbr) std::sort(v.begin(), v.end());
    }
    // Class index of edge (a,b), or -1.
    int class_of(Vertex a, Vertex b) const {
        const auto& row = nbr[a];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, -1));
        if (it != row.end() && it->first == b) return it->second;
        return -1;
    }
};

void bfs_plain_dist(const ColoredAdj& adj, Vertex s, std::vector<int>& dist) {
    dist.assign(adj.n, -1);
    std::vector<Vertex> queue;
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (auto [w, ci] : adj.nbr[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
}

struct ExactSearch {
    const ColoredAdj& adj;
    int target = 0;
    Vertex start = 0;
    std::vector<int> dist;
    std::vector<char> on_path;
    std::vector<char> used_class;
    std::vector<Vertex> path;
    std::vector<int> path_class; // class of edge path[i] -> path[i+1]

    explicit ExactSearch(const ColoredAdj& a)
        : adj(a), on_path(a.n, 0), used_class(0, 0) {}

    // Canonical DFS: every path vertex after start exceeds start, each class
    // used at most once, and a vertex is only entered if it can still reach
    // start within the remaining edge budget.
    bool dfs() {
        const Vertex v = path.back();
        const int size = static_cast<int>(path.size());
        if (size == target) {
            const int ci = adj.class_of(v, start);
            if (ci < 0 || used_class[ci]) return false;
            if (path[1] >= path.back()) return false;
            path_class.push_back(ci);
            return true;
        }
        for (auto [w, ci] : adj.nbr[v]) {
            if (w <= start || on_path[w] || used_class[ci]) continue;
            if (dist[w] > target - size) continue;
            on_path[w] = 1;
            used_class[ci] = 1;
            path.push_back(w);
            path_class.push_back(ci);
            if (dfs()) return true;
            path.pop_back();
            path_class.pop_back();
            used_class[ci] = 0;
            on_path[w] = 0;
        }
        return false;
    }

    bool run(Vertex s, int l, std::size_t class_count) {
        start = s;
        target = l;
        bfs_plain_dist(adj, s, dist);
        used_class.assign(class_count, 0);
        std::fill(on_path.begin(), on_path.end(), 0);
        path.assign(1, s);
        path_class.clear();
        on_path[s] = 1;
        return dfs();
    }
};

RainbowCycle witness_from(const ExactSearch& se, const EdgeColoredGraph& g) {
    RainbowCycle c;
    c.vertices = se.path;
    c.colors.reserve(se.path_class.size());
    for (int ci : se.path_class) c.colors.push_back(g.classes[ci].color);
    return c;
}

} // namespace

RainbowGirthResult rainbow_girth_exact(const EdgeColoredGraph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("rainbow_girth_exact: max_len must be >= 3");
    RainbowGirthResult out;
    out.exhausted_bound = max_len;

    ColoredAdj adj(g);
    ExactSearch se(adj);
    const int cap = std::min(max_len, g.n);
    for (int l = 3; l <= cap; ++l) {
        for (Vertex s = 0; s < g.n; ++s) {
            if (se.run(s, l, g.classes.size())) {
                out.length = l;
                out.witness = witness_from(se, g);
                out.exhausted_bound = l;
                return out;
            }
        }
    }
    return out;
}

int default_rainbow_bound(int n) {
    if (n < 2) return 3;
    int b = static_cast<int>(std::ceil(8.0 * std::log2(static_cast<double>(n))));
    return std::max(3, b);
}

namespace {

// Depth-capped enumeration used by the oracle: all simple cycles of length
// exactly `target` through their minimum vertex `start`, colors checked only
// at closure.
struct BruteSearch {
    const ColoredAdj& adj;
    int target = 0;
    Vertex start = 0;
    std::vector<char> on_path;
    std::vector<Vertex> path;
    std::vector<int> path_class;
    std::vector<int> scratch;

    explicit BruteSearch(const ColoredAdj& a) : adj(a), on_path(a.n, 0) {}

    bool rainbow_closure(int closing_class) {
        scratch = path_class;
        scratch.push_back(closing_class);
        std::sort(scratch.begin(), scratch.end());
        return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
    }

    bool dfs() {
        const Vertex v = path.back();
        const int size = static_cast<int>(path.size());
        if (size == target) {
            const int ci = adj.class_of(v, start);
            if (ci < 0) return false;
            if (path[1] >= path.back()) return false;
            if (!rainbow_closure(ci)) return false;
            path_class.push_back(ci);
            return true;
        }
        for (auto [w, ci] : adj.nbr[v]) {
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            path_class.push_back(ci);
            if (dfs()) return true;
            path.pop_back();
            path_class.pop_back();
            on_path[w] = 0;
        }
        return false;
    }

    bool run(Vertex s, int l) {
        start = s;
        target = l;
        std::fill(on_path.begin(), on_path.end(), 0);
        path.assign(1, s);
        path_class.clear();
        on_path[s] = 1;
        return dfs();
    }
};

} // namespace

RainbowGirthResult brute_force_rainbow_girth(const EdgeColoredGraph& g) {
    if (g.n > 14)
        throw std::invalid_argument("brute_force_rainbow_girth: n > 14 not supported");
    RainbowGirthResult out;
    out.exhausted_bound = g.n;

    ColoredAdj adj(g);
    BruteSearch se(adj);
    for (int l = 3; l <= g.n; ++l) {
        for (Vertex s = 0; s < g.n; ++s) {
            if (se.run(s, l)) {
                RainbowCycle c;
                c.vertices = se.path;
                c.colors.reserve(se.path_class.size());
                for (int ci : se.path_class) c.colors.push_back(g.classes[ci].color);
                out.length = l;
                out.witness = std::move(c);
                out.exhausted_bound = l;
                return out;
            }
        }
    }
    return out;
}

bool verify_rainbow(const EdgeColoredGraph& g, const RainbowCycle& c) {
    const std::size_t l = c.vertices.size();
    if (l < 3 || c.colors.size() != l) return false;
    for (Vertex v : c.vertices)
        if (v < 0 || v >= g.n) return false;

    std::vector<Vertex> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;

    if (c.vertices[0] != vs[0]) return false;            // starts at min vertex
    if (c.vertices[1] >= c.vertices[l - 1]) return false; // orientation

    for (std::size_t i = 0; i < l; ++i) {
        Edge e = make_edge(c.vertices[i], c.vertices[(i + 1) % l]);
        auto col = g.color_of(e);
        if (!col || *col != c.colors[i]) return false;
    }

    std::vector<int> cols = c.colors;
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

std::optional<int> RepresentativeSubgraph::color_of(Edge e) const {
    auto it = std::lower_bound(graph.edges.begin(), graph.edges.end(), e);
    if (it != graph.edges.end() && *it == e)
        return edge_color[static_cast<std::size_t>(it - graph.edges.begin())];
    return std::nullopt;
}

RepresentativeSubgraph representative_subgraph(const EdgeColoredGraph& g,
                                               const std::vector<bool>& in_h) {
    if (static_cast<int>(in_h.size()) != g.n)
        throw std::invalid_argument("representative_subgraph: membership size != n");
    std::vector<std::pair<Edge, int>> picked;
    for (const auto& c : g.classes)
        for (const Edge& e : c.edges)
            if (in_h[e.u] && in_h[e.v]) {
                picked.emplace_back(e, c.color);
                break;
            }
    std::sort(picked.begin(), picked.end());

    RepresentativeSubgraph out;
    out.graph.n = g.n;
    out.graph.edges.reserve(picked.size());
    out.edge_color.reserve(picked.size());
    for (auto& [e, col] : picked) {
        out.graph.edges.push_back(e);
        out.edge_color.push_back(col);
    }
    return out;
}

} // namespace rgl
