#pragma once

#include "rgl/graph.hpp"

#include <optional>
#include <vector>

namespace rgl {

// Plain (uncolored) simple graph, canonical edges.
struct SimpleGraph {
    int n = 0;
    std::vector<Edge> edges;
};

// A simple cycle v0 v1 ... v{l-1} (closing edge v{l-1} v0) in canonical
// form: v0 is the minimum vertex and v1 < v{l-1}.  colors[i] is the color
// of edge (v[i], v[(i+1) % l]); empty for uncolored witnesses.
struct RainbowCycle {
    std::vector<Vertex> vertices;
    std::vector<int> colors;
};

// Rotate/reflect a simple cycle into canonical form.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle);

struct GirthResult {
    std::optional<int> length;
    std::vector<Vertex> witness;   // canonical, empty iff no cycle
    int exhausted_bound = 0;       // lengths <= this are certified absent when no cycle
};

// Exact girth with lexicographically least canonical witness.  BFS from
// every vertex; a non-tree edge (u,v) seen from root s yields a candidate
// of length dist(u) + dist(v) + 1.
GirthResult girth(const SimpleGraph& g);

struct RainbowGirthResult {
    std::optional<int> length;
    std::optional<RainbowCycle> witness;
    // When length is set, lengths below it are certified rainbow-free;
    // otherwise lengths up to exhausted_bound are certified rainbow-free.
    int exhausted_bound = 0;
};

// Exact rainbow girth up to max_len (>= 3 required, else throws).  Iterative
// deepening over target length, canonical DFS (no path vertex below the
// start, each color used once, BFS distance pruning back to the start).
// The returned witness is the lexicographically least canonical one of
// minimum length.
RainbowGirthResult rainbow_girth_exact(const EdgeColoredGraph& g, int max_len);

// Default search bound used by the CLI: ceil(8 * log2 n), floored at 3.
int default_rainbow_bound(int n);

// Independent oracle for small graphs (n <= 14, else throws).  Enumerates
// simple cycles by increasing length with no color-based pruning;
// rainbowness is tested only when a cycle closes.
RainbowGirthResult brute_force_rainbow_girth(const EdgeColoredGraph& g);

// Checks that c is a simple cycle of g in canonical form, its edges exist
// with exactly the listed colors, and the colors are pairwise distinct.
bool verify_rainbow(const EdgeColoredGraph& g, const RainbowCycle& c);

// One representative edge per color class that survives inside the vertex
// set H: the lexicographically least class edge with both endpoints in H.
// Every cycle of the result is rainbow.
struct RepresentativeSubgraph {
    SimpleGraph graph;              // edges sorted
    std::vector<int> edge_color;    // aligned with graph.edges
    std::optional<int> color_of(Edge e) const;
};

RepresentativeSubgraph representative_subgraph(const EdgeColoredGraph& g,
                                               const std::vector<bool>& in_h);

} // namespace rgl
