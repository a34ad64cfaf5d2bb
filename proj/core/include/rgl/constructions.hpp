#pragma once

#include "rgl/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rgl {

// Circulant star coloring on n = k*r + 1 vertices: color i owns the edges
// from vertex i to i+1, ..., i+k (mod n).  Requires k >= 1, r >= 2 and
// k*r + 1 > 2*k so the k-step neighborhoods stay distinct.  Rainbow girth
// of the result is r + 1.
EdgeColoredGraph star_extremal(int k, int r);

// Chain of m six-vertex gadgets: per gadget two triangles, one 2-matching
// and three singles (one single links to the next gadget).  Census is
// (2m triangles, m matchings, 3m singles) on n = 6m vertices.
EdgeColoredGraph half_barrier(int m);

// Loop-free simple digraph; arcs are ordered pairs.
struct Digraph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> arcs; // sorted, distinct
};

Digraph make_digraph(int n, std::vector<std::pair<Vertex, Vertex>> arcs);

// Length of a shortest directed cycle, or nullopt if the digraph is
// acyclic.  BFS over arcs from every start vertex.
std::optional<int> shortest_directed_cycle(const Digraph& d);

// Out-arc star reduction: underlying undirected edges, one class per
// vertex with out-degree >= 1 (color = vertex id, edges = its out-arcs).
// Rejects digons: (u,v) and (v,u) together would collapse to one edge in
// two classes.  Rainbow cycles of the result are exactly the directed
// cycles of d (as vertex sets).
EdgeColoredGraph digraph_to_edge_colored(const Digraph& d);

struct MixedCounts {
    int singles = 0;
    int matching2s = 0;
    int triangles = 0;
    int stars = 0;
    int star_size = 3; // edges per star class
};

// Random edge-colored graph with the given class census; counts must sum
// to n (one class per vertex).  Supports are uniform; each class is placed
// by rejection against already-used edges, at most 1000 rounds before
// giving up with an error.  Deterministic in seed.
EdgeColoredGraph random_mixed(int n, const MixedCounts& counts, std::uint64_t seed);

// Census split used by the experiments: round(alpha*n) classes divided
// between 2-matchings and triangles (matchings get the floor half), the
// rest singles.
MixedCounts mixed_counts_for_alpha(int n, double alpha);

} // namespace rgl
