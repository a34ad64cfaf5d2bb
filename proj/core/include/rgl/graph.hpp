#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgl {

// Vertices are 0-based indices below the graph's n.
using Vertex = int;

// Undirected edge in canonical form u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::uint64_t edge_key(Edge e) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
           static_cast<std::uint32_t>(e.v);
}

// Shape taxonomy of a color class.  Single: one edge.  Matching2: two
// vertex-disjoint edges.  Triangle: the three edges of a K3.  Star: >= 2
// edges through one common vertex.  Other: anything else.
enum class ClassKind { Single, Matching2, Triangle, Star, Other };

const char* to_string(ClassKind k);
std::optional<ClassKind> class_kind_from_string(const std::string& s);

struct ColorClass {
    int color = 0;
    ClassKind kind = ClassKind::Single;
    std::vector<Edge> edges; // sorted, distinct, canonical
};

// Edge-colored graph: classes partition the edge set, one class per color.
// `edge_color` is derived; call rebuild_index() after editing classes.
struct EdgeColoredGraph {
    int n = 0;
    std::vector<ColorClass> classes;                // ascending color
    std::vector<std::pair<Edge, int>> edge_color;   // ascending edge, derived

    void rebuild_index();
    // Color of e, or nullopt if e is not an edge.
    std::optional<int> color_of(Edge e) const;
    bool has_edge(Edge e) const { return color_of(e).has_value(); }
    std::size_t edge_count() const { return edge_color.size(); }
};

// Most specific kind for a nonempty list of distinct canonical edges.
// Throws std::invalid_argument on empty input, loops, or duplicates.
ClassKind classify_class(const std::vector<Edge>& edges);

// Structural diagnostics; empty result means valid.  Checks vertex ranges,
// per-class shape against the declared kind (which must be the most
// specific one), and pairwise edge-disjointness of classes.
std::vector<std::string> validate(const EdgeColoredGraph& g);

// Class reduction: Star -> its lexicographically least edge (Single);
// any non-star that is not already Single/Matching2/Triangle keeps its
// lexicographically least vertex-disjoint edge pair (Matching2).
// Single/Matching2/Triangle pass through unchanged.
ColorClass reduce_class(const ColorClass& c);

// reduce_class applied to every class; result has only Single, Matching2
// and Triangle classes on the same vertex set.
EdgeColoredGraph reduce_classes(const EdgeColoredGraph& g);

struct ClassCensus {
    std::int64_t n_single = 0;
    std::int64_t n_matching2 = 0;
    std::int64_t n_triangle = 0;
    std::int64_t n_star = 0;
    std::int64_t n_other = 0;
    std::int64_t n_vertices = 0;

    // (matching2 + triangle) / n, the density knob of the sampling analysis.
    double alpha_effective() const;
};

ClassCensus census(const EdgeColoredGraph& g);

} // namespace rgl
