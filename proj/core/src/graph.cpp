#include "rgl/graph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rgl {

const char* to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Single: return "single";
        case ClassKind::Matching2: return "matching2";
        case ClassKind::Triangle: return "triangle";
        case ClassKind::Star: return "star";
        case ClassKind::Other: return "other";
    }
    return "?";
}

std::optional<ClassKind> class_kind_from_string(const std::string& s) {
    if (s == "single") return ClassKind::Single;
    if (s == "matching2") return ClassKind::Matching2;
    if (s == "triangle") return ClassKind::Triangle;
    if (s == "star") return ClassKind::Star;
    if (s == "other") return ClassKind::Other;
    return std::nullopt;
}

void EdgeColoredGraph::rebuild_index() {
    edge_color.clear();
    for (const auto& c : classes)
        for (const Edge& e : c.edges) edge_color.emplace_back(e, c.color);
    std::sort(edge_color.begin(), edge_color.end());
}

std::optional<int> EdgeColoredGraph::color_of(Edge e) const {
    auto it = std::lower_bound(edge_color.begin(), edge_color.end(),
                               std::make_pair(e, std::numeric_limits<int>::min()));
    if (it != edge_color.end() && it->first == e) return it->second;
    return std::nullopt;
}

ClassKind classify_class(const std::vector<Edge>& edges) {
    if (edges.empty()) throw std::invalid_argument("classify_class: empty edge list");
    for (const Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("classify_class: loop edge");
        if (e.u > e.v) throw std::invalid_argument("classify_class: edge not canonical");
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("classify_class: duplicate edge");

    if (sorted.size() == 1) return ClassKind::Single;

    if (sorted.size() == 2) {
        const Edge a = sorted[0], b = sorted[1];
        const bool disjoint = a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
        return disjoint ? ClassKind::Matching2 : ClassKind::Star;
    }

    std::set<Vertex> support;
    for (const Edge& e : sorted) {
        support.insert(e.u);
        support.insert(e.v);
    }
    if (sorted.size() == 3 && support.size() == 3) return ClassKind::Triangle;

    // Star: one vertex common to every edge.
    int common = -1;
    bool have_common = false;
    for (Vertex x : {sorted[0].u, sorted[0].v}) {
        bool in_all = true;
        for (const Edge& e : sorted)
            if (e.u != x && e.v != x) { in_all = false; break; }
        if (in_all) { common = x; have_common = true; break; }
    }
    if (have_common) {
        (void)common;
        return ClassKind::Star;
    }
    return ClassKind::Other;
}

namespace {

bool edges_well_formed(const ColorClass& c, int n, std::string& why) {
    if (c.edges.empty()) { why = "empty edge list"; return false; }
    for (const Edge& e : c.edges) {
        if (e.u == e.v) { why = "loop edge"; return false; }
        if (e.u > e.v) { why = "edge not in canonical min-max form"; return false; }
        if (e.u < 0 || e.v >= n) { why = "vertex out of range"; return false; }
    }
    for (std::size_t i = 0; i + 1 < c.edges.size(); ++i) {
        if (!(c.edges[i] < c.edges[i + 1])) {
            why = c.edges[i] == c.edges[i + 1] ? "duplicate edge" : "edges not sorted";
            return false;
        }
    }
    return true;
}

std::string edge_str(Edge e) {
    std::ostringstream os;
    os << e.u << " " << e.v;
    return os.str();
}

} // namespace

std::vector<std::string> validate(const EdgeColoredGraph& g) {
    std::vector<std::string> diags;
    if (g.n < 0) diags.push_back("vertex count is negative");

    std::unordered_set<int> colors;
    for (const auto& c : g.classes) {
        std::ostringstream tag;
        tag << "class " << c.color << ": ";
        if (!colors.insert(c.color).second)
            diags.push_back(tag.str() + "duplicate color");

        std::string why;
        if (!edges_well_formed(c, g.n, why)) {
            diags.push_back(tag.str() + why);
            continue;
        }

        ClassKind actual = classify_class(c.edges);
        if (actual != c.kind) {
            if (c.kind == ClassKind::Matching2 && actual == ClassKind::Star) {
                // Name the shared endpoint, the common way to botch a matching.
                const Edge a = c.edges[0], b = c.edges[1];
                Vertex shared = (a.u == b.u || a.u == b.v) ? a.u : a.v;
                std::ostringstream os;
                os << tag.str() << "matching2 edges not vertex-disjoint (share vertex "
                   << shared << ")";
                diags.push_back(os.str());
            } else {
                diags.push_back(tag.str() + "declared " + to_string(c.kind) +
                                " but edges classify as " + to_string(actual));
            }
        }
    }

    // Classes must be pairwise edge-disjoint.
    std::unordered_map<std::uint64_t, int> owner;
    for (const auto& c : g.classes) {
        for (const Edge& e : c.edges) {
            if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n || e.u >= e.v) continue;
            auto [it, fresh] = owner.emplace(edge_key(e), c.color);
            if (!fresh && it->second != c.color) {
                std::ostringstream os;
                os << "classes " << it->second << " and " << c.color
                   << " not edge-disjoint (edge " << edge_str(e) << ")";
                diags.push_back(os.str());
            }
        }
    }

    for (std::size_t i = 0; i + 1 < g.classes.size(); ++i)
        if (g.classes[i].color > g.classes[i + 1].color) {
            diags.push_back("classes not sorted by color");
            break;
        }

    return diags;
}

ColorClass reduce_class(const ColorClass& c) {
    std::string why;
    ColorClass sorted = c;
    std::sort(sorted.edges.begin(), sorted.edges.end());
    if (!edges_well_formed(sorted, std::numeric_limits<int>::max(), why))
        throw std::invalid_argument("reduce_class: " + why);

    ClassKind kind = classify_class(sorted.edges);
    if (kind != c.kind)
        throw std::invalid_argument("reduce_class: declared kind does not match edges");

    switch (kind) {
        case ClassKind::Single:
        case ClassKind::Matching2:
        case ClassKind::Triangle:
            return sorted;
        case ClassKind::Star:
            return ColorClass{c.color, ClassKind::Single, {sorted.edges.front()}};
        case ClassKind::Other:
            break;
    }

    // Not a star and not a triangle, so a 2-matching exists; take the
    // lexicographically least pair.
    for (std::size_t i = 0; i < sorted.edges.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.edges.size(); ++j) {
            const Edge a = sorted.edges[i], b = sorted.edges[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v)
                return ColorClass{c.color, ClassKind::Matching2, {a, b}};
        }
    throw std::logic_error("reduce_class: non-star class without a 2-matching");
}

EdgeColoredGraph reduce_classes(const EdgeColoredGraph& g) {
    EdgeColoredGraph out;
    out.n = g.n;
    out.classes.reserve(g.classes.size());
    for (const auto& c : g.classes) out.classes.push_back(reduce_class(c));
    out.rebuild_index();
    return out;
}

double ClassCensus::alpha_effective() const {
    if (n_vertices <= 0) return 0.0;
    return static_cast<double>(n_matching2 + n_triangle) / static_cast<double>(n_vertices);
}

ClassCensus census(const EdgeColoredGraph& g) {
    ClassCensus c;
    c.n_vertices = g.n;
    for (const auto& cls : g.classes) {
        switch (cls.kind) {
            case ClassKind::Single: ++c.n_single; break;
            case ClassKind::Matching2: ++c.n_matching2; break;
            case ClassKind::Triangle: ++c.n_triangle; break;
            case ClassKind::Star: ++c.n_star; break;
            case ClassKind::Other: ++c.n_other; break;
        }
    }
    return c;
}

} // namespace rgl
