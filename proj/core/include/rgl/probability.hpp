#pragma once

#include "rgl/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rgl {

// Probability that a color class keeps at least one edge when every vertex
// survives independently with probability p.  Defined for the reduced kinds
// only (Single p^2, Matching2 2p^2 - p^4, Triangle 3p^2 - 2p^3); Star and
// Other throw.
double survival_probability(ClassKind kind, double p);

// A small local configuration: one or two classes on at most 7 vertices,
// edges written in local vertex ids.  Used to cross-check every closed form
// by summing over all 2^v survival patterns.
struct LocalConfiguration {
    int vertex_count = 0;
    std::vector<std::vector<Edge>> classes;
};

LocalConfiguration local_configuration(ClassKind kind);

// Exhaustive survival probability of a local configuration: the sum over
// vertex subsets in which every class keeps an edge.  vertex_count <= 7.
double enumerate_survival(const LocalConfiguration& cfg, double p);
double enumerate_survival(ClassKind kind, double p);

// Pair cases with a closed-form joint survival probability.
enum class JointCase {
    MMCase1,        // two 2-matchings sharing one vertex, 7 vertices
    MMCase2,        // two 2-matchings sharing two vertices (one per edge pair), 6 vertices
    TTSharedVertex, // two triangles sharing one vertex, 5 vertices
    Disjoint,       // vertex-disjoint pair, product of marginals
};

struct JointConfiguration {
    JointCase tag = JointCase::Disjoint;
    ClassKind kind_a = ClassKind::Single; // Disjoint only
    ClassKind kind_b = ClassKind::Single;

    static JointConfiguration mm_case1();
    static JointConfiguration mm_case2();
    static JointConfiguration tt_shared_vertex();
    static JointConfiguration disjoint(ClassKind a, ClassKind b);

    // Concrete embedding; for Disjoint the classes sit on separate vertices.
    LocalConfiguration local() const;
};

// P(X_i = 1 and X_j = 1) for the configuration.  Closed forms:
// MMCase1 p^3 + 3p^4 - 2p^5 - 2p^6 + p^7, MMCase2 2p^3 + 2p^4 - 4p^5 + p^6,
// TTSharedVertex 4p^3 - 3p^4, Disjoint the product of marginals.
double joint_survival_probability(const JointConfiguration& cfg, double p);

// Max absolute error of each closed form against enumerate_survival on the
// grid p = 0, 0.01, ..., 1.  Everything here is expected to sit below 1e-12.
struct ClosedFormCheck {
    std::string name;
    double max_abs_error = 0.0;
};
std::vector<ClosedFormCheck> verify_closed_forms();

// E[number of surviving classes] for a reduced census (Star/Other reject).
double expected_rainbow_edges(const ClassCensus& census, double p);

// d/dp of the per-vertex expectation at p = 1; equals 2 * n_single / n.
// Values >= 1 doom the sampling inequality near p = 1.
double derivative_condition(const ClassCensus& census);

struct SamplingParameters {
    double p = 0.0;
    double epsilon = 0.0;
    double beta = 0.0;  // (1 + epsilon) * p, sample size cap multiplier
    double gamma = 0.0; // (1-eps) * f(p) - (1+eps) * p, surplus multiplier
};

extern const std::vector<double> default_p_grid;       // 0.999, 0.995, 0.99, 0.98, ..., 0.90
extern const std::vector<double> default_epsilon_grid; // 0.001, 0.005, 0.01, 0.02

// Surplus margin gamma for the pair (p, eps); positive means the sampling
// inequality (1-eps) E[X] > (1+eps) p n holds.
double sampling_margin(const ClassCensus& census, double p, double epsilon);

// First grid pair (p outer, epsilon inner) with positive margin.
std::optional<SamplingParameters> find_sampling_parameters(
    const ClassCensus& census,
    const std::vector<double>& p_grid = default_p_grid,
    const std::vector<double>& epsilon_grid = default_epsilon_grid);

// Girth upper bound (2(n+k)/(3k)) * (log2 k + log2 log2 k + 4) for a
// connected graph with n >= 4 vertices and n + k edges, k >= 2.
double bs_bound(int n, int k);

} // namespace rgl
