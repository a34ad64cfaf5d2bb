#include "rgl/probability.hpp"

#include <cmath>
#include <stdexcept>

namespace rgl {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("survival probability: p outside [0,1]");
}

} // namespace

double survival_probability(ClassKind kind, double p) {
    check_p(p);
    switch (kind) {
        case ClassKind::Single:
            return p * p;
        case ClassKind::Matching2:
            return 2 * p * p - p * p * p * p;
        case ClassKind::Triangle:
            return 3 * p * p - 2 * p * p * p;
        case ClassKind::Star:
        case ClassKind::Other:
            break;
    }
    throw std::invalid_argument("survival_probability: reduce Star/Other classes first");
}

LocalConfiguration local_configuration(ClassKind kind) {
    switch (kind) {
        case ClassKind::Single:
            return {2, {{Edge{0, 1}}}};
        case ClassKind::Matching2:
            return {4, {{Edge{0, 1}, Edge{2, 3}}}};
        case ClassKind::Triangle:
            return {3, {{Edge{0, 1}, Edge{0, 2}, Edge{1, 2}}}};
        case ClassKind::Star:
        case ClassKind::Other:
            break;
    }
    throw std::invalid_argument("local_configuration: reduce Star/Other classes first");
}

double enumerate_survival(const LocalConfiguration& cfg, double p) {
    check_p(p);
    const int v = cfg.vertex_count;
    if (v < 1 || v > 7)
        throw std::invalid_argument("enumerate_survival: vertex count must be in [1,7]");
    for (const auto& cls : cfg.classes)
        for (const Edge& e : cls)
            if (e.u < 0 || e.v >= v || e.u >= e.v)
                throw std::invalid_argument("enumerate_survival: bad local edge");

    double total = 0.0;
    for (unsigned mask = 0; mask < (1u << v); ++mask) {
        bool all_survive = true;
        for (const auto& cls : cfg.classes) {
            bool has_edge = false;
            for (const Edge& e : cls)
                if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) { has_edge = true; break; }
            if (!has_edge) { all_survive = false; break; }
        }
        if (!all_survive) continue;
        double prob = 1.0;
        for (int i = 0; i < v; ++i) prob *= (mask >> i & 1u) ? p : 1.0 - p;
        total += prob;
    }
    return total;
}

double enumerate_survival(ClassKind kind, double p) {
    return enumerate_survival(local_configuration(kind), p);
}

JointConfiguration JointConfiguration::mm_case1() { return {JointCase::MMCase1, {}, {}}; }
JointConfiguration JointConfiguration::mm_case2() { return {JointCase::MMCase2, {}, {}}; }
JointConfiguration JointConfiguration::tt_shared_vertex() {
    return {JointCase::TTSharedVertex, {}, {}};
}
JointConfiguration JointConfiguration::disjoint(ClassKind a, ClassKind b) {
    return {JointCase::Disjoint, a, b};
}

LocalConfiguration JointConfiguration::local() const {
    switch (tag) {
        case JointCase::MMCase1:
            // F_i = {01, 23}, F_j = {04, 56}: one shared endpoint.
            return {7, {{Edge{0, 1}, Edge{2, 3}}, {Edge{0, 4}, Edge{5, 6}}}};
        case JointCase::MMCase2:
            // F_i = {01, 23}, F_j = {04, 25}: one shared endpoint per edge pair.
            return {6, {{Edge{0, 1}, Edge{2, 3}}, {Edge{0, 4}, Edge{2, 5}}}};
        case JointCase::TTSharedVertex:
            // Two triangles glued at vertex 0.
            return {5,
                    {{Edge{0, 1}, Edge{0, 2}, Edge{1, 2}},
                     {Edge{0, 3}, Edge{0, 4}, Edge{3, 4}}}};
        case JointCase::Disjoint:
            break;
    }
    throw std::invalid_argument("JointConfiguration::local: no single embedding for Disjoint");
}

double joint_survival_probability(const JointConfiguration& cfg, double p) {
    check_p(p);
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p, p7 = p6 * p;
    switch (cfg.tag) {
        case JointCase::MMCase1:
            return p3 + 3 * p4 - 2 * p5 - 2 * p6 + p7;
        case JointCase::MMCase2:
            return 2 * p3 + 2 * p4 - 4 * p5 + p6;
        case JointCase::TTSharedVertex:
            return 4 * p3 - 3 * p4;
        case JointCase::Disjoint:
            return survival_probability(cfg.kind_a, p) * survival_probability(cfg.kind_b, p);
    }
    throw std::logic_error("joint_survival_probability: bad tag");
}

std::vector<ClosedFormCheck> verify_closed_forms() {
    std::vector<ClosedFormCheck> checks = {
        {"single", 0.0},     {"matching2", 0.0}, {"triangle", 0.0},
        {"mm_case1", 0.0},   {"mm_case2", 0.0},  {"tt_shared_vertex", 0.0},
    };
    for (int i = 0; i <= 100; ++i) {
        const double p = static_cast<double>(i) / 100.0;
        auto upd = [&](std::size_t idx, double closed, double enumerated) {
            double err = std::fabs(closed - enumerated);
            if (err > checks[idx].max_abs_error) checks[idx].max_abs_error = err;
        };
        upd(0, survival_probability(ClassKind::Single, p), enumerate_survival(ClassKind::Single, p));
        upd(1, survival_probability(ClassKind::Matching2, p),
            enumerate_survival(ClassKind::Matching2, p));
        upd(2, survival_probability(ClassKind::Triangle, p),
            enumerate_survival(ClassKind::Triangle, p));
        upd(3, joint_survival_probability(JointConfiguration::mm_case1(), p),
            enumerate_survival(JointConfiguration::mm_case1().local(), p));
        upd(4, joint_survival_probability(JointConfiguration::mm_case2(), p),
            enumerate_survival(JointConfiguration::mm_case2().local(), p));
        upd(5, joint_survival_probability(JointConfiguration::tt_shared_vertex(), p),
            enumerate_survival(JointConfiguration::tt_shared_vertex().local(), p));
    }
    return checks;
}

namespace {

void check_reduced(const ClassCensus& census) {
    if (census.n_star > 0 || census.n_other > 0)
        throw std::invalid_argument("census has Star/Other classes; reduce first");
    if (census.n_vertices < 1)
        throw std::invalid_argument("census has no vertices");
}

} // namespace

double expected_rainbow_edges(const ClassCensus& census, double p) {
    check_p(p);
    check_reduced(census);
    return survival_probability(ClassKind::Matching2, p) * static_cast<double>(census.n_matching2) +
           survival_probability(ClassKind::Triangle, p) * static_cast<double>(census.n_triangle) +
           survival_probability(ClassKind::Single, p) * static_cast<double>(census.n_single);
}

double derivative_condition(const ClassCensus& census) {
    check_reduced(census);
    return 2.0 * static_cast<double>(census.n_single) / static_cast<double>(census.n_vertices);
}

const std::vector<double> default_p_grid = {0.999, 0.995, 0.99, 0.98, 0.97, 0.96,
                                            0.95,  0.94,  0.93, 0.92, 0.91, 0.90};
const std::vector<double> default_epsilon_grid = {0.001, 0.005, 0.01, 0.02};

double sampling_margin(const ClassCensus& census, double p, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("sampling_margin: epsilon outside (0,1)");
    const double f = expected_rainbow_edges(census, p) / static_cast<double>(census.n_vertices);
    return (1.0 - epsilon) * f - (1.0 + epsilon) * p;
}

std::optional<SamplingParameters> find_sampling_parameters(
    const ClassCensus& census, const std::vector<double>& p_grid,
    const std::vector<double>& epsilon_grid) {
    check_reduced(census);
    for (double p : p_grid)
        for (double eps : epsilon_grid) {
            const double gamma = sampling_margin(census, p, eps);
            if (gamma > 0.0)
                return SamplingParameters{p, eps, (1.0 + eps) * p, gamma};
        }
    return std::nullopt;
}

double bs_bound(int n, int k) {
    if (n < 4) throw std::invalid_argument("bs_bound: n must be >= 4");
    if (k < 2) throw std::invalid_argument("bs_bound: k must be >= 2");
    const double kd = static_cast<double>(k);
    const double log2k = std::log2(kd);
    return (2.0 * (static_cast<double>(n) + kd) / (3.0 * kd)) *
           (log2k + std::log2(log2k) + 4.0);
}

} // namespace rgl
