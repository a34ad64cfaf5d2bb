#include "rgl/probability.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace rgl;

namespace {

ClassCensus reduced_census(std::int64_t s, std::int64_t m, std::int64_t t, std::int64_t n) {
    ClassCensus c;
    c.n_single = s;
    c.n_matching2 = m;
    c.n_triangle = t;
    c.n_vertices = n;
    return c;
}

// Independent of LocalConfiguration: joint survival of two vertex-disjoint
// 2-matchings by direct 2^8 enumeration.
double disjoint_mm_brute(double p) {
    const int edges[4][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    double total = 0.0;
    for (unsigned mask = 0; mask < 256; ++mask) {
        auto alive = [&](int a, int b) { return (mask >> a & 1u) && (mask >> b & 1u); };
        bool first = alive(edges[0][0], edges[0][1]) || alive(edges[1][0], edges[1][1]);
        bool second = alive(edges[2][0], edges[2][1]) || alive(edges[3][0], edges[3][1]);
        if (!(first && second)) continue;
        double prob = 1.0;
        for (int i = 0; i < 8; ++i) prob *= (mask >> i & 1u) ? p : 1.0 - p;
        total += prob;
    }
    return total;
}

} // namespace

TEST_CASE("survival closed forms at pinned points") {
    CHECK(survival_probability(ClassKind::Single, 0.5) == doctest::Approx(0.25));
    CHECK(survival_probability(ClassKind::Matching2, 0.5) == doctest::Approx(0.4375));
    CHECK(survival_probability(ClassKind::Triangle, 0.5) == doctest::Approx(0.5));
    for (ClassKind k : {ClassKind::Single, ClassKind::Matching2, ClassKind::Triangle}) {
        CHECK(survival_probability(k, 0.0) == 0.0);
        CHECK(survival_probability(k, 1.0) == 1.0);
    }
    CHECK_THROWS_AS(survival_probability(ClassKind::Star, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(survival_probability(ClassKind::Other, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(survival_probability(ClassKind::Single, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(survival_probability(ClassKind::Single, 1.1), std::invalid_argument);
}

TEST_CASE("survival is nondecreasing in p") {
    for (ClassKind k : {ClassKind::Single, ClassKind::Matching2, ClassKind::Triangle}) {
        double prev = 0.0;
        for (int i = 0; i <= 100; ++i) {
            double cur = survival_probability(k, i / 100.0);
            CHECK(cur >= prev - 1e-15);
            prev = cur;
        }
    }
}

TEST_CASE("enumeration matches closed forms to 1e-12 on the whole grid") {
    for (const auto& check : verify_closed_forms()) {
        INFO(check.name);
        CHECK(check.max_abs_error <= 1e-12);
    }
}

TEST_CASE("joint survival pinned values at p = 1/2") {
    CHECK(joint_survival_probability(JointConfiguration::mm_case1(), 0.5) ==
          doctest::Approx(0.2265625).epsilon(1e-12));
    CHECK(joint_survival_probability(JointConfiguration::mm_case2(), 0.5) ==
          doctest::Approx(0.265625).epsilon(1e-12));
    CHECK(joint_survival_probability(JointConfiguration::tt_shared_vertex(), 0.5) ==
          doctest::Approx(0.3125).epsilon(1e-12));
}

TEST_CASE("joint survival at the endpoints") {
    for (auto cfg : {JointConfiguration::mm_case1(), JointConfiguration::mm_case2(),
                     JointConfiguration::tt_shared_vertex()}) {
        CHECK(joint_survival_probability(cfg, 0.0) == 0.0);
        CHECK(joint_survival_probability(cfg, 1.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("shared-vertex classes are positively associated") {
    for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const double m = survival_probability(ClassKind::Matching2, p);
        const double t = survival_probability(ClassKind::Triangle, p);
        CHECK(joint_survival_probability(JointConfiguration::mm_case1(), p) >= m * m - 1e-15);
        CHECK(joint_survival_probability(JointConfiguration::mm_case2(), p) >= m * m - 1e-15);
        CHECK(joint_survival_probability(JointConfiguration::tt_shared_vertex(), p) >=
              t * t - 1e-15);
    }
}

TEST_CASE("disjoint pairs multiply, covariance zero") {
    auto cfg = JointConfiguration::disjoint(ClassKind::Matching2, ClassKind::Matching2);
    for (int i = 0; i <= 20; ++i) {
        const double p = i / 20.0;
        const double joint = joint_survival_probability(cfg, p);
        const double m = survival_probability(ClassKind::Matching2, p);
        CHECK(joint == doctest::Approx(m * m).epsilon(1e-12));
        CHECK(joint == doctest::Approx(disjoint_mm_brute(p)).epsilon(1e-12));
    }
    auto st = JointConfiguration::disjoint(ClassKind::Single, ClassKind::Triangle);
    CHECK(joint_survival_probability(st, 0.5) == doctest::Approx(0.125));
    CHECK_THROWS_AS(JointConfiguration::disjoint(ClassKind::Single, ClassKind::Triangle).local(),
                    std::invalid_argument);
}

TEST_CASE("enumerate_survival guards its inputs") {
    CHECK_THROWS_AS(enumerate_survival(ClassKind::Star, 0.5), std::invalid_argument);
    LocalConfiguration too_big{8, {{Edge{0, 1}}}};
    CHECK_THROWS_AS(enumerate_survival(too_big, 0.5), std::invalid_argument);
    LocalConfiguration bad_edge{3, {{Edge{0, 5}}}};
    CHECK_THROWS_AS(enumerate_survival(bad_edge, 0.5), std::invalid_argument);
    // Two classes in one local configuration work.
    LocalConfiguration pair{4, {{Edge{0, 1}}, {Edge{2, 3}}}};
    CHECK(enumerate_survival(pair, 0.5) == doctest::Approx(0.0625));
}

TEST_CASE("expected_rainbow_edges on the half/half census") {
    auto cen = reduced_census(0, 50, 50, 100);
    CHECK(expected_rainbow_edges(cen, 0.9) == doctest::Approx(96.795).epsilon(1e-12));
    CHECK(expected_rainbow_edges(cen, 1.0) == doctest::Approx(100.0));
    CHECK(expected_rainbow_edges(cen, 0.0) == 0.0);

    ClassCensus starry = reduced_census(1, 0, 0, 10);
    starry.n_star = 1;
    CHECK_THROWS_AS(expected_rainbow_edges(starry, 0.5), std::invalid_argument);
}

TEST_CASE("derivative_condition is twice the single fraction") {
    CHECK(derivative_condition(reduced_census(100, 0, 0, 100)) == doctest::Approx(2.0));
    CHECK(derivative_condition(reduced_census(0, 50, 50, 100)) == doctest::Approx(0.0));
    CHECK(derivative_condition(reduced_census(25, 37, 38, 100)) == doctest::Approx(0.5));
    CHECK(derivative_condition(reduced_census(40, 30, 30, 100)) == doctest::Approx(0.8));
}

TEST_CASE("find_sampling_parameters walks the default grids in order") {
    auto cen = reduced_census(0, 50, 50, 100);

    // p = 0.999 loses to the (1+eps)p term for every epsilon; the first
    // workable pair is (0.995, 0.001) with margin 0.0029179618128125.
    CHECK(sampling_margin(cen, 0.999, 0.001) < 0.0);
    auto params = find_sampling_parameters(cen);
    REQUIRE(params.has_value());
    CHECK(params->p == doctest::Approx(0.995));
    CHECK(params->epsilon == doctest::Approx(0.001));
    CHECK(params->beta == doctest::Approx(1.001 * 0.995).epsilon(1e-12));
    CHECK(params->gamma == doctest::Approx(0.0029179618128125).epsilon(1e-9));

    // Reference point deep inside the feasible region.
    CHECK(sampling_margin(cen, 0.9, 0.02) == doctest::Approx(0.030591).epsilon(1e-9));
}

TEST_CASE("find_sampling_parameters honors custom grids") {
    auto cen = reduced_census(0, 50, 50, 100);
    auto params = find_sampling_parameters(cen, {0.9}, {0.02});
    REQUIRE(params.has_value());
    CHECK(params->p == doctest::Approx(0.9));
    CHECK(params->epsilon == doctest::Approx(0.02));
    CHECK(params->beta == doctest::Approx(0.918).epsilon(1e-12));
    CHECK(params->gamma == doctest::Approx(0.030591).epsilon(1e-9));
}

TEST_CASE("find_sampling_parameters refuses hopeless censuses") {
    // All singles: f(p) = p^2 < p everywhere.
    CHECK(!find_sampling_parameters(reduced_census(100, 0, 0, 100)).has_value());
    // Half singles keeps f'(1) = 1: still hopeless on the default grids.
    CHECK(!find_sampling_parameters(reduced_census(50, 25, 25, 100)).has_value());

    ClassCensus starry = reduced_census(0, 50, 50, 100);
    starry.n_star = 1;
    CHECK_THROWS_AS(find_sampling_parameters(starry), std::invalid_argument);
}

TEST_CASE("bs_bound formula") {
    CHECK(bs_bound(4, 2) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(bs_bound(16, 16) == doctest::Approx(40.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(bs_bound(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(bs_bound(4, 1), std::invalid_argument);
    // Monotone in n for fixed k.
    double prev = bs_bound(4, 5);
    for (int n = 5; n < 50; ++n) {
        double cur = bs_bound(n, 5);
        CHECK(cur > prev);
        prev = cur;
    }
}
