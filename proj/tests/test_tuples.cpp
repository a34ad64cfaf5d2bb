#include "rgl/tuples.hpp"

#include "rgl/rng.hpp"
#include "rgl/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

using namespace rgl;

namespace {

TupleFamily family(int n, FamilyStage stage, std::vector<std::vector<Vertex>> tuples) {
    TupleFamily f;
    f.n = n;
    f.stage = stage;
    for (auto& t : tuples) f.tuples.push_back(VertexTuple{std::move(t)});
    std::sort(f.tuples.begin(), f.tuples.end());
    return f;
}

int max_pairwise_intersection(const TupleFamily& f) {
    int worst = 0;
    for (std::size_t i = 0; i < f.tuples.size(); ++i)
        for (std::size_t j = i + 1; j < f.tuples.size(); ++j) {
            std::vector<Vertex> common;
            std::set_intersection(f.tuples[i].vertices.begin(), f.tuples[i].vertices.end(),
                                  f.tuples[j].vertices.begin(), f.tuples[j].vertices.end(),
                                  std::back_inserter(common));
            worst = std::max(worst, static_cast<int>(common.size()));
        }
    return worst;
}

} // namespace

TEST_CASE("expected_family_size formula") {
    // (C(100,2) + C(100,3) + C(100,4)) * 144/1e6 = 588.654.
    CHECK(expected_family_size(100) == doctest::Approx(588.654).epsilon(1e-9));
    for (int n = 10; n <= 200; n += 10) CHECK(expected_family_size(n) >= 4.0 * n);
}

TEST_CASE("lower_bound_family basic shape") {
    auto f = lower_bound_family(40, 7);
    CHECK(f.n == 40);
    CHECK(f.stage == FamilyStage::Raw);
    CHECK(std::is_sorted(f.tuples.begin(), f.tuples.end()));
    CHECK(std::adjacent_find(f.tuples.begin(), f.tuples.end()) == f.tuples.end());
    for (const auto& t : f.tuples) {
        CHECK(t.vertices.size() >= 2);
        CHECK(t.vertices.size() <= 4);
        CHECK(std::is_sorted(t.vertices.begin(), t.vertices.end()));
        CHECK(t.vertices.front() >= 0);
        CHECK(t.vertices.back() < 40);
        CHECK(std::adjacent_find(t.vertices.begin(), t.vertices.end()) == t.vertices.end());
    }
    CHECK_THROWS_AS(lower_bound_family(9, 0), std::invalid_argument);
}

TEST_CASE("lower_bound_family is deterministic per seed") {
    auto a = lower_bound_family(60, 123);
    auto b = lower_bound_family(60, 123);
    auto c = lower_bound_family(60, 124);
    CHECK(a.tuples == b.tuples);
    CHECK(a.tuples != c.tuples);
}

TEST_CASE("lower_bound_family size concentrates on its expectation") {
    const int n = 40;
    const int seeds = 200;
    double mean = 0.0;
    for (int s = 0; s < seeds; ++s)
        mean += static_cast<double>(lower_bound_family(n, 1000 + s).tuples.size());
    mean /= seeds;

    const double expect = expected_family_size(n); // 229.6125
    // Var of the raw size is sum over arities of N_a p (1-p).
    const double p = 144.0 / (static_cast<double>(n) * n * n);
    const double total_subsets = 780.0 + 9880.0 + 91390.0;
    const double sigma_mean = std::sqrt(total_subsets * p * (1 - p) / seeds);
    CHECK(std::fabs(mean - expect) < 5 * sigma_mean);
}

TEST_CASE("prune_overlaps keeps the lexicographically smaller offender") {
    auto f = family(10, FamilyStage::Raw, {{0, 1, 2}, {0, 1, 3}});
    auto r = prune_overlaps(f);
    CHECK(r.removed == 1);
    REQUIRE(r.family.tuples.size() == 1);
    CHECK(r.family.tuples[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(r.family.stage == FamilyStage::OverlapPruned);

    // Shared pair across arities: the pair survives, the quadruple goes.
    auto g = family(10, FamilyStage::Raw, {{0, 1}, {0, 1, 2, 3}});
    r = prune_overlaps(g);
    CHECK(r.removed == 1);
    CHECK(r.family.tuples[0].vertices == std::vector<Vertex>{0, 1});

    // Sharing one vertex is fine.
    auto h = family(10, FamilyStage::Raw, {{0, 1}, {1, 2, 3}, {3, 4, 5, 6}});
    r = prune_overlaps(h);
    CHECK(r.removed == 0);
    CHECK(r.family.tuples.size() == 3);

    CHECK_THROWS_AS(prune_overlaps(r.family), std::invalid_argument);
}

TEST_CASE("prune_overlaps reaches a fixpoint") {
    SplitMix64 rng(5150);
    for (int iter = 0; iter < 30; ++iter) {
        auto f = lower_bound_family(30, derive_stream(888, iter));
        auto once = prune_overlaps(f);
        CHECK(max_pairwise_intersection(once.family) <= 1);

        TupleFamily again = once.family;
        again.stage = FamilyStage::Raw;
        CHECK(prune_overlaps(again).removed == 0);
    }
}

TEST_CASE("realize_tuples maps arities to kinds") {
    // Sorted tuple order: {0,1} < {1,5,6,7} < {2,3,4}.
    auto f = family(8, FamilyStage::OverlapPruned, {{0, 1}, {2, 3, 4}, {1, 5, 6, 7}});
    auto g = realize_tuples(f);
    CHECK(g.n == 8);
    REQUIRE(g.classes.size() == 3);
    CHECK(g.classes[0].kind == ClassKind::Single);
    CHECK(g.classes[0].edges == std::vector<Edge>{{0, 1}});
    CHECK(g.classes[1].kind == ClassKind::Matching2);
    CHECK(g.classes[1].edges == std::vector<Edge>{{1, 5}, {6, 7}});
    CHECK(g.classes[2].kind == ClassKind::Triangle);
    CHECK(g.classes[2].edges == std::vector<Edge>{{2, 3}, {2, 4}, {3, 4}});
    for (std::size_t i = 0; i < g.classes.size(); ++i)
        CHECK(g.classes[i].color == static_cast<int>(i));
    CHECK(validate(g).empty());

    TupleFamily raw = f;
    raw.stage = FamilyStage::Raw;
    CHECK_THROWS_AS(realize_tuples(raw), std::invalid_argument);
}

TEST_CASE("realized pruned families validate cleanly") {
    for (int s = 0; s < 10; ++s) {
        auto pruned = prune_overlaps(lower_bound_family(50, derive_stream(2222, s)));
        auto g = realize_tuples(pruned.family);
        CHECK(validate(g).empty());
    }
}

TEST_CASE("prune_short_rainbow_cycles clears a rainbow triangle") {
    auto f = family(3, FamilyStage::OverlapPruned, {{0, 1}, {0, 2}, {1, 2}});
    auto r = prune_short_rainbow_cycles(f, 3);
    CHECK(r.removed == 1);
    CHECK(r.family.stage == FamilyStage::CyclePruned);
    REQUIRE(r.family.tuples.size() == 2);
    // Least witness edge is {0,1}, owned by the tuple {0,1}.
    CHECK(r.family.tuples[0].vertices == std::vector<Vertex>{0, 2});
    CHECK(!rainbow_girth_exact(realize_tuples(r.family), 3).length.has_value());
}

TEST_CASE("prune_short_rainbow_cycles iterates until clean") {
    // All six pairs of a K4: rainbow triangles everywhere.
    auto f = family(4, FamilyStage::OverlapPruned,
                    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto r = prune_short_rainbow_cycles(f, 3);
    CHECK(r.removed == 3);
    REQUIRE(r.family.tuples.size() == 3);
    CHECK(r.family.tuples[0].vertices == std::vector<Vertex>{0, 3});
    CHECK(r.family.tuples[1].vertices == std::vector<Vertex>{1, 3});
    CHECK(r.family.tuples[2].vertices == std::vector<Vertex>{2, 3});
    CHECK(!rainbow_girth_exact(realize_tuples(r.family), 3).length.has_value());
}

TEST_CASE("prune_short_rainbow_cycles with max_len below 3 is a stage change only") {
    auto f = family(3, FamilyStage::OverlapPruned, {{0, 1}, {0, 2}, {1, 2}});
    auto r = prune_short_rainbow_cycles(f, 2);
    CHECK(r.removed == 0);
    CHECK(r.family.tuples.size() == 3);
    CHECK(r.family.stage == FamilyStage::CyclePruned);

    TupleFamily raw = f;
    raw.stage = FamilyStage::Raw;
    CHECK_THROWS_AS(prune_short_rainbow_cycles(raw, 3), std::invalid_argument);
}

TEST_CASE("post-prune certification holds on sampled families") {
    for (int s = 0; s < 5; ++s) {
        auto pruned = prune_overlaps(lower_bound_family(40, derive_stream(31415, s)));
        auto swept = prune_short_rainbow_cycles(pruned.family, 4);
        auto g = realize_tuples(swept.family);
        CHECK(!rainbow_girth_exact(g, 4).length.has_value());
        CHECK(max_pairwise_intersection(swept.family) <= 1);
    }
}
