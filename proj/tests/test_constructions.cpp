#include "rgl/constructions.hpp"
#include "rgl/ecg_io.hpp"
#include "rgl/search.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rgl;

namespace {

bool same_graph(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
    if (a.n != b.n || a.classes.size() != b.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        if (a.classes[i].color != b.classes[i].color) return false;
        if (a.classes[i].kind != b.classes[i].kind) return false;
        if (a.classes[i].edges != b.classes[i].edges) return false;
    }
    return true;
}

} // namespace

TEST_CASE("star_extremal structure") {
    auto g = star_extremal(2, 3);
    CHECK(g.n == 7);
    REQUIRE(g.classes.size() == 7);
    CHECK(g.edge_count() == 14); // n classes of k edges each
    CHECK(validate(g).empty());
    for (const auto& c : g.classes) CHECK(c.kind == ClassKind::Star);
    // Class 0 fans out to vertices 1 and 2.
    CHECK(g.classes[0].edges == std::vector<Edge>{{0, 1}, {0, 2}});
    // Class 6 wraps around.
    CHECK(g.classes[6].edges == std::vector<Edge>{{0, 6}, {1, 6}});

    auto c5 = star_extremal(1, 4);
    CHECK(c5.n == 5);
    for (const auto& c : c5.classes) CHECK(c.kind == ClassKind::Single);
    CHECK(c5.edge_count() == 5);

    CHECK_THROWS_AS(star_extremal(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(star_extremal(2, 1), std::invalid_argument);
}

TEST_CASE("star_extremal equals the circulant digraph image") {
    for (auto [k, r] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 2}}) {
        const int n = k * r + 1;
        std::vector<std::pair<Vertex, Vertex>> arcs;
        for (int v = 0; v < n; ++v)
            for (int j = 1; j <= k; ++j) arcs.emplace_back(v, (v + j) % n);
        auto from_digraph = digraph_to_edge_colored(make_digraph(n, arcs));
        CHECK(same_graph(from_digraph, star_extremal(k, r)));
    }
}

TEST_CASE("star_extremal rainbow girth is r+1 at small sizes") {
    CHECK(brute_force_rainbow_girth(star_extremal(2, 3)).length == 4);
    CHECK(brute_force_rainbow_girth(star_extremal(1, 4)).length == 5);
    CHECK(brute_force_rainbow_girth(star_extremal(3, 2)).length == 3);
}

TEST_CASE("half_barrier structure and census") {
    auto g = half_barrier(1);
    CHECK(g.n == 6);
    REQUIRE(g.classes.size() == 6);
    CHECK(g.edge_count() == 11); // 2*3 + 2 + 3*1 per gadget
    CHECK(validate(g).empty());
    auto c = census(g);
    CHECK(c.n_triangle == 2);
    CHECK(c.n_matching2 == 1);
    CHECK(c.n_single == 3);
    CHECK(c.n_star == 0);
    CHECK(c.alpha_effective() == doctest::Approx(0.5));

    auto g5 = half_barrier(5);
    CHECK(g5.n == 30);
    CHECK(g5.edge_count() == 55);
    auto c5 = census(g5);
    CHECK(c5.n_triangle == 10);
    CHECK(c5.n_matching2 == 5);
    CHECK(c5.n_single == 15);
    // Boundary identity: singles match triangles plus matchings.
    CHECK(c5.n_single == c5.n_triangle + c5.n_matching2);
    CHECK(validate(g5).empty());

    CHECK_THROWS_AS(half_barrier(0), std::invalid_argument);
}

TEST_CASE("half_barrier is deterministic") {
    CHECK(serialize_ecg_string(half_barrier(4)) == serialize_ecg_string(half_barrier(4)));
}

TEST_CASE("digraph reduction basics") {
    // Directed triangle: three singleton out-stars, rainbow girth 3.
    auto d3 = make_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
    auto g3 = digraph_to_edge_colored(d3);
    REQUIRE(g3.classes.size() == 3);
    for (const auto& c : g3.classes) CHECK(c.kind == ClassKind::Single);
    CHECK(brute_force_rainbow_girth(g3).length == 3);
    CHECK(shortest_directed_cycle(d3) == 3);

    // Path: only the two vertices with out-arcs get classes.
    auto dp = make_digraph(3, {{0, 1}, {1, 2}});
    auto gp = digraph_to_edge_colored(dp);
    REQUIRE(gp.classes.size() == 2);
    CHECK(gp.classes[0].color == 0);
    CHECK(gp.classes[1].color == 1);
    CHECK(!shortest_directed_cycle(dp).has_value());
    CHECK(!brute_force_rainbow_girth(gp).length.has_value());

    // Out-degree two becomes a star class.
    auto dstar = make_digraph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto gstar = digraph_to_edge_colored(dstar);
    REQUIRE(gstar.classes.size() == 1);
    CHECK(gstar.classes[0].kind == ClassKind::Star);

    CHECK_THROWS_AS(digraph_to_edge_colored(make_digraph(2, {{0, 1}, {1, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_digraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_digraph(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("shortest_directed_cycle picks the minimum over all cycles") {
    // 5-cycle plus a shortcut creating a directed triangle 1 -> 2 -> 3 -> 1.
    auto d = make_digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {3, 1}});
    CHECK(shortest_directed_cycle(d) == 3);
    // Undirected-looking square has no short directed cycle when oriented.
    auto sq = make_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(shortest_directed_cycle(sq) == 4);
}

TEST_CASE("random_mixed delivers the requested census") {
    MixedCounts counts;
    counts.singles = 50;
    counts.matching2s = 20;
    counts.triangles = 25;
    counts.stars = 5;
    auto g = random_mixed(100, counts, 99);
    CHECK(validate(g).empty());
    auto c = census(g);
    CHECK(c.n_single == 50);
    CHECK(c.n_matching2 == 20);
    CHECK(c.n_triangle == 25);
    CHECK(c.n_star == 5);
    CHECK(g.classes.size() == 100);
    // Colors are assigned contiguously in placement order.
    for (std::size_t i = 0; i < g.classes.size(); ++i)
        CHECK(g.classes[i].color == static_cast<int>(i));
}

TEST_CASE("random_mixed star size is configurable") {
    MixedCounts counts;
    counts.stars = 2;
    counts.singles = 18;
    counts.star_size = 5;
    auto g = random_mixed(20, counts, 7);
    int stars_seen = 0;
    for (const auto& c : g.classes)
        if (c.kind == ClassKind::Star) {
            ++stars_seen;
            CHECK(c.edges.size() == 5);
        }
    CHECK(stars_seen == 2);
}

TEST_CASE("random_mixed is deterministic and seed-sensitive") {
    MixedCounts counts;
    counts.singles = 10;
    counts.matching2s = 3;
    counts.triangles = 2;
    auto a = random_mixed(15, counts, 1);
    auto b = random_mixed(15, counts, 1);
    auto c = random_mixed(15, counts, 2);
    CHECK(same_graph(a, b));
    CHECK(!same_graph(a, c));
}

TEST_CASE("random_mixed rejects impossible requests") {
    MixedCounts bad;
    bad.singles = 3;
    CHECK_THROWS_AS(random_mixed(5, bad, 0), std::invalid_argument); // sum != n

    MixedCounts tight;
    tight.triangles = 4;
    // Any two triangles on four vertices share an edge.
    CHECK_THROWS_AS(random_mixed(4, tight, 0), std::runtime_error);

    MixedCounts fat_star;
    fat_star.stars = 1;
    fat_star.singles = 3;
    fat_star.star_size = 5;
    CHECK_THROWS_AS(random_mixed(4, fat_star, 0), std::invalid_argument);
}

TEST_CASE("mixed_counts_for_alpha splits as documented") {
    auto c = mixed_counts_for_alpha(500, 0.75);
    CHECK(c.matching2s == 187);
    CHECK(c.triangles == 188);
    CHECK(c.singles == 125);
    CHECK(c.matching2s + c.triangles + c.singles == 500);

    auto z = mixed_counts_for_alpha(100, 0.0);
    CHECK(z.singles == 100);
    auto one = mixed_counts_for_alpha(100, 1.0);
    CHECK(one.singles == 0);
    CHECK(one.matching2s == 50);
    CHECK_THROWS_AS(mixed_counts_for_alpha(10, 1.5), std::invalid_argument);
}
