#pragma once

#include "rgl/graph.hpp"

#include <cstdint>
#include <vector>

namespace rgl {

// 2-, 3- or 4-element vertex subset, sorted ascending.
struct VertexTuple {
    std::vector<Vertex> vertices;
    auto operator<=>(const VertexTuple&) const = default;
};

enum class FamilyStage { Raw, OverlapPruned, CyclePruned };

struct TupleFamily {
    int n = 0;
    FamilyStage stage = FamilyStage::Raw;
    std::vector<VertexTuple> tuples; // sorted, distinct
};

// Every 2-, 3- and 4-subset of [n] included independently with probability
// p = min(1, 144 / n^3).  Exact per-arity binomial counts, then that many
// distinct subsets sampled uniformly.  Requires n >= 10; deterministic in
// seed.
TupleFamily lower_bound_family(int n, std::uint64_t seed);

// Expected raw family size (C(n,2) + C(n,3) + C(n,4)) * p; at n >= 10 this
// is >= 4n.
double expected_family_size(int n);

struct PruneResult {
    TupleFamily family;
    int removed = 0;
};

// Enforce pairwise intersections of size <= 1.  Tuples are scanned in
// lexicographic order and one is kept only if it shares no vertex pair
// with anything already kept; this leaves exactly the fixpoint of
// repeatedly deleting the lexicographically larger tuple of the first
// offending pair.  Requires stage Raw.
PruneResult prune_overlaps(const TupleFamily& f);

// One color class per tuple, colors following tuple order: a pair becomes
// a Single edge, a triple the Triangle on its vertices, a quadruple
// {a<b<c<d} the 2-matching {ab, cd}.  Requires stage != Raw (overlap
// pruning guarantees edge-disjointness).
EdgeColoredGraph realize_tuples(const TupleFamily& f);

// While the realized graph has a rainbow cycle of length <= max_len, drop
// the tuple owning the lexicographically least edge of the reported
// witness.  max_len < 3 is a no-op (no simple cycle is that short).
// Requires stage OverlapPruned.
PruneResult prune_short_rainbow_cycles(const TupleFamily& f, int max_len);

} // namespace rgl
