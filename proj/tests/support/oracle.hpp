#pragma once

#include <random>

#include "topograph/graph.hpp"
#include "topograph/invariants.hpp"

namespace topograph::testing {

// Brute-force count of path components after deletion, independent of the
// library's combinatorial rule: every edge is expanded into a chain of at
// least 4*(weight+1) segments, cut points become far-apart chain vertices,
// removed points become removed chain vertices, and what is left is counted
// by breadth-first search.
int oracle_components_after_deletion(const TopoGraph& g, const DeletionSpec& d);

// Reduction replayed in random order on top of smooth_once, with bare
// circles detected only when they shrink to a single loop vertex. Order
// independence means this must match reduce(g) in circle count and up to
// core isomorphism.
ReducedForm random_order_reduce(const TopoGraph& g, std::mt19937& rng);

} // namespace topograph::testing
