#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topograph/graph.hpp"
#include "topograph/invariants.hpp"

namespace topograph {

// Vertex/edge bijection between two reduced cores, together with the shared
// circle tally. Maps edges to edges respecting endpoints.
struct Isomorphism {
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, EdgeId> edge_map;
    int circle_count = 0;
};

// Exact multigraph isomorphism by backtracking over degree- and
// loop-compatible vertex bijections, checking parallel-edge multiplicities.
// Intended for the small cores reduction produces. Deterministic; comparing
// a graph against itself yields the identity.
std::optional<Isomorphism> find_isomorphism(const TopoGraph& a, const TopoGraph& b);

// Replays a certificate: true iff the maps are bijections that send every
// edge of a to an edge of b with matching endpoints.
bool verify_isomorphism(const TopoGraph& a, const TopoGraph& b, const Isomorphism& iso);

enum class WitnessKind {
    component_count,
    order_signature,
    depth_k_max,
    reduced_nonisomorphic,
};

std::string to_string(WitnessKind kind);

// A computed invariant value that differs between two complexes, certifying
// non-homeomorphism. Replaying the cited invariant on both inputs reproduces
// lhs/rhs.
struct Witness {
    WitnessKind kind = WitnessKind::component_count;
    int depth = 0; // the k of a depth_k_max witness, 0 otherwise
    std::string lhs;
    std::string rhs;
};

// Outcome of comparing two complexes: exactly one of the certificate fields
// is engaged.
struct Verdict {
    bool homeomorphic = false;
    std::optional<Isomorphism> isomorphism;
    std::optional<Witness> witness;
};

// Exact decision: reduce both inputs; they are homeomorphic iff the circle
// counts match and the cores are isomorphic multigraphs.
Verdict are_homeomorphic(const TopoGraph& g, const TopoGraph& h);

// Ladder search for the cheapest witness: component count, then the order
// signature, then max_components_after_k for k = 2..max_depth, then the full
// decision. max_depth must lie in [0, 4]. If the inputs are homeomorphic no
// ladder stage can report a difference and the isomorphism certificate is
// returned.
Verdict distinguish(const TopoGraph& g, const TopoGraph& h, int max_depth = 2);

// Partition into homeomorphism classes. Each input is compared against one
// representative per class found so far. Classes are ordered by their
// smallest member name, members sorted by name. Names must be distinct.
std::vector<std::vector<std::string>> classify(const std::vector<TopoGraph>& gs);

} // namespace topograph
