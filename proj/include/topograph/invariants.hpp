#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "topograph/graph.hpp"

namespace topograph {

// A count in N union {infinity}. Infinity is a real value of the type, not a
// sentinel integer, so signature equality compares it exactly.
class Count {
public:
    Count() = default;
    Count(std::uint64_t n) : value_(n) {}

    static Count infinite() {
        Count c;
        c.value_.reset();
        return c;
    }

    bool is_infinite() const { return !value_.has_value(); }

    std::uint64_t finite() const {
        if (is_infinite()) throw Error("count is infinite");
        return *value_;
    }

    bool operator==(const Count&) const = default;

private:
    std::optional<std::uint64_t> value_ = 0;
};

std::string to_string(const Count& c); // "inf" or decimal digits

// The map n -> N(n): how many points of the complex have order n. Only
// nonzero entries are stored. For any graph with at least one edge, some
// entry is infinite (all interior points of an edge share one order).
// Invariant under subdivision and smoothing.
struct OrderSignature {
    std::map<int, Count> entries;
    bool operator==(const OrderSignature&) const = default;
};

// Ascending "n=count" pairs separated by single spaces, e.g. "1=4 2=inf 3=2".
// Empty signature renders as the empty string.
std::string to_string(const OrderSignature& sig);

// A finite set of removed points, given combinatorially: whole vertices plus
// a number of distinct interior points per edge. Removing the same point
// twice is unrepresentable by construction.
struct DeletionSpec {
    std::set<VertexId> deleted_vertices;
    std::map<EdgeId, int> edge_cuts; // cut count >= 0 per edge

    int total_weight() const;
};

// Number of path components of the realization of g minus the points of d.
//
// Combinatorial rule: subdivide each edge e at its cut count of fresh
// vertices; mark deleted points as removed vertices of the subdivided graph;
// then the answer is
//     components of the graph induced on surviving vertices
//   + number of edges whose endpoints were both removed.
// A half-open arc stays attached to its surviving endpoint, an edge losing
// both endpoints is exactly one open-arc component, and a loop at a removed
// vertex is such an edge.
int components_after_deletion(const TopoGraph& g, const DeletionSpec& d);

// Order of the point v: components left after deleting v. Computed two ways
// (the deletion rule above, and components of g minus v plus the loops at v)
// which are asserted to agree.
int vertex_order(const TopoGraph& g, const VertexId& v);

// Common order of every interior point of e: components of g with edge e
// removed and all vertices kept. Asserted to agree with a one-cut deletion.
int edge_interior_order(const TopoGraph& g, const EdgeId& e);

// N(n) is infinite when some edge's interior points have order n, otherwise
// the number of vertices of order n. Zero entries are omitted.
OrderSignature order_signature(const TopoGraph& g);

// Largest component count reachable by deleting exactly k points: exhaustive
// maximum of components_after_deletion over every vertex subset and every
// per-edge cut allocation of total weight k (several cuts may land on one
// edge). Returns component_count(g) for k = 0 and 0 when no weight-k spec
// exists (edgeless graph with fewer than k vertices). Homeomorphism
// invariant; keep k small (the CLI caps it at 4).
int max_components_after_k(const TopoGraph& g, int k);

} // namespace topograph
