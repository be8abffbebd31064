#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace topograph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ids are ASCII tokens without whitespace (the same tokens the text format uses).
using VertexId = std::string;
using EdgeId = std::string;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

// Undirected edge; endpoints are stored sorted so (u,v) and (v,u) are the
// same edge. u == v is a loop.
struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;

    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

// Combinatorial presentation of a finite 1-complex: a multigraph where loops
// and parallel edges are first-class. Vertex coordinates are display/ingestion
// metadata and never enter a topological computation.
//
// Value semantics throughout; every algorithm below takes the graph by const
// reference and returns a fresh result.
class TopoGraph {
public:
    TopoGraph() = default;
    explicit TopoGraph(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    void add_vertex(const VertexId& v);
    void add_vertex(const VertexId& v, Vec2 pos);
    void add_edge(const EdgeId& id, const VertexId& u, const VertexId& v);

    // The vertex must have no incident edges left.
    void remove_vertex(const VertexId& v);
    void remove_edge(const EdgeId& id);

    bool has_vertex(const VertexId& v) const { return vertices_.count(v) != 0; }
    bool has_edge(const EdgeId& id) const { return edges_.count(id) != 0; }

    const Edge& edge(const EdgeId& id) const;
    std::optional<Vec2> position(const VertexId& v) const;
    void set_position(const VertexId& v, Vec2 pos);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // A loop contributes 2 to its vertex's degree.
    int degree(const VertexId& v) const;
    int loops_at(const VertexId& v) const;
    std::vector<EdgeId> incident_edges(const VertexId& v) const;

    // Sorted by id; iteration over these maps is deterministic.
    const std::map<VertexId, std::optional<Vec2>>& vertices() const { return vertices_; }
    const std::map<EdgeId, Edge>& edges() const { return edges_; }

    // Structural equality: same name, same vertices (with coordinates) and
    // the same edge ids with the same unordered endpoint pairs.
    bool operator==(const TopoGraph&) const = default;

private:
    std::string name_;
    std::map<VertexId, std::optional<Vec2>> vertices_;
    std::map<EdgeId, Edge> edges_;
};

// Canonical multigraph left after smoothing away every degree-2 vertex, plus
// a tally of components that were bare circles. The pair (core, circle_count)
// is a complete homeomorphism invariant for finite 1-complexes.
struct ReducedForm {
    TopoGraph core;
    int circle_count = 0;
};

// Number of connected components; isolated vertices count.
int component_count(const TopoGraph& g);

// Replaces edge e by a path of k+1 edges through k fresh degree-2 vertices.
// Fresh ids are derived from the edge id and never collide with existing ones.
TopoGraph subdivide(const TopoGraph& g, const EdgeId& e, int k);

// Replaces a degree-2 vertex v and its two incident edges (v,a), (v,b) by the
// single edge (a,b) (a loop when a == b). Requires that v's two edge-ends lie
// on two distinct edges, i.e. v does not carry a loop.
TopoGraph smooth_once(const TopoGraph& g, const VertexId& v);

// Smooths every degree-2 vertex away. Components that are bare circles (every
// vertex of degree 2) cannot be smoothed to nothing, so they are removed from
// the core and tallied in circle_count instead. Isolated vertices survive.
// The core is unique up to isomorphism regardless of smoothing order.
ReducedForm reduce(const TopoGraph& g);

// One-line rendering listing circle count, vertices and edges. Two reduced
// forms with equal descriptions are identical graphs.
std::string describe(const ReducedForm& rf);

} // namespace topograph
