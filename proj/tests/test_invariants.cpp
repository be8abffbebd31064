#include <doctest.h>

#include "support/oracle.hpp"
#include "topograph/alphabet.hpp"
#include "topograph/invariants.hpp"

using namespace topograph;
using topograph::testing::oracle_components_after_deletion;

namespace {

OrderSignature sig(std::initializer_list<std::pair<int, Count>> entries) {
    OrderSignature s;
    for (const auto& [n, c] : entries) s.entries.emplace(n, c);
    return s;
}

const Count inf = Count::infinite();

TopoGraph segment_graph() {
    TopoGraph g("seg");
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_edge("e", "u", "v");
    return g;
}

// All deletion specs of a given exact weight, by brute enumeration.
std::vector<DeletionSpec> all_specs_of_weight(const TopoGraph& g, int weight);

void extend(const TopoGraph& g, DeletionSpec spec, int remaining,
            std::vector<DeletionSpec>& out) {
    if (remaining == 0) {
        out.push_back(spec);
        return;
    }
    for (const auto& [v, pos] : g.vertices()) {
        if (spec.deleted_vertices.count(v)) continue;
        DeletionSpec next = spec;
        next.deleted_vertices.insert(v);
        extend(g, next, remaining - 1, out);
    }
    for (const auto& [id, e] : g.edges()) {
        DeletionSpec next = spec;
        ++next.edge_cuts[id];
        extend(g, next, remaining - 1, out);
    }
}

std::vector<DeletionSpec> all_specs_of_weight(const TopoGraph& g, int weight) {
    std::vector<DeletionSpec> out;
    extend(g, DeletionSpec{}, weight, out);
    return out;
}

} // namespace

TEST_CASE("counts render as digits or inf") {
    CHECK(to_string(Count(3)) == "3");
    CHECK(to_string(Count::infinite()) == "inf");
    CHECK(Count(0) == Count());
    CHECK_FALSE(Count(2) == Count::infinite());
    CHECK_THROWS_AS(Count::infinite().finite(), Error);
}

TEST_CASE("deletion weight adds vertices and cuts") {
    DeletionSpec d;
    d.deleted_vertices = {"a", "b"};
    d.edge_cuts = {{"e1", 2}, {"e2", 0}};
    CHECK(d.total_weight() == 4);
}

TEST_CASE("components_after_deletion: an interval split at two points") {
    TopoGraph g = segment_graph();
    DeletionSpec d;
    d.edge_cuts["e"] = 2;
    CHECK(components_after_deletion(g, d) == 3);
}

TEST_CASE("components_after_deletion: both junctions of the theta give 3 pieces") {
    DeletionSpec d;
    d.deleted_vertices = {"u", "v"};
    CHECK(components_after_deletion(builtin("B"), d) == 3);
}

TEST_CASE("components_after_deletion: a circle minus any two points is two arcs") {
    TopoGraph o = builtin("O");
    for (const DeletionSpec& d : all_specs_of_weight(o, 2))
        CHECK(components_after_deletion(o, d) == 2);
}

TEST_CASE("components_after_deletion: the crossbar junction pair tears A into 4 pieces") {
    DeletionSpec d;
    d.deleted_vertices = {"j1", "j2"};
    CHECK(components_after_deletion(builtin("A"), d) == 4);
    CHECK(oracle_components_after_deletion(builtin("A"), d) == 4);
}

TEST_CASE("components_after_deletion: leg cut plus far junction only makes 3") {
    DeletionSpec d;
    d.edge_cuts["p1"] = 1; // interior point of the j1 foot pendant
    d.deleted_vertices = {"j2"};
    CHECK(components_after_deletion(builtin("A"), d) == 3);
    CHECK(oracle_components_after_deletion(builtin("A"), d) == 3);
}

TEST_CASE("components_after_deletion: loops at removed vertices are open arcs") {
    TopoGraph g("q-ish");
    g.add_vertex("x");
    g.add_edge("loop", "x", "x");
    DeletionSpec d;
    d.deleted_vertices = {"x"};
    CHECK(components_after_deletion(g, d) == 1);
}

TEST_CASE("components_after_deletion rejects unknown ids") {
    TopoGraph g = segment_graph();
    DeletionSpec bad_vertex;
    bad_vertex.deleted_vertices = {"zz"};
    CHECK_THROWS_AS(components_after_deletion(g, bad_vertex), Error);
    DeletionSpec bad_edge;
    bad_edge.edge_cuts["zz"] = 1;
    CHECK_THROWS_AS(components_after_deletion(g, bad_edge), Error);
    DeletionSpec negative;
    negative.edge_cuts["e"] = -1;
    CHECK_THROWS_AS(components_after_deletion(g, negative), Error);
}

TEST_CASE("vertex_order at junctions, endpoints and crossings") {
    CHECK(vertex_order(builtin("Y"), "c") == 3);
    CHECK(vertex_order(builtin("I"), "a") == 1);
    CHECK(vertex_order(builtin("X"), "c") == 4); // the crossing, also the 4-ray axes model
    CHECK(vertex_order(builtin("B"), "u") == 1);
    CHECK(vertex_order(builtin("A"), "j1") == 2);

    TopoGraph point("pt");
    point.add_vertex("a");
    CHECK(vertex_order(point, "a") == 0);
    CHECK_THROWS_AS(vertex_order(point, "zz"), Error);
}

TEST_CASE("edge_interior_order") {
    TopoGraph o("O");
    o.add_vertex("a");
    o.add_edge("e1", "a", "a");
    CHECK(edge_interior_order(o, "e1") == 1);

    CHECK(edge_interior_order(builtin("I"), "e1") == 2);
    CHECK(edge_interior_order(builtin("A"), "p1") == 2); // foot pendant
    CHECK(edge_interior_order(builtin("A"), "c3") == 1); // crossbar sits on the cycle
    CHECK_THROWS_AS(edge_interior_order(o, "zz"), Error);
}

TEST_CASE("order_signature on the letter encodings") {
    CHECK(order_signature(builtin("I")) == sig({{1, 2}, {2, inf}}));
    CHECK(order_signature(builtin("Y")) == sig({{1, 3}, {2, inf}, {3, 1}}));
    CHECK(order_signature(builtin("O")) == sig({{1, inf}}));
    CHECK(order_signature(builtin("H")) == sig({{1, 4}, {2, inf}, {3, 2}}));
    CHECK(order_signature(builtin("Q")) == sig({{1, inf}, {2, inf}, {3, 1}}));
    CHECK(order_signature(builtin("X")) == sig({{1, 4}, {2, inf}, {4, 1}}));
}

TEST_CASE("order_signature degenerate graphs") {
    CHECK(order_signature(TopoGraph("empty")).entries.empty());

    TopoGraph point("pt");
    point.add_vertex("a");
    CHECK(order_signature(point) == sig({{0, 1}}));

    TopoGraph mixed("m");
    mixed.add_vertex("a");
    mixed.add_vertex("b");
    mixed.add_vertex("alone");
    mixed.add_edge("e", "a", "b");
    // segment endpoints have order 2 (the far piece survives); the isolated
    // point has order 1
    CHECK(mixed.degree("alone") == 0);
    CHECK(order_signature(mixed) == sig({{1, 1}, {2, 2}, {3, inf}}));
}

TEST_CASE("to_string renders signatures in ascending order") {
    CHECK(to_string(order_signature(builtin("H"))) == "1=4 2=inf 3=2");
    CHECK(to_string(order_signature(builtin("O"))) == "1=inf");
    CHECK(to_string(OrderSignature{}) == "");
}

TEST_CASE("max_components_after_k separates the lookalike pairs") {
    CHECK(max_components_after_k(builtin("A"), 2) == 4);
    CHECK(max_components_after_k(builtin("P"), 2) == 3);
    CHECK(max_components_after_k(builtin("B"), 2) == 3);
    CHECK(max_components_after_k(builtin("O"), 2) == 2);
}

TEST_CASE("max_components_after_k basics") {
    for (const char* name : {"A", "O", "Ñ", "X"})
        CHECK(max_components_after_k(builtin(name), 0) == component_count(builtin(name)));

    // two cuts on a single edge must be enumerated
    CHECK(max_components_after_k(segment_graph(), 1) == 2);
    CHECK(max_components_after_k(segment_graph(), 2) == 3);
    CHECK(max_components_after_k(segment_graph(), 3) == 4);

    TopoGraph point("pt");
    point.add_vertex("a");
    CHECK(max_components_after_k(point, 1) == 0);
    CHECK(max_components_after_k(point, 2) == 0); // no weight-2 spec exists
    CHECK_THROWS_AS(max_components_after_k(point, -1), Error);
}

TEST_CASE("a degree-2 vertex has the order of the edge it smooths into") {
    TopoGraph g = subdivide(builtin("I"), "e1", 1);
    VertexId middle = "e1.v1";
    REQUIRE(g.has_vertex(middle));
    int order = vertex_order(g, middle);
    TopoGraph smoothed = smooth_once(g, middle);
    REQUIRE(smoothed.edge_count() == 1);
    CHECK(order == edge_interior_order(smoothed, smoothed.edges().begin()->first));
}
