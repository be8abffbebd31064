#include "topograph/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace topograph {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

    std::size_t root_count() {
        std::size_t n = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i) ++n;
        return n;
    }

private:
    std::vector<std::size_t> parent_;
};

void validate_spec(const TopoGraph& g, const DeletionSpec& d) {
    for (const VertexId& v : d.deleted_vertices)
        if (!g.has_vertex(v)) throw Error("deletion references unknown vertex '" + v + "'");
    for (const auto& [e, cuts] : d.edge_cuts) {
        if (!g.has_edge(e)) throw Error("deletion references unknown edge '" + e + "'");
        if (cuts < 0) throw Error("negative cut count on edge '" + e + "'");
    }
}

} // namespace

std::string to_string(const Count& c) {
    return c.is_infinite() ? "inf" : std::to_string(c.finite());
}

std::string to_string(const OrderSignature& sig) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, count] : sig.entries) {
        if (!first) out << ' ';
        out << n << '=' << to_string(count);
        first = false;
    }
    return out.str();
}

int DeletionSpec::total_weight() const {
    int w = static_cast<int>(deleted_vertices.size());
    for (const auto& [e, cuts] : edge_cuts) w += cuts;
    return w;
}

int components_after_deletion(const TopoGraph& g, const DeletionSpec& d) {
    validate_spec(g, d);

    // Index the surviving vertices.
    std::map<VertexId, std::size_t> index;
    for (const auto& [v, pos] : g.vertices())
        if (d.deleted_vertices.count(v) == 0) index.emplace(v, index.size());

    DisjointSets dsu(index.size());
    int open_arcs = 0;

    for (const auto& [id, e] : g.edges()) {
        auto it = d.edge_cuts.find(id);
        int cuts = (it == d.edge_cuts.end()) ? 0 : it->second;
        bool u_gone = d.deleted_vertices.count(e.u) != 0;
        bool v_gone = d.deleted_vertices.count(e.v) != 0;

        if (cuts == 0) {
            if (u_gone && v_gone)
                ++open_arcs; // includes a loop at a removed vertex
            else if (!u_gone && !v_gone)
                dsu.unite(index.at(e.u), index.at(e.v));
            // exactly one endpoint gone: the half-open arc stays with the survivor
        } else {
            // The chain through the cut vertices is severed; the c-1 middle
            // arcs are components, and each end arc is one more if its
            // endpoint was removed too.
            open_arcs += cuts - 1;
            if (u_gone) ++open_arcs;
            if (v_gone) ++open_arcs;
        }
    }

    return static_cast<int>(dsu.root_count()) + open_arcs;
}

int vertex_order(const TopoGraph& g, const VertexId& v) {
    DeletionSpec d;
    d.deleted_vertices.insert(v);
    int by_rule = components_after_deletion(g, d); // throws on unknown id

    // Independent route: drop v with its incident edges, then add back one
    // open arc per loop at v.
    TopoGraph punctured = g;
    for (const EdgeId& e : g.incident_edges(v)) punctured.remove_edge(e);
    punctured.remove_vertex(v);
    int direct = component_count(punctured) + g.loops_at(v);

    if (by_rule != direct)
        throw Error("vertex order mismatch at '" + v + "': " + std::to_string(by_rule) +
                    " vs " + std::to_string(direct));
    return by_rule;
}

int edge_interior_order(const TopoGraph& g, const EdgeId& e) {
    DeletionSpec d;
    d.edge_cuts[e] = 1;
    int by_rule = components_after_deletion(g, d); // throws on unknown id

    TopoGraph cut = g;
    cut.remove_edge(e);
    int direct = component_count(cut);

    if (by_rule != direct)
        throw Error("interior order mismatch at '" + e + "': " + std::to_string(by_rule) +
                    " vs " + std::to_string(direct));
    return by_rule;
}

OrderSignature order_signature(const TopoGraph& g) {
    std::set<int> infinite_orders;
    for (const auto& [id, e] : g.edges()) infinite_orders.insert(edge_interior_order(g, id));

    std::map<int, std::uint64_t> vertex_tally;
    for (const auto& [v, pos] : g.vertices()) ++vertex_tally[vertex_order(g, v)];

    OrderSignature sig;
    for (int n : infinite_orders) sig.entries.emplace(n, Count::infinite());
    for (const auto& [n, count] : vertex_tally)
        if (infinite_orders.count(n) == 0) sig.entries.emplace(n, Count(count));
    return sig;
}

namespace {

// Enumerates every allocation of `remaining` cuts over edges[from..] on top
// of the partial spec, calling out at the leaves.
template <typename Fn>
void for_each_cut_allocation(const std::vector<EdgeId>& edges, std::size_t from, int remaining,
                             DeletionSpec& spec, Fn&& out) {
    if (remaining == 0) {
        out(spec);
        return;
    }
    if (from == edges.size()) return;
    for (int take = 0; take <= remaining; ++take) {
        if (take > 0) spec.edge_cuts[edges[from]] = take;
        for_each_cut_allocation(edges, from + 1, remaining - take, spec, out);
        if (take > 0) spec.edge_cuts.erase(edges[from]);
    }
}

template <typename Fn>
void for_each_vertex_subset(const std::vector<VertexId>& vertices, std::size_t from, int size,
                            DeletionSpec& spec, Fn&& out) {
    if (size == 0) {
        out(spec);
        return;
    }
    if (vertices.size() - from < static_cast<std::size_t>(size)) return;
    // take vertices[from]
    spec.deleted_vertices.insert(vertices[from]);
    for_each_vertex_subset(vertices, from + 1, size - 1, spec, out);
    spec.deleted_vertices.erase(vertices[from]);
    // skip it
    for_each_vertex_subset(vertices, from + 1, size, spec, out);
}

} // namespace

int max_components_after_k(const TopoGraph& g, int k) {
    if (k < 0) throw Error("deletion weight must be nonnegative");
    if (k == 0) return component_count(g);

    std::vector<VertexId> vertices;
    for (const auto& [v, pos] : g.vertices()) vertices.push_back(v);
    std::vector<EdgeId> edges;
    for (const auto& [id, e] : g.edges()) edges.push_back(id);

    int best = 0; // max over an empty candidate set
    DeletionSpec spec;
    for (int s = 0; s <= std::min<int>(k, static_cast<int>(vertices.size())); ++s) {
        for_each_vertex_subset(vertices, 0, s, spec, [&](DeletionSpec& with_vertices) {
            for_each_cut_allocation(edges, 0, k - s, with_vertices, [&](DeletionSpec& full) {
                best = std::max(best, components_after_deletion(g, full));
            });
        });
    }
    return best;
}

} // namespace topograph
