#include "topograph/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace topograph {

namespace {

// Union-find over vertex indices.
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

std::map<VertexId, std::size_t> index_vertices(const TopoGraph& g) {
    std::map<VertexId, std::size_t> index;
    for (const auto& [v, pos] : g.vertices()) index.emplace(v, index.size());
    return index;
}

std::string fresh_id(const std::string& base, const auto& taken) {
    if (!taken(base)) return base;
    for (int n = 2;; ++n) {
        std::string candidate = base + "_" + std::to_string(n);
        if (!taken(candidate)) return candidate;
    }
}

VertexId fresh_vertex_id(const TopoGraph& g, const std::string& base) {
    return fresh_id(base, [&g](const std::string& id) { return g.has_vertex(id); });
}

EdgeId fresh_edge_id(const TopoGraph& g, const std::string& base) {
    return fresh_id(base, [&g](const std::string& id) { return g.has_edge(id); });
}

} // namespace

void TopoGraph::add_vertex(const VertexId& v) {
    if (has_vertex(v)) throw Error("duplicate vertex id '" + v + "'");
    vertices_.emplace(v, std::nullopt);
}

void TopoGraph::add_vertex(const VertexId& v, Vec2 pos) {
    if (has_vertex(v)) throw Error("duplicate vertex id '" + v + "'");
    vertices_.emplace(v, pos);
}

void TopoGraph::add_edge(const EdgeId& id, const VertexId& u, const VertexId& v) {
    if (has_edge(id)) throw Error("duplicate edge id '" + id + "'");
    if (!has_vertex(u)) throw Error("edge '" + id + "' references unknown vertex '" + u + "'");
    if (!has_vertex(v)) throw Error("edge '" + id + "' references unknown vertex '" + v + "'");
    Edge e{id, std::min(u, v), std::max(u, v)};
    edges_.emplace(id, std::move(e));
}

void TopoGraph::remove_vertex(const VertexId& v) {
    if (!has_vertex(v)) throw Error("unknown vertex id '" + v + "'");
    if (degree(v) != 0) throw Error("vertex '" + v + "' still has incident edges");
    vertices_.erase(v);
}

void TopoGraph::remove_edge(const EdgeId& id) {
    if (!has_edge(id)) throw Error("unknown edge id '" + id + "'");
    edges_.erase(id);
}

const Edge& TopoGraph::edge(const EdgeId& id) const {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw Error("unknown edge id '" + id + "'");
    return it->second;
}

std::optional<Vec2> TopoGraph::position(const VertexId& v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw Error("unknown vertex id '" + v + "'");
    return it->second;
}

void TopoGraph::set_position(const VertexId& v, Vec2 pos) {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw Error("unknown vertex id '" + v + "'");
    it->second = pos;
}

int TopoGraph::degree(const VertexId& v) const {
    if (!has_vertex(v)) throw Error("unknown vertex id '" + v + "'");
    int d = 0;
    for (const auto& [id, e] : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int TopoGraph::loops_at(const VertexId& v) const {
    if (!has_vertex(v)) throw Error("unknown vertex id '" + v + "'");
    int n = 0;
    for (const auto& [id, e] : edges_)
        if (e.is_loop() && e.u == v) ++n;
    return n;
}

std::vector<EdgeId> TopoGraph::incident_edges(const VertexId& v) const {
    if (!has_vertex(v)) throw Error("unknown vertex id '" + v + "'");
    std::vector<EdgeId> out;
    for (const auto& [id, e] : edges_)
        if (e.u == v || e.v == v) out.push_back(id);
    return out;
}

int component_count(const TopoGraph& g) {
    auto index = index_vertices(g);
    DisjointSets dsu(index.size());
    for (const auto& [id, e] : g.edges()) dsu.unite(index.at(e.u), index.at(e.v));
    return static_cast<int>(dsu.root_count());
}

TopoGraph subdivide(const TopoGraph& g, const EdgeId& e, int k) {
    const Edge original = g.edge(e); // throws on unknown id
    if (k < 1) throw Error("subdivision count must be positive");

    TopoGraph out = g;
    out.remove_edge(e);

    std::vector<VertexId> chain;
    chain.push_back(original.u);
    for (int i = 1; i <= k; ++i) {
        VertexId w = fresh_vertex_id(out, e + ".v" + std::to_string(i));
        out.add_vertex(w);
        chain.push_back(w);
    }
    chain.push_back(original.v);

    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        EdgeId id = fresh_edge_id(out, e + ".s" + std::to_string(i + 1));
        out.add_edge(id, chain[i], chain[i + 1]);
    }
    return out;
}

TopoGraph smooth_once(const TopoGraph& g, const VertexId& v) {
    if (g.degree(v) != 2) throw Error("vertex '" + v + "' does not have degree 2");
    std::vector<EdgeId> inc = g.incident_edges(v);
    if (inc.size() != 2)
        throw Error("vertex '" + v + "' carries a loop and cannot be smoothed");

    const Edge& e1 = g.edge(inc[0]);
    const Edge& e2 = g.edge(inc[1]);
    VertexId a = (e1.u == v) ? e1.v : e1.u;
    VertexId b = (e2.u == v) ? e2.v : e2.u;

    TopoGraph out = g;
    out.remove_edge(inc[0]);
    out.remove_edge(inc[1]);
    out.remove_vertex(v);
    out.add_edge(std::min(inc[0], inc[1]), a, b);
    return out;
}

ReducedForm reduce(const TopoGraph& g) {
    ReducedForm rf;
    rf.core = g;

    // Peel off bare circles first: a component in which every vertex has
    // degree 2 is a cycle (this covers a single loop vertex and a pair of
    // parallel edges). Such a component has no smoothable endpoint to stop
    // at, so it is tallied instead of smoothed.
    {
        auto index = index_vertices(rf.core);
        DisjointSets dsu(index.size());
        for (const auto& [id, e] : rf.core.edges())
            dsu.unite(index.at(e.u), index.at(e.v));

        std::map<std::size_t, bool> all_degree_two;
        for (const auto& [v, pos] : rf.core.vertices()) {
            std::size_t root = dsu.find(index.at(v));
            auto [it, inserted] = all_degree_two.emplace(root, true);
            if (rf.core.degree(v) != 2) it->second = false;
        }

        std::vector<VertexId> doomed;
        for (const auto& [v, pos] : rf.core.vertices())
            if (all_degree_two.at(dsu.find(index.at(v)))) doomed.push_back(v);

        std::set<std::size_t> circle_roots;
        for (const auto& [root, flag] : all_degree_two)
            if (flag) circle_roots.insert(root);
        rf.circle_count = static_cast<int>(circle_roots.size());

        std::vector<EdgeId> doomed_edges;
        for (const auto& [id, e] : rf.core.edges())
            if (all_degree_two.at(dsu.find(index.at(e.u)))) doomed_edges.push_back(id);
        for (const EdgeId& id : doomed_edges) rf.core.remove_edge(id);
        for (const VertexId& v : doomed) rf.core.remove_vertex(v);
    }

    // Every remaining degree-2 vertex now lies in a component that also has a
    // vertex of degree != 2, so it never carries a loop and is smoothable.
    for (;;) {
        VertexId target;
        bool found = false;
        for (const auto& [v, pos] : rf.core.vertices()) {
            if (rf.core.degree(v) == 2) {
                target = v;
                found = true;
                break;
            }
        }
        if (!found) break;
        rf.core = smooth_once(rf.core, target);
    }
    return rf;
}

std::string describe(const ReducedForm& rf) {
    std::ostringstream out;
    out << "circles=" << rf.circle_count << "; vertices=";
    bool first = true;
    for (const auto& [v, pos] : rf.core.vertices()) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << "; edges=";
    first = true;
    for (const auto& [id, e] : rf.core.edges()) {
        if (!first) out << ",";
        out << id << ":" << e.u << "-" << e.v;
        first = false;
    }
    return out.str();
}

} // namespace topograph
