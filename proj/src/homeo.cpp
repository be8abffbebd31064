#include "topograph/homeo.hpp"

#include <algorithm>
#include <set>

namespace topograph {

namespace {

// Indexed view of a multigraph for the backtracking search: loop counts per
// vertex and parallel-edge multiplicities per vertex pair.
struct CoreView {
    std::vector<VertexId> ids; // sorted
    std::map<VertexId, std::size_t> index;
    std::vector<int> loops;
    std::vector<int> degree;
    std::vector<std::vector<int>> mult;

    explicit CoreView(const TopoGraph& g) {
        for (const auto& [v, pos] : g.vertices()) {
            index.emplace(v, ids.size());
            ids.push_back(v);
        }
        std::size_t n = ids.size();
        loops.assign(n, 0);
        degree.assign(n, 0);
        mult.assign(n, std::vector<int>(n, 0));
        for (const auto& [id, e] : g.edges()) {
            std::size_t u = index.at(e.u);
            std::size_t v = index.at(e.v);
            if (u == v) {
                ++loops[u];
                degree[u] += 2;
            } else {
                ++mult[u][v];
                ++mult[v][u];
                ++degree[u];
                ++degree[v];
            }
        }
    }

    std::pair<int, int> vertex_class(std::size_t i) const { return {degree[i], loops[i]}; }
};

bool backtrack(const CoreView& a, const CoreView& b, const std::vector<std::size_t>& order,
               std::size_t depth, std::vector<std::size_t>& image, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    std::size_t v = order[depth];
    for (std::size_t cand = 0; cand < b.ids.size(); ++cand) {
        if (used[cand]) continue;
        if (b.vertex_class(cand) != a.vertex_class(v)) continue;
        bool consistent = true;
        for (std::size_t prior = 0; prior < depth; ++prior) {
            std::size_t w = order[prior];
            if (a.mult[v][w] != b.mult[cand][image[w]]) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        image[v] = cand;
        used[cand] = true;
        if (backtrack(a, b, order, depth + 1, image, used)) return true;
        used[cand] = false;
    }
    return false;
}

// Edge ids between an unordered vertex pair (or loops at one vertex), sorted.
std::vector<EdgeId> edges_between(const TopoGraph& g, const VertexId& u, const VertexId& v) {
    std::vector<EdgeId> out;
    for (const auto& [id, e] : g.edges())
        if ((e.u == std::min(u, v)) && (e.v == std::max(u, v))) out.push_back(id);
    return out;
}

} // namespace

std::optional<Isomorphism> find_isomorphism(const TopoGraph& a, const TopoGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;

    CoreView va(a), vb(b);

    // Classes (degree, loop count) must match as multisets.
    auto classes = [](const CoreView& view) {
        std::vector<std::pair<int, int>> cs;
        for (std::size_t i = 0; i < view.ids.size(); ++i) cs.push_back(view.vertex_class(i));
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    if (classes(va) != classes(vb)) return std::nullopt;

    // Assign rare, high-degree vertices first; ties broken by id so that
    // comparing a graph with itself walks straight to the identity.
    std::vector<std::size_t> order(va.ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto cx = va.vertex_class(x), cy = va.vertex_class(y);
        if (cx != cy) return cx > cy;
        return va.ids[x] < va.ids[y];
    });

    std::vector<std::size_t> image(va.ids.size(), 0);
    std::vector<bool> used(vb.ids.size(), false);
    if (!backtrack(va, vb, order, 0, image, used)) return std::nullopt;

    Isomorphism iso;
    for (std::size_t i = 0; i < va.ids.size(); ++i)
        iso.vertex_map.emplace(va.ids[i], vb.ids[image[i]]);

    // Pair up edges between matched endpoints, sorted by id on both sides.
    for (std::size_t i = 0; i < va.ids.size(); ++i) {
        for (std::size_t j = i; j < va.ids.size(); ++j) {
            std::vector<EdgeId> lhs = edges_between(a, va.ids[i], va.ids[j]);
            if (lhs.empty()) continue;
            std::vector<EdgeId> rhs =
                edges_between(b, vb.ids[image[i]], vb.ids[image[j]]);
            for (std::size_t t = 0; t < lhs.size(); ++t) iso.edge_map.emplace(lhs[t], rhs[t]);
        }
    }
    return iso;
}

bool verify_isomorphism(const TopoGraph& a, const TopoGraph& b, const Isomorphism& iso) {
    if (iso.vertex_map.size() != a.vertex_count() || iso.vertex_map.size() != b.vertex_count())
        return false;
    if (iso.edge_map.size() != a.edge_count() || iso.edge_map.size() != b.edge_count())
        return false;

    std::set<VertexId> vertex_targets;
    for (const auto& [from, to] : iso.vertex_map) {
        if (!a.has_vertex(from) || !b.has_vertex(to)) return false;
        vertex_targets.insert(to);
    }
    if (vertex_targets.size() != iso.vertex_map.size()) return false;

    std::set<EdgeId> edge_targets;
    for (const auto& [from, to] : iso.edge_map) {
        if (!a.has_edge(from) || !b.has_edge(to)) return false;
        edge_targets.insert(to);
        const Edge& ea = a.edge(from);
        const Edge& eb = b.edge(to);
        const VertexId& mu = iso.vertex_map.at(ea.u);
        const VertexId& mv = iso.vertex_map.at(ea.v);
        if (!((eb.u == mu && eb.v == mv) || (eb.u == mv && eb.v == mu))) return false;
    }
    return edge_targets.size() == iso.edge_map.size();
}

std::string to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::component_count: return "component_count";
    case WitnessKind::order_signature: return "order_signature";
    case WitnessKind::depth_k_max: return "depth_k_max";
    case WitnessKind::reduced_nonisomorphic: return "reduced_nonisomorphic";
    }
    throw Error("unreachable witness kind");
}

Verdict are_homeomorphic(const TopoGraph& g, const TopoGraph& h) {
    ReducedForm rg = reduce(g);
    ReducedForm rh = reduce(h);

    Verdict verdict;
    if (rg.circle_count == rh.circle_count) {
        if (auto iso = find_isomorphism(rg.core, rh.core)) {
            iso->circle_count = rg.circle_count;
            verdict.homeomorphic = true;
            verdict.isomorphism = std::move(iso);
            return verdict;
        }
    }
    verdict.homeomorphic = false;
    verdict.witness = Witness{WitnessKind::reduced_nonisomorphic, 0, describe(rg), describe(rh)};
    return verdict;
}

Verdict distinguish(const TopoGraph& g, const TopoGraph& h, int max_depth) {
    if (max_depth < 0 || max_depth > 4) throw Error("max_depth must lie in [0, 4]");

    int cg = component_count(g);
    int ch = component_count(h);
    if (cg != ch) {
        Verdict v;
        v.witness = Witness{WitnessKind::component_count, 0, std::to_string(cg), std::to_string(ch)};
        return v;
    }

    OrderSignature sg = order_signature(g);
    OrderSignature sh = order_signature(h);
    if (!(sg == sh)) {
        Verdict v;
        v.witness = Witness{WitnessKind::order_signature, 0, to_string(sg), to_string(sh)};
        return v;
    }

    for (int k = 2; k <= max_depth; ++k) {
        int mg = max_components_after_k(g, k);
        int mh = max_components_after_k(h, k);
        if (mg != mh) {
            Verdict v;
            v.witness = Witness{WitnessKind::depth_k_max, k, std::to_string(mg), std::to_string(mh)};
            return v;
        }
    }

    return are_homeomorphic(g, h);
}

std::vector<std::vector<std::string>> classify(const std::vector<TopoGraph>& gs) {
    if (gs.empty()) throw Error("nothing to classify");
    {
        std::set<std::string> names;
        for (const TopoGraph& g : gs)
            if (!names.insert(g.name()).second)
                throw Error("duplicate name '" + g.name() + "'");
    }

    std::vector<std::size_t> representative; // index into gs, one per class
    std::vector<std::vector<std::string>> classes;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        bool placed = false;
        for (std::size_t c = 0; c < representative.size(); ++c) {
            if (are_homeomorphic(gs[i], gs[representative[c]]).homeomorphic) {
                classes[c].push_back(gs[i].name());
                placed = true;
                break;
            }
        }
        if (!placed) {
            representative.push_back(i);
            classes.push_back({gs[i].name()});
        }
    }

    for (auto& members : classes) std::sort(members.begin(), members.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return classes;
}

} // namespace topograph
