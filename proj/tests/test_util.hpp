#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "etaedge/additive.hpp"
#include "etaedge/coloring.hpp"
#include "etaedge/constructions.hpp"
#include "etaedge/graph.hpp"

namespace etaedge::testing {

/// Random proper edge coloring from the given labels: backtracking over
/// edges in id order with a per-edge label order shuffled by the seeded
/// generator. Deterministic per seed; nullopt if no proper coloring exists.
inline std::optional<EdgeColoring> sample_proper_coloring(const Graph& g, const LabelSet& labels,
                                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Label>> order(g.edge_count(), labels.values());
    for (auto& o : order)
        std::shuffle(o.begin(), o.end(), rng);
    std::vector<Label> color(g.edge_count(), 0);
    auto ok_here = [&](EdgeId e, Label l) {
        for (EdgeId f : edge_neighbors(g, e))
            if (color[f] == l)
                return false;
        return true;
    };
    std::function<bool(EdgeId)> go = [&](EdgeId e) -> bool {
        if (e == g.edge_count())
            return true;
        for (Label l : order[e]) {
            if (!ok_here(e, l))
                continue;
            color[e] = l;
            if (go(e + 1))
                return true;
            color[e] = 0;
        }
        return false;
    };
    if (!go(0))
        return std::nullopt;
    return EdgeColoring{color, labels};
}

/// Shortest cycle by enumerating all simple cycles with a DFS from every
/// start vertex; intended as an independent check on small graphs.
inline std::optional<int> brute_force_girth(const Graph& g) {
    std::optional<int> best;
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<VertexId> path;
    std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId v) {
        for (auto [w, e] : g.neighbors(v)) {
            if (w == start && path.size() >= 3) {
                int len = static_cast<int>(path.size());
                if (!best || len < *best)
                    best = len;
            }
            if (!on_path[w] && w > start) { // canonical: smallest vertex first
                on_path[w] = 1;
                path.push_back(w);
                extend(start, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        on_path.assign(g.vertex_count(), 0);
        on_path[s] = 1;
        path = {s};
        extend(s, s);
    }
    return best;
}

/// Seeded random simple graph with n vertices and m distinct edges.
inline Graph random_graph(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<VertexId, VertexId>> chosen;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<VertexId, VertexId>> edges;
    int guard = 0;
    while (static_cast<int>(edges.size()) < m && guard++ < 100000) {
        int u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        auto key = std::minmax(u, v);
        if (chosen.insert(key).second)
            edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

/// All proper colorings of g from the labels, by plain enumeration with no
/// pruning beyond properness; used to freeze expected values independently.
inline std::vector<std::vector<Label>> enumerate_proper_colorings(const Graph& g,
                                                                  const std::vector<Label>& labels) {
    std::vector<std::vector<Label>> out;
    std::vector<Label> color(g.edge_count(), 0);
    std::function<void(EdgeId)> go = [&](EdgeId e) {
        if (e == g.edge_count()) {
            out.push_back(color);
            return;
        }
        for (Label l : labels) {
            bool ok = true;
            for (EdgeId f : edge_neighbors(g, e))
                if (color[f] == l) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[e] = l;
            go(e + 1);
            color[e] = 0;
        }
    };
    go(0);
    return out;
}

inline Graph petersen() { return make_named_graph(GraphFamily::Petersen); }
inline Graph cycle(int n) { return make_named_graph(GraphFamily::Cycle, {n}); }
inline Graph complete(int n) { return make_named_graph(GraphFamily::Complete, {n}); }
inline Graph complete_bipartite(int a, int b) {
    return make_named_graph(GraphFamily::CompleteBipartite, {a, b});
}
inline Graph hypercube(int dim) { return make_named_graph(GraphFamily::Hypercube, {dim}); }
inline Graph heawood() { return make_named_graph(GraphFamily::Heawood); }

inline EdgeColoring coloring_over(std::vector<Label> labels, LabelSet universe) {
    return EdgeColoring{std::move(labels), std::move(universe)};
}

} // namespace etaedge::testing
