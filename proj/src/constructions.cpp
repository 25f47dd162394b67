#include "etaedge/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "etaedge/edge_coloring.hpp"

namespace etaedge {

namespace {

void need_params(const std::vector<int>& params, std::size_t count, const char* family) {
    if (params.size() != count)
        throw std::invalid_argument(std::string(family) + " takes " + std::to_string(count) +
                                    " parameter(s), got " + std::to_string(params.size()));
}

Graph make_cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1)
        throw std::invalid_argument("complete needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete_bipartite needs both sides nonempty");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Graph make_hypercube(int dim) {
    if (dim < 1 || dim > 20)
        throw std::invalid_argument("hypercube needs 1 <= dim <= 20");
    int n = 1 << dim;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if (int u = v ^ (1 << b); u > v)
                edges.emplace_back(v, u);
    return Graph(n, std::move(edges));
}

Graph make_petersen() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 5; ++i)
        edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i)
        edges.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i)
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Graph(10, std::move(edges));
}

Graph make_heawood() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 14; ++i)
        edges.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2)
        edges.emplace_back(std::min(i, (i + 5) % 14), std::max(i, (i + 5) % 14));
    return Graph(14, std::move(edges));
}

} // namespace

GraphFamily family_from_string(std::string_view name) {
    if (name == "cycle")
        return GraphFamily::Cycle;
    if (name == "complete")
        return GraphFamily::Complete;
    if (name == "complete_bipartite")
        return GraphFamily::CompleteBipartite;
    if (name == "hypercube")
        return GraphFamily::Hypercube;
    if (name == "petersen")
        return GraphFamily::Petersen;
    if (name == "heawood")
        return GraphFamily::Heawood;
    throw std::invalid_argument("unknown graph family: " + std::string(name));
}

std::string to_string(GraphFamily f) {
    switch (f) {
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Complete: return "complete";
    case GraphFamily::CompleteBipartite: return "complete_bipartite";
    case GraphFamily::Hypercube: return "hypercube";
    case GraphFamily::Petersen: return "petersen";
    case GraphFamily::Heawood: return "heawood";
    }
    return "?";
}

Graph make_named_graph(GraphFamily family, const std::vector<int>& params) {
    switch (family) {
    case GraphFamily::Cycle:
        need_params(params, 1, "cycle");
        return make_cycle(params[0]);
    case GraphFamily::Complete:
        need_params(params, 1, "complete");
        return make_complete(params[0]);
    case GraphFamily::CompleteBipartite:
        need_params(params, 2, "complete_bipartite");
        return make_complete_bipartite(params[0], params[1]);
    case GraphFamily::Hypercube:
        need_params(params, 1, "hypercube");
        return make_hypercube(params[0]);
    case GraphFamily::Petersen:
        need_params(params, 0, "petersen");
        return make_petersen();
    case GraphFamily::Heawood:
        need_params(params, 0, "heawood");
        return make_heawood();
    }
    throw std::invalid_argument("unknown graph family");
}

BuilderOutput build_high_resistance(int d, const Graph& h,
                                    const std::optional<EdgeColoring>& h_coloring,
                                    std::optional<EdgeId> subdivided_edge) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("builder needs an even d >= 4");
    auto hd = h.regular_degree();
    if (!hd || *hd != d)
        throw std::invalid_argument("template graph must be d-regular");
    if (!h.is_bipartite())
        throw std::invalid_argument("template graph must be bipartite");
    if (h.edge_count() == 0)
        throw std::invalid_argument("template graph must have edges");

    EdgeColoring base;
    if (h_coloring) {
        base = *h_coloring;
        if (base.universe != LabelSet::contiguous(1, d))
            throw std::invalid_argument("supplied coloring must use universe {1..d}");
        if (!is_proper(h, base))
            throw std::invalid_argument("supplied coloring is not proper");
    } else {
        SearchBudget budget;
        auto search = find_d_coloring(h, d, budget);
        if (search.feasibility != Feasibility::Yes)
            throw std::runtime_error("failed to d-color the bipartite template within budget");
        base = std::move(*search.witness);
    }

    EdgeId se = subdivided_edge.value_or(0);
    h.check_edge(se);
    auto [se_a, se_b] = h.endpoints(se);
    VertexId x = std::min(se_a, se_b);
    VertexId y = std::max(se_a, se_b);
    Label xy_color = base.labels[se];

    // Swap partner: smallest neighbor of y other than x; every such edge has
    // a color different from the subdivided edge's.
    VertexId w = -1;
    Label w_color = 0;
    for (auto [z, e] : h.neighbors(y)) {
        if (z == x)
            continue;
        if (base.labels[e] != xy_color) {
            w = z;
            w_color = base.labels[e];
            break;
        }
    }
    if (w == -1)
        throw std::logic_error("no swap partner next to the subdivided edge");

    int copies = d / 2;
    int n = h.vertex_count();
    VertexId merged = copies * n;

    BuilderOutput out;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<Label> labels;
    for (int i = 0; i < copies; ++i) {
        // Copy i's two pinned colors at the merged vertex.
        Label lo = std::min(xy_color, w_color);
        Label hi = std::max(xy_color, w_color);
        std::vector<Label> perm(d + 2);
        for (Label c = 1; c <= d + 1; ++c)
            perm[static_cast<std::size_t>(c)] = 0;
        perm[static_cast<std::size_t>(lo)] = 2 * i + 1;
        perm[static_cast<std::size_t>(hi)] = 2 * i + 2;
        perm[static_cast<std::size_t>(d + 1)] = d + 1;
        std::vector<char> target_taken(d + 1, 0);
        target_taken[2 * i] = 1;     // 2i+1, stored 0-based
        target_taken[2 * i + 1] = 1; // 2i+2
        for (Label c = 1; c <= d; ++c)
            if (perm[static_cast<std::size_t>(c)] == 0 && !target_taken[c - 1]) {
                perm[static_cast<std::size_t>(c)] = c;
                target_taken[c - 1] = 1;
            }
        std::vector<Label> free_targets;
        for (Label c = 1; c <= d; ++c)
            if (!target_taken[c - 1])
                free_targets.push_back(c);
        std::size_t next_free = 0;
        for (Label c = 1; c <= d; ++c)
            if (perm[static_cast<std::size_t>(c)] == 0)
                perm[static_cast<std::size_t>(c)] = free_targets[next_free++];

        VertexId offset = i * n;
        EdgeId swap_edge = h.find_edge(y, w).value();
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            if (e == se)
                continue;
            auto [a, b] = h.endpoints(e);
            edges.emplace_back(offset + a, offset + b);
            if (e == swap_edge) {
                labels.push_back(d + 1);
                out.heavy_class.push_back(static_cast<EdgeId>(edges.size()) - 1);
            } else {
                labels.push_back(perm[static_cast<std::size_t>(base.labels[e])]);
            }
        }
        edges.emplace_back(offset + x, merged);
        labels.push_back(perm[static_cast<std::size_t>(xy_color)]);
        edges.emplace_back(merged, offset + y);
        labels.push_back(perm[static_cast<std::size_t>(w_color)]);
    }

    out.graph = Graph(copies * n + 1, std::move(edges));
    out.coloring.labels = std::move(labels);
    out.coloring.universe = LabelSet::contiguous(1, d + 1);

    out.copy_map.resize(copies * n + 1);
    for (int i = 0; i < copies; ++i)
        for (VertexId v = 0; v < n; ++v)
            out.copy_map[i * n + v] = CopyMapEntry{false, i, v};
    out.copy_map[merged] = CopyMapEntry{true, -1, -1};

    if (out.graph.regular_degree() != d)
        throw std::logic_error("builder output is not d-regular");
    if (!is_proper(out.graph, out.coloring))
        throw std::logic_error("builder coloring is not proper");
    for (EdgeId e : out.heavy_class) {
        auto [a, b] = out.graph.endpoints(e);
        if (a == merged || b == merged)
            throw std::logic_error("heavy edge touches the identified vertex");
    }
    return out;
}

} // namespace etaedge
