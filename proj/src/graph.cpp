#include "etaedge/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace etaedge {

Graph::Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
    : n_(vertex_count), edges_(std::move(edges)), adj_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ")");
        adj_[u].emplace_back(v, e);
        adj_[v].emplace_back(u, e);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

std::pair<VertexId, VertexId> Graph::endpoints(EdgeId e) const {
    check_edge(e);
    return edges_[e];
}

const std::vector<std::pair<VertexId, EdgeId>>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    return find_edge(u, v).has_value();
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), std::make_pair(v, 0));
    if (it != adj_[u].end() && it->first == v)
        return it->second;
    return std::nullopt;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0)
        return 0;
    int d = degree(0);
    for (VertexId v = 1; v < n_; ++v)
        if (degree(v) != d)
            return std::nullopt;
    return d;
}

bool Graph::is_bipartite() const {
    return bipartition().has_value();
}

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> part(n_, -1);
    std::deque<VertexId> queue;
    for (VertexId start = 0; start < n_; ++start) {
        if (part[start] != -1)
            continue;
        part[start] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (auto [w, e] : adj_[u]) {
                (void)e;
                if (part[w] == -1) {
                    part[w] = 1 - part[u];
                    queue.push_back(w);
                } else if (part[w] == part[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return part;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

void Graph::check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_count())
        throw std::invalid_argument("edge id out of range: " + std::to_string(e));
}

void validate_walk(const Graph& g, const Walk& w) {
    const auto& vs = w.vertices;
    if (vs.size() < 2)
        throw std::invalid_argument("walk needs at least two vertices");
    for (VertexId v : vs)
        g.check_vertex(v);
    for (std::size_t k = 0; k + 1 < vs.size(); ++k)
        if (!g.adjacent(vs[k], vs[k + 1]))
            throw std::invalid_argument("walk step " + std::to_string(k) + " is not an edge");
    for (std::size_t k = 1; k + 1 < vs.size(); ++k)
        if (vs[k - 1] == vs[k + 1])
            throw std::invalid_argument("walk backtracks at position " + std::to_string(k));
}

void validate_cycle(const Graph& g, const Walk& w) {
    const auto& vs = w.vertices;
    if (vs.size() < 4 || vs.front() != vs.back())
        throw std::invalid_argument("cycle must be closed with at least three edges");
    std::set<VertexId> interior(vs.begin(), vs.end() - 1);
    if (interior.size() != vs.size() - 1)
        throw std::invalid_argument("cycle revisits a vertex");
    for (std::size_t k = 0; k + 1 < vs.size(); ++k)
        if (!g.adjacent(vs[k], vs[k + 1]))
            throw std::invalid_argument("cycle step " + std::to_string(k) + " is not an edge");
}

std::vector<EdgeId> walk_edges(const Graph& g, const Walk& w) {
    std::vector<EdgeId> out;
    out.reserve(w.vertices.size());
    for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k) {
        auto e = g.find_edge(w.vertices[k], w.vertices[k + 1]);
        if (!e)
            throw std::invalid_argument("walk uses a missing edge");
        out.push_back(*e);
    }
    return out;
}

namespace {

// Shortest cycle through edge e = dist(u,v) in G - e, plus one.
std::optional<int> shortest_cycle_through(const Graph& g, EdgeId e) {
    auto [source, target] = g.endpoints(e);
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<VertexId> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        if (u == target)
            return dist[u] + 1;
        for (auto [w, via] : g.neighbors(u)) {
            if (via == e || dist[w] != -1)
                continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto len = shortest_cycle_through(g, e);
        if (len && (!best || *len < *best))
            best = len;
    }
    return best;
}

std::vector<EdgeId> edge_neighbors(const Graph& g, EdgeId e) {
    g.check_edge(e);
    auto [u, v] = g.endpoints(e);
    std::vector<EdgeId> out;
    for (auto [w, f] : g.neighbors(u))
        if (f != e)
            out.push_back(f);
    for (auto [w, f] : g.neighbors(v))
        if (f != e)
            out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_two_reachable(const Graph& g, EdgeId e, EdgeId f) {
    g.check_edge(e);
    g.check_edge(f);
    auto [a1, a2] = g.endpoints(e);
    auto [b1, b2] = g.endpoints(f);
    // A path of length two between distinct endpoints is a common neighbor;
    // simplicity of the graph makes the midpoint distinct automatically.
    for (VertexId a : {a1, a2}) {
        for (VertexId b : {b1, b2}) {
            if (a == b)
                continue;
            const auto& na = g.neighbors(a);
            const auto& nb = g.neighbors(b);
            auto ia = na.begin();
            auto ib = nb.begin();
            while (ia != na.end() && ib != nb.end()) {
                if (ia->first < ib->first)
                    ++ia;
                else if (ib->first < ia->first)
                    ++ib;
                else
                    return true;
            }
        }
    }
    return false;
}

bool edge_in_triangle(const Graph& g, EdgeId e) {
    return is_two_reachable(g, e, e);
}

std::optional<EdgeId> find_unreachable_cycle_edge(const Graph& g, const Walk& cycle,
                                                  const std::vector<EdgeId>& s) {
    validate_cycle(g, cycle);
    std::vector<EdgeId> cycle_edges = walk_edges(g, cycle);
    std::set<EdgeId> on_cycle(cycle_edges.begin(), cycle_edges.end());
    for (EdgeId f : s) {
        g.check_edge(f);
        if (on_cycle.count(f))
            throw std::invalid_argument("s must be disjoint from the cycle's edges");
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
    for (EdgeId e : cycle_edges) {
        bool reachable = false;
        for (EdgeId f : s) {
            if (is_two_reachable(g, e, f)) {
                reachable = true;
                break;
            }
        }
        if (!reachable)
            return e;
    }
    return std::nullopt;
}

} // namespace etaedge
