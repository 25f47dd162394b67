#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace etaedge {

using VertexId = int;
using EdgeId = int;

/// Immutable simple undirected graph. Vertices are 0..n-1, edge ids are
/// dense 0..m-1 in insertion order. Self-loops and parallel edges are
/// rejected at construction.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Endpoints in the orientation they were inserted with.
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;

    /// Neighbors of v as (neighbor, edge id), sorted by neighbor id.
    const std::vector<std::pair<VertexId, EdgeId>>& neighbors(VertexId v) const;

    int degree(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    /// d if every vertex has degree d, otherwise nullopt.
    std::optional<int> regular_degree() const;

    bool is_bipartite() const;

    /// Two-sided bipartition by BFS; nullopt when an odd cycle exists.
    /// part[v] is 0 or 1; isolated vertices land in part 0.
    std::optional<std::vector<int>> bipartition() const;

    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
};

/// Walk through a graph: an ordered vertex list where consecutive vertices
/// are adjacent and the walk never immediately backtracks.
struct Walk {
    std::vector<VertexId> vertices;
};

/// Throws std::invalid_argument unless w is a valid non-backtracking walk in g.
void validate_walk(const Graph& g, const Walk& w);

/// Throws unless w is a closed cycle: first == last vertex, length >= 3,
/// interior vertices distinct, consecutive vertices adjacent.
void validate_cycle(const Graph& g, const Walk& w);

/// Edge ids traversed by the walk, in order.
std::vector<EdgeId> walk_edges(const Graph& g, const Walk& w);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Edges sharing an endpoint with e, excluding e itself, sorted by id.
std::vector<EdgeId> edge_neighbors(const Graph& g, EdgeId e);

/// True iff a path of exactly two edges (three distinct vertices) joins an
/// endpoint of e to an endpoint of f. Incident edges are always 2-reachable;
/// an edge is 2-reachable from itself exactly when it lies on a triangle.
bool is_two_reachable(const Graph& g, EdgeId e, EdgeId f);

/// True iff e lies on some 3-cycle.
bool edge_in_triangle(const Graph& g, EdgeId e);

/// Smallest-id edge of the cycle that is not 2-reachable from any edge of s,
/// or nullopt when every cycle edge is reachable. Requires s disjoint from
/// the cycle's edges.
std::optional<EdgeId> find_unreachable_cycle_edge(const Graph& g, const Walk& cycle,
                                                  const std::vector<EdgeId>& s);

} // namespace etaedge
