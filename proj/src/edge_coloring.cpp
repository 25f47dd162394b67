#include "etaedge/edge_coloring.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace etaedge {

namespace {

// Bookkeeping for the fan-rotation coloring: which edge carries which color
// at each vertex. Color 0 means "uncolored".
class FanColorer {
public:
    FanColorer(const Graph& g, int colors)
        : g_(g), colors_(colors), color_(g.edge_count(), 0),
          at_(static_cast<std::size_t>(g.vertex_count()), std::vector<EdgeId>(colors + 1, -1)) {}

    std::vector<Label> run() {
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            color_edge(e);
        return std::vector<Label>(color_.begin(), color_.end());
    }

private:
    int free_color(VertexId v) const {
        for (int c = 1; c <= colors_; ++c)
            if (at_[v][c] == -1)
                return c;
        throw std::logic_error("no free color at vertex " + std::to_string(v));
    }

    VertexId other_end(EdgeId e, VertexId v) const {
        auto [a, b] = g_.endpoints(e);
        return a == v ? b : a;
    }

    void set_color(EdgeId e, int c) {
        auto [a, b] = g_.endpoints(e);
        if (color_[e] != 0) {
            at_[a][color_[e]] = -1;
            at_[b][color_[e]] = -1;
        }
        color_[e] = c;
        if (c != 0) {
            at_[a][c] = e;
            at_[b][c] = e;
        }
    }

    // Swap colors c and d along the maximal alternating path leaving u.
    void invert_path(VertexId u, int c, int d) {
        std::vector<EdgeId> path;
        VertexId cur = u;
        int want = d;
        while (true) {
            EdgeId e = at_[cur][want];
            if (e == -1)
                break;
            path.push_back(e);
            cur = other_end(e, cur);
            want = want == d ? c : d;
        }
        for (EdgeId e : path) {
            auto [a, b] = g_.endpoints(e);
            at_[a][color_[e]] = -1;
            at_[b][color_[e]] = -1;
        }
        for (EdgeId e : path) {
            auto [a, b] = g_.endpoints(e);
            color_[e] = color_[e] == c ? d : c;
            at_[a][color_[e]] = e;
            at_[b][color_[e]] = e;
        }
    }

    void color_edge(EdgeId uncolored) {
        auto [p, q] = g_.endpoints(uncolored);
        VertexId u = std::min(p, q);
        std::vector<VertexId> fan{std::max(p, q)};
        std::vector<char> in_fan(g_.vertex_count(), 0);
        in_fan[fan[0]] = 1;
        while (true) {
            VertexId last = fan.back();
            VertexId next = -1;
            for (auto [z, e] : g_.neighbors(u)) {
                if (in_fan[z] || color_[e] == 0)
                    continue;
                if (at_[last][color_[e]] == -1) {
                    next = z;
                    break;
                }
            }
            if (next == -1)
                break;
            fan.push_back(next);
            in_fan[next] = 1;
        }

        int c = free_color(u);
        int d = free_color(fan.back());
        if (at_[u][d] != -1)
            invert_path(u, c, d);

        // After the inversion the fan may be broken; find the first prefix
        // vertex where d is free and the prefix is still a fan.
        std::size_t pivot = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int col = color_[*g_.find_edge(u, fan[i])];
                if (col == 0 || at_[fan[i - 1]][col] != -1)
                    break; // prefix no longer a fan past this point
            }
            if (at_[fan[i]][d] == -1) {
                pivot = i;
                break;
            }
        }
        if (pivot == fan.size())
            throw std::logic_error("fan rotation found no pivot");

        std::vector<EdgeId> fan_edge(pivot + 1);
        for (std::size_t i = 0; i <= pivot; ++i)
            fan_edge[i] = *g_.find_edge(u, fan[i]);
        std::vector<int> shifted(pivot + 1);
        for (std::size_t i = 0; i < pivot; ++i)
            shifted[i] = color_[fan_edge[i + 1]];
        shifted[pivot] = d;
        for (std::size_t i = 1; i <= pivot; ++i)
            set_color(fan_edge[i], 0);
        for (std::size_t i = 0; i <= pivot; ++i)
            set_color(fan_edge[i], shifted[i]);
        if (fan_edge[0] != uncolored)
            throw std::logic_error("fan rotation lost the edge being colored");
    }

    const Graph& g_;
    int colors_;
    std::vector<int> color_;
    std::vector<std::vector<EdgeId>> at_;
};

int max_degree(const Graph& g) {
    int md = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        md = std::max(md, g.degree(v));
    return md;
}

constexpr int kMaxSearchDegree = 31;

// Exact d-colorability, most-constrained edge first. Availability masks use
// bit c-1 for color c.
class MrvSearch {
public:
    MrvSearch(const Graph& g, int d, SearchBudget& budget)
        : g_(g), d_(d), budget_(budget), full_((d >= 64 ? 0 : (std::uint64_t{1} << d) - 1)),
          avail_(g.vertex_count(), full_), uncolored_deg_(g.vertex_count()),
          color_(g.edge_count(), 0) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            uncolored_deg_[v] = g.degree(v);
    }

    Feasibility run() {
        if (d_ > kMaxSearchDegree)
            throw std::invalid_argument("degree too large for exact coloring search");
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(v) > d_)
                return Feasibility::No;
        // d matchings of at most floor(n/2) edges each cannot cover more.
        if (static_cast<long long>(g_.edge_count()) >
            static_cast<long long>(d_) * (g_.vertex_count() / 2))
            return Feasibility::No;
        exhausted_ = false;
        bool sat = dfs(g_.edge_count());
        if (sat)
            return Feasibility::Yes;
        return exhausted_ ? Feasibility::Unknown : Feasibility::No;
    }

    const std::vector<int>& colors() const { return color_; }

private:
    bool dfs(int remaining) {
        if (remaining == 0)
            return true;
        EdgeId pick = -1;
        int best = d_ + 1;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (color_[e] != 0)
                continue;
            auto [a, b] = g_.endpoints(e);
            int options = std::popcount(avail_[a] & avail_[b]);
            if (options < best) {
                best = options;
                pick = e;
                if (best == 0)
                    break;
            }
        }
        if (best == 0)
            return false;
        auto [a, b] = g_.endpoints(pick);
        std::uint64_t mask = avail_[a] & avail_[b];
        while (mask) {
            int c = std::countr_zero(mask) + 1;
            mask &= mask - 1;
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            assign(pick, c);
            bool viable = std::popcount(avail_[a]) >= uncolored_deg_[a] &&
                          std::popcount(avail_[b]) >= uncolored_deg_[b];
            if (viable && dfs(remaining - 1))
                return true;
            unassign(pick, c);
            if (exhausted_)
                return false;
        }
        return false;
    }

    void assign(EdgeId e, int c) {
        auto [a, b] = g_.endpoints(e);
        color_[e] = c;
        avail_[a] &= ~(std::uint64_t{1} << (c - 1));
        avail_[b] &= ~(std::uint64_t{1} << (c - 1));
        --uncolored_deg_[a];
        --uncolored_deg_[b];
    }

    void unassign(EdgeId e, int c) {
        auto [a, b] = g_.endpoints(e);
        color_[e] = 0;
        avail_[a] |= std::uint64_t{1} << (c - 1);
        avail_[b] |= std::uint64_t{1} << (c - 1);
        ++uncolored_deg_[a];
        ++uncolored_deg_[b];
    }

    const Graph& g_;
    int d_;
    SearchBudget& budget_;
    std::uint64_t full_;
    std::vector<std::uint64_t> avail_;
    std::vector<int> uncolored_deg_;
    std::vector<int> color_;
    bool exhausted_ = false;
};

// Subgraph with a set of edges removed; keeps the vertex set and relative
// edge order, and remembers the id mapping back into the host graph.
struct RemovedEdges {
    Graph graph;
    std::vector<EdgeId> to_host;
};

RemovedEdges remove_edges(const Graph& g, const std::vector<EdgeId>& removed) {
    std::vector<char> drop(g.edge_count(), 0);
    for (EdgeId e : removed)
        drop[e] = 1;
    RemovedEdges out;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (drop[e])
            continue;
        edges.push_back(g.endpoints(e));
        out.to_host.push_back(e);
    }
    out.graph = Graph(g.vertex_count(), std::move(edges));
    return out;
}

// Lexicographic enumeration of k-edge matchings; visit returns true to stop.
bool for_each_matching(const Graph& g, int k, const std::function<bool(const std::vector<EdgeId>&)>& visit) {
    std::vector<EdgeId> chosen;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<bool(EdgeId)> rec = [&](EdgeId start) -> bool {
        if (static_cast<int>(chosen.size()) == k)
            return visit(chosen);
        for (EdgeId e = start; e < g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            if (used[a] || used[b])
                continue;
            if (g.edge_count() - e < k - static_cast<int>(chosen.size()))
                break;
            chosen.push_back(e);
            used[a] = used[b] = 1;
            if (rec(e + 1))
                return true;
            used[a] = used[b] = 0;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace

EdgeColoring proper_edge_color(const Graph& g) {
    int q = max_degree(g) + 1;
    FanColorer colorer(g, q);
    EdgeColoring c;
    c.labels = colorer.run();
    c.universe = LabelSet::contiguous(1, q);
    return c;
}

ColorSearchResult find_d_coloring(const Graph& g, int d, SearchBudget& budget) {
    if (d < 0)
        throw std::invalid_argument("color count must be nonnegative");
    ColorSearchResult out;
    if (g.edge_count() == 0) {
        out.feasibility = Feasibility::Yes;
        out.witness = EdgeColoring{{}, d > 0 ? LabelSet::contiguous(1, d) : LabelSet{}};
        return out;
    }
    if (d == 0) {
        out.feasibility = Feasibility::No;
        return out;
    }
    MrvSearch search(g, d, budget);
    out.feasibility = search.run();
    if (out.feasibility == Feasibility::Yes) {
        EdgeColoring c;
        c.universe = LabelSet::contiguous(1, d);
        c.labels.assign(search.colors().begin(), search.colors().end());
        out.witness = std::move(c);
    }
    return out;
}

ClassResult classify(const Graph& g, SearchBudget budget) {
    auto d = g.regular_degree();
    if (!d)
        throw std::invalid_argument("classify needs a regular graph");
    ClassResult out;
    if (g.is_bipartite()) {
        auto search = find_d_coloring(g, *d, budget);
        if (search.feasibility != Feasibility::Yes)
            return out; // budget ran out building the witness
        out.kind = ClassResult::Kind::Class1;
        out.certificate = ClassResult::Certificate::Bipartite;
        out.witness = std::move(search.witness);
        return out;
    }
    if (*d % 2 == 0 && g.vertex_count() % 2 == 1) {
        out.kind = ClassResult::Kind::Class2;
        out.certificate = ClassResult::Certificate::Counting;
        out.witness = proper_edge_color(g);
        return out;
    }
    auto search = find_d_coloring(g, *d, budget);
    switch (search.feasibility) {
    case Feasibility::Yes:
        out.kind = ClassResult::Kind::Class1;
        out.certificate = ClassResult::Certificate::Exhaustive;
        out.witness = std::move(search.witness);
        return out;
    case Feasibility::No:
        out.kind = ClassResult::Kind::Class2;
        out.certificate = ClassResult::Certificate::Exhaustive;
        out.witness = proper_edge_color(g);
        return out;
    case Feasibility::Unknown:
        return out;
    }
    return out;
}

ResistanceResult resistance(const Graph& g, SearchBudget budget) {
    auto dopt = g.regular_degree();
    if (!dopt)
        throw std::invalid_argument("resistance needs a regular graph");
    int d = *dopt;
    ResistanceResult out;

    ClassResult cls = classify(g, budget);
    if (cls.kind == ClassResult::Kind::Unknown)
        return out;
    if (cls.kind == ClassResult::Kind::Class1) {
        out.known = true;
        out.value = 0;
        // Report over the (d+1)-label universe so class d+1 is visibly empty.
        EdgeColoring w = *cls.witness;
        w.universe = LabelSet::contiguous(1, d + 1);
        out.witness = std::move(w);
        return out;
    }

    // The smallest class of any proper (d+1)-coloring bounds the answer.
    EdgeColoring vizing = *cls.witness;
    std::vector<int> class_size(d + 2, 0);
    for (Label l : vizing.labels)
        ++class_size[static_cast<int>(l)];
    int k_max = g.edge_count();
    for (int c = 1; c <= d + 1; ++c)
        k_max = std::min(k_max, class_size[c]);

    for (int k = 1; k <= k_max; ++k) {
        bool unknown = false;
        bool found = for_each_matching(g, k, [&](const std::vector<EdgeId>& f) {
            auto sub = remove_edges(g, f);
            auto search = find_d_coloring(sub.graph, d, budget);
            if (search.feasibility == Feasibility::Unknown) {
                unknown = true;
                return true;
            }
            if (search.feasibility == Feasibility::No)
                return false;
            EdgeColoring w;
            w.universe = LabelSet::contiguous(1, d + 1);
            w.labels.assign(g.edge_count(), d + 1);
            for (std::size_t i = 0; i < sub.to_host.size(); ++i)
                w.labels[sub.to_host[i]] = search.witness->labels[i];
            out.known = true;
            out.value = k;
            out.witness = std::move(w);
            return true;
        });
        if (unknown)
            return ResistanceResult{};
        if (found)
            return out;
    }
    throw std::logic_error("resistance search passed its upper bound");
}

} // namespace etaedge
