#include "etaedge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "etaedge/additive.hpp"

namespace etaedge {
namespace oracle {

namespace {

constexpr int kMaxSearchDegree = 31;

class ChronoColorability {
public:
    ChronoColorability(const Graph& g, int d, SearchBudget& budget)
        : g_(g), d_(d), budget_(budget), avail_(g.vertex_count(), (std::uint32_t{1} << d) - 1),
          color_(g.edge_count(), 0) {
        // frontier at position k: vertices touched both before and from k on
        std::vector<int> first(g.vertex_count(), g.edge_count());
        std::vector<int> last(g.vertex_count(), -1);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            for (VertexId v : {a, b}) {
                first[v] = std::min(first[v], e);
                last[v] = std::max(last[v], e);
            }
        }
        frontier_.resize(g.edge_count() + 1);
        for (int k = 1; k <= g.edge_count(); ++k)
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (first[v] < k && last[v] >= k)
                    frontier_[k].push_back(v);
    }

    Feasibility run(EdgeColoring* witness) {
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(v) > d_)
                return Feasibility::No;
        bool sat = dfs(0);
        if (exhausted_)
            return Feasibility::Unknown;
        if (!sat)
            return Feasibility::No;
        if (witness) {
            witness->universe = LabelSet::contiguous(1, d_);
            witness->labels.assign(color_.begin(), color_.end());
        }
        return Feasibility::Yes;
    }

private:
    std::string state_key(int k) const {
        std::string key(sizeof(int) + frontier_[k].size() * sizeof(std::uint32_t), '\0');
        std::memcpy(key.data(), &k, sizeof(int));
        char* out = key.data() + sizeof(int);
        for (VertexId v : frontier_[k]) {
            std::memcpy(out, &avail_[v], sizeof(std::uint32_t));
            out += sizeof(std::uint32_t);
        }
        return key;
    }

    bool dfs(int k) {
        if (k == g_.edge_count())
            return true;
        std::string key = state_key(k);
        if (refuted_.count(key))
            return false;
        auto [a, b] = g_.endpoints(k);
        std::uint32_t options = avail_[a] & avail_[b];
        while (options) {
            int c = std::countr_zero(options) + 1;
            options &= options - 1;
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            std::uint32_t bit = std::uint32_t{1} << (c - 1);
            avail_[a] &= ~bit;
            avail_[b] &= ~bit;
            color_[k] = c;
            if (dfs(k + 1))
                return true;
            color_[k] = 0;
            avail_[a] |= bit;
            avail_[b] |= bit;
            if (exhausted_)
                return false;
        }
        refuted_.insert(std::move(key));
        return false;
    }

    const Graph& g_;
    int d_;
    SearchBudget& budget_;
    std::vector<std::uint32_t> avail_;
    std::vector<int> color_;
    std::vector<std::vector<VertexId>> frontier_;
    std::unordered_set<std::string> refuted_;
    bool exhausted_ = false;
};

struct SubgraphWithMap {
    Graph graph;
    std::vector<EdgeId> to_host;
};

SubgraphWithMap remove_edges(const Graph& g, const std::vector<EdgeId>& removed) {
    std::vector<char> drop(g.edge_count(), 0);
    for (EdgeId e : removed)
        drop[e] = 1;
    SubgraphWithMap out;
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

// Depth-first enumeration of proper colorings from a fixed label list,
// edges in id order, labels ascending. Calls `leaf` on every complete
// proper coloring until it returns true. Optionally prunes on equal
// completed neighbor sums (sound for the additive search: once every edge
// incident to e is colored, e's neighbor sum is final).
class ProperEnumerator {
public:
    ProperEnumerator(const Graph& g, std::vector<Label> labels, SearchBudget& budget,
                     bool prune_equal_sums)
        : g_(g), labels_(std::move(labels)), budget_(budget), prune_sums_(prune_equal_sums),
          color_(g.edge_count(), 0), partial_sum_(g.edge_count(), 0),
          uncolored_neighbors_(g.edge_count(), 0), neighbors_(g.edge_count()) {
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            neighbors_[e] = edge_neighbors(g_, e);
            uncolored_neighbors_[e] = static_cast<int>(neighbors_[e].size());
        }
    }

    // Returns Yes when leaf accepted a coloring, No when the enumeration
    // finished without acceptance, Unknown on budget exhaustion.
    template <typename Leaf>
    Feasibility run(Leaf&& leaf) {
        leaf_ = std::function<bool(const std::vector<Label>&)>(std::forward<Leaf>(leaf));
        bool accepted = dfs(0);
        if (exhausted_)
            return Feasibility::Unknown;
        return accepted ? Feasibility::Yes : Feasibility::No;
    }

private:
    bool proper_here(EdgeId e, Label l) const {
        for (EdgeId f : neighbors_[e])
            if (color_[f] == l)
                return false;
        return true;
    }

    // After coloring e, an incident pair of edges with fully colored
    // neighborhoods and equal sums can never be fixed later.
    bool sums_viable(EdgeId e) const {
        for (EdgeId f : neighbors_[e]) {
            if (uncolored_neighbors_[f] != 0)
                continue;
            for (EdgeId h : neighbors_[f]) {
                if (uncolored_neighbors_[h] != 0)
                    continue;
                if (partial_sum_[f] == partial_sum_[h])
                    return false;
            }
        }
        return true;
    }

    bool dfs(EdgeId e) {
        if (e == g_.edge_count())
            return leaf_(color_);
        for (Label l : labels_) {
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            if (!proper_here(e, l))
                continue;
            color_[e] = l;
            for (EdgeId f : neighbors_[e]) {
                partial_sum_[f] += l;
                --uncolored_neighbors_[f];
            }
            if (!prune_sums_ || sums_viable(e)) {
                if (dfs(e + 1))
                    return true;
            }
            for (EdgeId f : neighbors_[e]) {
                partial_sum_[f] -= l;
                ++uncolored_neighbors_[f];
            }
            color_[e] = 0;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    std::vector<Label> labels_;
    SearchBudget& budget_;
    bool prune_sums_;
    std::vector<Label> color_;
    std::vector<Label> partial_sum_;
    std::vector<int> uncolored_neighbors_;
    std::vector<std::vector<EdgeId>> neighbors_;
    std::function<bool(const std::vector<Label>&)> leaf_;
    bool exhausted_ = false;
};

} // namespace

Feasibility d_colorable(const Graph& g, int d, SearchBudget& budget, EdgeColoring* witness) {
    if (d < 0)
        throw std::invalid_argument("color count must be nonnegative");
    if (d > kMaxSearchDegree)
        throw std::invalid_argument("degree too large for exact coloring search");
    if (g.edge_count() == 0) {
        if (witness)
            *witness = EdgeColoring{{}, d > 0 ? LabelSet::contiguous(1, d) : LabelSet{}};
        return Feasibility::Yes;
    }
    if (d == 0)
        return Feasibility::No;
    ChronoColorability search(g, d, budget);
    return search.run(witness);
}

EtaResult exact_eta_p_prime(const Graph& g, Label max_label, SearchBudget budget) {
    if (max_label < 1)
        throw std::invalid_argument("max_label must be positive");
    EtaResult out;
    for (Label k = 1; k <= max_label; ++k) {
        std::vector<Label> labels;
        for (Label l = 1; l <= k; ++l)
            labels.push_back(l);
        LabelSet universe(labels);
        ProperEnumerator enumerate(g, labels, budget, /*prune_equal_sums=*/true);
        std::optional<EdgeColoring> found;
        Feasibility status = enumerate.run([&](const std::vector<Label>& colors) {
            EdgeColoring c{colors, universe};
            if (!verify_additive(g, c, /*require_proper=*/true).ok)
                return false;
            found = std::move(c);
            return true;
        });
        if (status == Feasibility::Unknown)
            return out;
        if (status == Feasibility::Yes) {
            out.status = Feasibility::Yes;
            out.value = k;
            out.witness = std::move(found);
            return out;
        }
    }
    out.status = Feasibility::No;
    return out;
}

ResistanceResult exact_resistance(const Graph& g, SearchBudget budget) {
    auto dopt = g.regular_degree();
    if (!dopt)
        throw std::invalid_argument("exact_resistance needs a regular graph");
    int d = *dopt;
    ResistanceResult out;
    std::vector<EdgeId> chosen;
    std::vector<char> used(g.vertex_count(), 0);
    bool unknown = false;

    // Lexicographic matchings of each size in turn; the first removable
    // matching leaving a d-colorable graph gives the answer.
    std::function<bool(EdgeId, int)> try_matchings = [&](EdgeId start, int want) -> bool {
        if (want == 0) {
            auto sub = remove_edges(g, chosen);
            EdgeColoring w;
            Feasibility feas = d_colorable(sub.graph, d, budget, &w);
            if (feas == Feasibility::Unknown) {
                unknown = true;
                return true;
            }
            if (feas == Feasibility::No)
                return false;
            EdgeColoring full;
            full.universe = LabelSet::contiguous(1, d + 1);
            full.labels.assign(g.edge_count(), d + 1);
            for (std::size_t i = 0; i < sub.to_host.size(); ++i)
                full.labels[sub.to_host[i]] = w.labels[i];
            out.known = true;
            out.value = static_cast<int>(chosen.size());
            out.witness = std::move(full);
            return true;
        }
        for (EdgeId e = start; e < g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            if (used[a] || used[b])
                continue;
            chosen.push_back(e);
            used[a] = used[b] = 1;
            bool stop = try_matchings(e + 1, want - 1);
            used[a] = used[b] = 0;
            chosen.pop_back();
            if (stop)
                return true;
        }
        return false;
    };

    for (int k = 0; k <= g.edge_count(); ++k) {
        if (try_matchings(0, k))
            break;
    }
    if (unknown)
        return ResistanceResult{};
    if (!out.known)
        throw std::logic_error("resistance enumeration found no coloring at any size");
    return out;
}

StrongSetResult verify_strong_set(const Graph& g, const LabelSet& a, SearchBudget budget) {
    if (a.empty())
        throw std::invalid_argument("label set must be nonempty");
    StrongSetResult out;
    auto d = g.regular_degree();
    if (d && a.size() == static_cast<std::size_t>(*d) + 1 && difference_condition_holds(a)) {
        out.status = Feasibility::Yes;
        out.via_shortcut = true;
        return out;
    }
    ProperEnumerator enumerate(g, a.values(), budget, /*prune_equal_sums=*/false);
    bool any_proper = false;
    Feasibility status = enumerate.run([&](const std::vector<Label>& colors) {
        any_proper = true;
        EdgeColoring c{colors, a};
        if (verify_additive(g, c).ok)
            return false; // keep enumerating
        out.counterexample = std::move(c);
        return true;
    });
    if (status == Feasibility::Unknown)
        return out;
    if (status == Feasibility::Yes) {
        out.status = Feasibility::No;
        return out;
    }
    if (!any_proper)
        throw std::invalid_argument("graph admits no proper coloring from the label set");
    out.status = Feasibility::Yes;
    return out;
}

} // namespace oracle
} // namespace etaedge
