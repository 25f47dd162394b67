#include "etaedge/spaced.hpp"

#include <algorithm>
#include <stdexcept>

#include "etaedge/additive.hpp"

namespace etaedge {

namespace {

int required_degree(const Graph& g, const EdgeColoring& c, const char* who) {
    auto d = g.regular_degree();
    if (!d)
        throw std::invalid_argument(std::string(who) + " needs a regular graph");
    if (c.universe != LabelSet::contiguous(1, *d + 1))
        throw std::invalid_argument(std::string(who) + " needs universe {1..d+1}");
    return *d;
}

std::vector<EdgeId> heavy_edges(const Graph& g, const EdgeColoring& c, int d) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (c.labels[e] == d + 1)
            out.push_back(e);
    return out;
}

} // namespace

bool is_spaced(const Graph& g, const EdgeColoring& c) {
    int d = required_degree(g, c, "is_spaced");
    if (!is_proper(g, c))
        throw std::invalid_argument("is_spaced needs a proper coloring");
    std::vector<EdgeId> heavy = heavy_edges(g, c, d);
    for (std::size_t i = 0; i < heavy.size(); ++i)
        for (std::size_t j = i; j < heavy.size(); ++j)
            if (is_two_reachable(g, heavy[i], heavy[j]))
                return false;
    return true;
}

EdgeColoring spaced_to_additive(const Graph& g, const EdgeColoring& c) {
    int d = required_degree(g, c, "spaced_to_additive");
    if (!is_spaced(g, c))
        throw std::invalid_argument("coloring is not spaced");
    std::vector<Label> universe{1};
    for (int j = 1; j <= d; ++j)
        universe.push_back(2 * j);
    EdgeColoring out;
    out.universe = LabelSet(std::move(universe));
    out.labels.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out.labels[e] = c.labels[e] == d + 1 ? 1 : 2 * c.labels[e];
    auto verdict = verify_additive(g, out, /*require_proper=*/true);
    if (!verdict.ok)
        throw std::logic_error("spaced relabeling failed to be proper additive");
    return out;
}

EdgeColoring TaggedColoring::projection() const {
    EdgeColoring out;
    out.labels = labels;
    out.universe = LabelSet::contiguous(1, d + 1);
    return out;
}

EdgeId TaggedColoring::tagged_edge(int index) const {
    EdgeId found = -1;
    for (EdgeId e = 0; e < static_cast<EdgeId>(tag.size()); ++e) {
        if (tag[e] == index) {
            if (found != -1)
                throw std::logic_error("tag " + std::to_string(index) + " appears twice");
            found = e;
        }
    }
    if (found == -1)
        throw std::logic_error("tag " + std::to_string(index) + " not present");
    return found;
}

TaggedColoring initial_tagging(const Graph& g, const EdgeColoring& c) {
    int d = required_degree(g, c, "initial_tagging");
    validate_coloring(g, c);
    TaggedColoring t;
    t.d = d;
    t.labels = c.labels;
    t.tag.assign(g.edge_count(), 0);
    int next = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (c.labels[e] == d + 1)
            t.tag[e] = next++;
    return t;
}

namespace {

// Property P_i: the projection is proper and no two tags with indices <= i
// (self-pairs included) are mutually 2-reachable.
bool phase_property_holds(const Graph& g, const TaggedColoring& t, int i) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (t.labels[nb[a].second] == t.labels[nb[b].second])
                    return false;
    }
    std::vector<EdgeId> low_tags;
    for (EdgeId e = 0; e < static_cast<EdgeId>(t.tag.size()); ++e)
        if (t.tag[e] >= 1 && t.tag[e] <= i)
            low_tags.push_back(e);
    for (std::size_t a = 0; a < low_tags.size(); ++a)
        for (std::size_t b = a; b < low_tags.size(); ++b)
            if (is_two_reachable(g, low_tags[a], low_tags[b]))
                return false;
    return true;
}

Label smallest_missing_color(const Graph& g, const TaggedColoring& t, VertexId v) {
    std::vector<char> present(t.d + 1, 0);
    for (auto [w, e] : g.neighbors(v))
        if (t.tag[e] == 0)
            present[static_cast<std::size_t>(t.labels[e])] = 1;
    for (Label c = 1; c <= t.d; ++c)
        if (!present[static_cast<std::size_t>(c)])
            return c;
    throw std::logic_error("no color of {1..d} missing at vertex " + std::to_string(v));
}

} // namespace

SpacedRunResult make_spaced(const Graph& g, const EdgeColoring& c, std::int64_t step_budget) {
    int d = required_degree(g, c, "make_spaced");
    if (!is_proper(g, c))
        throw std::invalid_argument("make_spaced needs a proper coloring");
    TaggedColoring t = initial_tagging(g, c);
    int r = static_cast<int>(heavy_edges(g, c, d).size());
    if (r < 1)
        throw std::invalid_argument("make_spaced needs at least one heavy edge");
    if (step_budget < 0)
        step_budget = 6 * static_cast<std::int64_t>(g.edge_count());

    SpacedRunResult result;
    result.heavy_count = r;
    auto gg = girth(g);
    result.girth_hypothesis_held = !gg || *gg >= 6 * r - 5;

    std::int64_t steps_taken = 0;
    for (int i = 1; i <= r; ++i) {
        PhaseTrace phase;
        phase.phase = i;
        EdgeId tag_edge = t.tagged_edge(i);
        auto [p, q] = g.endpoints(tag_edge);
        phase.orientation_start = std::min(p, q);
        std::vector<VertexId> walk{std::min(p, q), std::max(p, q)};
        Label previous_color = 0;
        int step_index = 0;
        while (true) {
            if (phase_property_holds(g, t, i)) {
                phase.satisfied = true;
                phase.satisfied_at_step = step_index;
                break;
            }
            if (steps_taken >= step_budget) {
                result.trace.phases.push_back(std::move(phase));
                result.success = false;
                result.tagged = std::move(t);
                result.steps_taken = steps_taken;
                return result;
            }
            VertexId tail = walk[walk.size() - 2];
            VertexId head = walk.back();
            Label a = smallest_missing_color(g, t, tail);
            if (a == previous_color)
                throw std::logic_error("missing color repeated the previous step's choice");
            EdgeId ahead = -1;
            VertexId next = -1;
            for (auto [z, e] : g.neighbors(head)) {
                if (t.tag[e] == 0 && t.labels[e] == a) {
                    ahead = e;
                    next = z;
                    break;
                }
            }
            if (ahead == -1)
                throw MinimalityViolation(head);
            if (next == tail)
                throw std::logic_error("walk tried to backtrack");
            EdgeId trailing = *g.find_edge(tail, head);
            if (t.tag[trailing] != i)
                throw std::logic_error("walk lost its tag edge");
            t.tag[trailing] = 0;
            t.labels[trailing] = a;
            t.tag[ahead] = i;
            t.labels[ahead] = d + 1;
            walk.push_back(next);
            ++steps_taken;
            ++step_index;
            RecolorStep step;
            step.walk = walk;
            step.chosen_color = a;
            step.advanced_to = next;
            step.recolored_edge = trailing;
            step.tag_destination = ahead;
            phase.steps.push_back(std::move(step));
            previous_color = a;
        }
        result.trace.phases.push_back(std::move(phase));
    }
    result.success = true;
    result.steps_taken = steps_taken;
    if (!is_spaced(g, t.projection()))
        throw std::logic_error("recoloring finished but the projection is not spaced");
    result.tagged = std::move(t);
    return result;
}

std::vector<TaggedColoring> replay_trace(const Graph& g, const EdgeColoring& c,
                                         const RecolorTrace& trace) {
    std::vector<TaggedColoring> out;
    TaggedColoring t = initial_tagging(g, c);
    out.push_back(t);
    for (const auto& phase : trace.phases) {
        for (const auto& step : phase.steps) {
            t.tag[step.recolored_edge] = 0;
            t.labels[step.recolored_edge] = step.chosen_color;
            t.tag[step.tag_destination] = phase.phase;
            t.labels[step.tag_destination] = t.d + 1;
            out.push_back(t);
        }
    }
    return out;
}

} // namespace etaedge
