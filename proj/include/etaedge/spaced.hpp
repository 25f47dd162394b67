#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "etaedge/coloring.hpp"
#include "etaedge/graph.hpp"

namespace etaedge {

/// True iff c is proper over {1..d+1} and no two (not necessarily distinct)
/// edges labeled d+1 are 2-reachable from one another. A single heavy edge
/// on a triangle fails on self-reachability.
bool is_spaced(const Graph& g, const EdgeColoring& c);

/// Relabels a spaced (d+1)-coloring into a proper additive coloring with
/// labels {1} and {2, 4, ..., 2d}: heavy edges become 1, color j becomes 2j.
EdgeColoring spaced_to_additive(const Graph& g, const EdgeColoring& c);

/// (d+1)-coloring whose heavy edges carry distinguishable tag indices
/// 1..r. The projection forgets the indices again.
struct TaggedColoring {
    int d = 0;
    std::vector<Label> labels; // 1..d, or d+1 on tagged edges
    std::vector<int> tag;      // 0 = plain edge, otherwise the tag index

    EdgeColoring projection() const;
    EdgeId tagged_edge(int index) const; // unique edge carrying the index
};

/// Tags the heavy edges of a proper (d+1)-coloring in increasing edge-id
/// order: the k-th smallest heavy edge gets tag k+1.
TaggedColoring initial_tagging(const Graph& g, const EdgeColoring& c);

struct RecolorStep {
    std::vector<VertexId> walk; // x_0 .. x_{j+1} after the step
    Label chosen_color = 0;     // color missing at the walk's second-to-last vertex
    VertexId advanced_to = -1;  // x_{j+1}
    EdgeId recolored_edge = -1; // gets chosen_color
    EdgeId tag_destination = -1;
};

struct PhaseTrace {
    int phase = 0;
    VertexId orientation_start = -1; // x_0, the smaller endpoint of the tag edge
    bool satisfied = false;
    int satisfied_at_step = -1; // 0 means the entry coloring already qualified
    std::vector<RecolorStep> steps;
};

struct RecolorTrace {
    std::vector<PhaseTrace> phases;
};

struct SpacedRunResult {
    bool success = false; // false = step budget exhausted
    TaggedColoring tagged;
    RecolorTrace trace;
    bool girth_hypothesis_held = false; // girth >= 6r - 5 (reported, not enforced)
    int heavy_count = 0;                // r
    std::int64_t steps_taken = 0;
};

/// The walk recoloring procedure. Phase i moves tag i along a
/// non-backtracking walk -- recoloring the trailing edge with the color
/// missing behind it and pushing the tag onto the unique edge ahead that
/// carried that color -- until no two tags with indices <= i are mutually
/// 2-reachable and the projection is proper. Requires the heavy class of c
/// to be of minimum size among proper (d+1)-colorings; that contract is
/// checked lazily and a violation aborts with MinimalityViolation.
/// A negative step_budget means 6 * edge_count.
SpacedRunResult make_spaced(const Graph& g, const EdgeColoring& c, std::int64_t step_budget = -1);

/// Tagged colorings reached by a trace, starting from initial_tagging(g, c);
/// element 0 is the initial coloring, then one entry per step.
std::vector<TaggedColoring> replay_trace(const Graph& g, const EdgeColoring& c,
                                         const RecolorTrace& trace);

/// Raised when the walk cannot advance because the expected color is absent
/// ahead; witnesses that the heavy class was not of minimum size.
struct MinimalityViolation : std::runtime_error {
    VertexId vertex;
    explicit MinimalityViolation(VertexId v)
        : std::runtime_error("no edge ahead carries the required color at vertex " +
                             std::to_string(v) + "; the heavy class was not minimum"),
          vertex(v) {}
};

} // namespace etaedge
