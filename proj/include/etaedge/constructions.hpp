#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "etaedge/coloring.hpp"
#include "etaedge/graph.hpp"

namespace etaedge {

enum class GraphFamily { Cycle, Complete, CompleteBipartite, Hypercube, Petersen, Heawood };

GraphFamily family_from_string(std::string_view name);
std::string to_string(GraphFamily f);

/// Named graphs with canonical vertex numbering:
///   cycle n:              vertices 0..n-1, edges (i, i+1 mod n)
///   complete n:           edges (i, j), i < j, lexicographic
///   complete_bipartite a b: left 0..a-1, right a..a+b-1
///   hypercube dim:        vertices are bit strings, edges flip one bit
///   petersen:             outer 5-cycle 0..4, spokes i--i+5, inner pentagram
///   heawood:              14-cycle plus chords between antipodal-ish pairs
Graph make_named_graph(GraphFamily family, const std::vector<int>& params = {});

struct CopyMapEntry {
    bool identified = false; // true only for the single merged vertex
    int copy = -1;           // 0-based copy index
    VertexId original = -1;  // vertex of the template graph
};

struct BuilderOutput {
    Graph graph;
    EdgeColoring coloring;         // proper over {1..d+1}
    std::vector<EdgeId> heavy_class; // the d/2 edges labeled d+1, one per copy
    std::vector<CopyMapEntry> copy_map;
};

/// Builds a d-regular graph with heavy-class size d/2 (and that is the
/// minimum) from a d-regular bipartite template h: subdivide one edge of h,
/// take d/2 disjoint copies, and identify the subdivision vertices into one.
/// The attached coloring keeps each copy's template colors up to a per-copy
/// class permutation that steers colors 2i-1 and 2i onto the identified
/// vertex; one edge per copy carries color d+1, never at the identified
/// vertex. Girth never drops below girth(h).
///
/// h_coloring, when given, must be a proper d-coloring of h over {1..d};
/// otherwise one is computed. subdivided_edge defaults to edge 0; its
/// smaller endpoint plays the role of x, the larger the role of y.
BuilderOutput build_high_resistance(int d, const Graph& h,
                                    const std::optional<EdgeColoring>& h_coloring = {},
                                    std::optional<EdgeId> subdivided_edge = {});

} // namespace etaedge
