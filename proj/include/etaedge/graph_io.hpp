#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "etaedge/coloring.hpp"
#include "etaedge/graph.hpp"

namespace etaedge {

/// Malformed input in any of the supported graph or coloring encodings.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

enum class GraphFormat { Graph6, EdgeList, Json };

GraphFormat graph_format_from_string(std::string_view name);
std::string to_string(GraphFormat f);

/// Parses one graph. graph6 is the standard 6-bit encoding (an optional
/// ">>graph6<<" prefix is tolerated); edgelist is one "u v" pair per line,
/// 0-based; json is {"n": int, "edges": [[u,v], ...]}.
Graph read_graph(std::string_view text, GraphFormat format);

/// Inverse of read_graph up to edge numbering: the result parses back to a
/// graph with the same vertex count and edge set.
std::string write_graph(const Graph& g, GraphFormat format);

/// Coloring JSON: {"universe": [labels...], "labels": {"edge-id": label, ...}}.
EdgeColoring coloring_from_json(std::string_view text);
std::string coloring_to_json(const EdgeColoring& c);

} // namespace etaedge
