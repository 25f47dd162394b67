#pragma once

#include <cstdint>
#include <optional>

#include "etaedge/coloring.hpp"
#include "etaedge/graph.hpp"

namespace etaedge {

/// Node allowance for the exact searches. Budgets count expanded search
/// nodes, not wall time, so results are reproducible across machines.
struct SearchBudget {
    std::int64_t remaining = 50'000'000;

    bool tick() {
        if (remaining <= 0)
            return false;
        --remaining;
        return true;
    }
    bool exhausted() const { return remaining <= 0; }
};

enum class Feasibility { Yes, No, Unknown };

/// Proper edge coloring with labels from {1, ..., max_degree + 1} via the
/// constructive fan-rotation / alternating-path argument, lowest free color
/// first. Deterministic for a fixed edge insertion order.
EdgeColoring proper_edge_color(const Graph& g);

/// Exact search for a proper coloring with labels {1..d}. Dynamic
/// most-constrained-edge-first order with deterministic tie-breaks;
/// Unknown when the node budget runs out.
struct ColorSearchResult {
    Feasibility feasibility = Feasibility::Unknown;
    std::optional<EdgeColoring> witness;
};
ColorSearchResult find_d_coloring(const Graph& g, int d, SearchBudget& budget);

struct ClassResult {
    enum class Kind { Class1, Class2, Unknown };
    enum class Certificate { None, Bipartite, Counting, Exhaustive };
    Kind kind = Kind::Unknown;
    Certificate certificate = Certificate::None;
    // d-coloring for class 1, (d+1)-coloring for class 2.
    std::optional<EdgeColoring> witness;
};

/// Chromatic-index dichotomy for a d-regular graph: class 1 with a proper
/// d-coloring witness, or class 2 with a counting certificate (d even, odd
/// vertex count) or an exhausted exact search. Bipartite inputs short-circuit
/// to class 1.
ClassResult classify(const Graph& g, SearchBudget budget = {});

struct ResistanceResult {
    bool known = false;
    int value = -1;
    // Proper (d+1)-coloring whose class d+1 has exactly `value` edges.
    std::optional<EdgeColoring> witness;
};

/// Minimum size of color class d+1 over all proper (d+1)-edge-colorings of a
/// d-regular graph: the smallest k such that removing some k-edge matching
/// leaves a d-colorable graph. 0 for class-1 graphs.
ResistanceResult resistance(const Graph& g, SearchBudget budget = {});

} // namespace etaedge
