#pragma once

#include <optional>

#include "etaedge/coloring.hpp"
#include "etaedge/edge_coloring.hpp"
#include "etaedge/graph.hpp"

namespace etaedge {
namespace oracle {

/// Exhaustive d-colorability, edges in id order and labels ascending, so the
/// witness is the lexicographically first proper coloring. Refuted suffix
/// states are memoized by the color availability along the prefix/suffix
/// frontier, which keeps refutations feasible without changing the result
/// or the witness.
Feasibility d_colorable(const Graph& g, int d, SearchBudget& budget,
                        EdgeColoring* witness = nullptr);

struct EtaResult {
    // Yes: value is the least usable maximum label; No: nothing <= max_label
    // works; Unknown: budget exhausted.
    Feasibility status = Feasibility::Unknown;
    Label value = 0;
    std::optional<EdgeColoring> witness;
};

/// Least k <= max_label such that a proper additive edge coloring with
/// labels from {1..k} exists. Depth-first over edges in id order, labels
/// ascending, pruning on properness and on any equal completed neighbor
/// sums of incident edges.
EtaResult exact_eta_p_prime(const Graph& g, Label max_label, SearchBudget budget = {});

struct ResistanceResult {
    bool known = false;
    int value = -1;
    std::optional<EdgeColoring> witness;
};

/// Exact resistance by enumerating removed matchings in increasing size and
/// lexicographic edge order, deciding d-colorability of the remainder
/// exhaustively. Independent route from the fast-path computation.
ResistanceResult exact_resistance(const Graph& g, SearchBudget budget = {});

struct StrongSetResult {
    Feasibility status = Feasibility::Unknown; // Yes = every proper coloring is additive
    bool via_shortcut = false;
    std::optional<EdgeColoring> counterexample; // set when status == No
};

/// Decides whether every proper coloring from the label set is additive.
/// When the set has d+1 members and satisfies the difference condition the
/// answer is Yes without enumeration; otherwise all proper colorings are
/// enumerated (edges in id order, labels ascending), so the counterexample
/// is the lexicographically first offender.
StrongSetResult verify_strong_set(const Graph& g, const LabelSet& a, SearchBudget budget = {});

} // namespace oracle
} // namespace etaedge
