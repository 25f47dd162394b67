#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "etaedge/coloring.hpp"
#include "etaedge/graph.hpp"

namespace etaedge {

/// Sum of the labels on the edges sharing an endpoint with e. The value is
/// cross-checked against (sum at u) + (sum at v) - 2*label(uv).
Label neighbor_sum(const Graph& g, const EdgeColoring& c, EdgeId e);

struct AdditiveVerdict {
    bool ok = false;
    // First (lexicographically smallest) incident pair with equal sums.
    std::optional<std::pair<EdgeId, EdgeId>> violation;
    std::vector<Label> sums; // indexed by edge id
    bool proper = true;      // meaningful when properness was requested
};

/// Checks that every pair of incident edges has distinct neighbor sums,
/// optionally also requiring the coloring to be proper.
AdditiveVerdict verify_additive(const Graph& g, const EdgeColoring& c, bool require_proper = false);

/// The doubling family: level 1 is {1, 2}; each level unions the previous
/// one with a copy shifted by 3*max - 2. Level n has 2^n elements, its
/// maximum is (4^n + 2)/3, and no difference of members equals twice
/// another difference. Levels 1..16 are supported.
LabelSet difference_free_set(int n);

/// True iff no difference of distinct members equals twice another such
/// difference (exhaustive enumeration of signed differences).
bool difference_condition_holds(const LabelSet& a);

struct AdditiveIndexBound {
    Label bound;         // (4^n + 2)/3 for the smallest n with 2^n >= d+1
    Label refined_bound; // largest label actually needed: the (d+1)-th member
};

/// Upper bound on the largest label needed for a proper additive edge
/// coloring of a d-regular class-2 graph, coloring from the first d+1
/// members of the difference-free family.
AdditiveIndexBound additive_index_bound(int d);

/// Sufficient condition on a proper (d+1)-coloring of a d-regular graph:
/// along every two-edge path the missing colors at the endpoints differ by
/// zero or an odd amount. When it holds the coloring is additive (also
/// asserted internally).
bool missing_odd_or_zero(const Graph& g, const EdgeColoring& c);

} // namespace etaedge
