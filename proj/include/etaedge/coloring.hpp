#pragma once

#include <cstdint>
#include <vector>

#include "etaedge/graph.hpp"

namespace etaedge {

using Label = std::int64_t;

/// Largest label the library accepts; keeps every neighbor sum inside int64.
inline constexpr Label kMaxLabel = Label{1} << 62;

/// Ordered set of distinct positive integer labels.
class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::vector<Label> values);

    /// {lo, lo+1, ..., hi}
    static LabelSet contiguous(Label lo, Label hi);

    const std::vector<Label>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    bool contains(Label x) const;
    Label max() const;
    Label at(std::size_t i) const { return values_.at(i); }

    bool operator==(const LabelSet&) const = default;

private:
    std::vector<Label> values_; // strictly increasing
};

/// Total edge labeling over a declared label universe. Properness is a
/// checkable predicate, not an invariant: several operations accept improper
/// colorings transiently.
struct EdgeColoring {
    std::vector<Label> labels; // indexed by edge id
    LabelSet universe;
};

/// Throws unless c labels every edge of g with a member of its universe.
void validate_coloring(const Graph& g, const EdgeColoring& c);

/// True iff no two incident edges carry the same label.
bool is_proper(const Graph& g, const EdgeColoring& c);

/// Per-vertex record of the unique universe label absent at that vertex.
using MissingColorMap = std::vector<Label>;

/// For a d-regular graph properly colored from a (d+1)-label universe,
/// returns v -> the one universe label not appearing at v. Throws when the
/// preconditions fail (improper coloring, wrong universe size, irregular g).
MissingColorMap missing_color_map(const Graph& g, const EdgeColoring& c);

} // namespace etaedge
