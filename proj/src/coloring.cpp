#include "etaedge/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace etaedge {

LabelSet::LabelSet(std::vector<Label> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] <= 0)
            throw std::invalid_argument("labels must be positive");
        if (values_[i] > kMaxLabel)
            throw std::invalid_argument("label exceeds supported range");
        if (i > 0 && values_[i] == values_[i - 1])
            throw std::invalid_argument("labels must be distinct");
    }
}

LabelSet LabelSet::contiguous(Label lo, Label hi) {
    if (lo <= 0 || hi < lo)
        throw std::invalid_argument("bad contiguous label range");
    std::vector<Label> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Label x = lo; x <= hi; ++x)
        v.push_back(x);
    return LabelSet(std::move(v));
}

bool LabelSet::contains(Label x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
}

Label LabelSet::max() const {
    if (values_.empty())
        throw std::logic_error("max of empty label set");
    return values_.back();
}

void validate_coloring(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.labels.size()) != g.edge_count())
        throw std::invalid_argument("coloring labels " + std::to_string(c.labels.size()) +
                                    " edges, graph has " + std::to_string(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!c.universe.contains(c.labels[e]))
            throw std::invalid_argument("edge " + std::to_string(e) + " labeled outside the universe");
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
    validate_coloring(g, c);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (c.labels[nb[i].second] == c.labels[nb[j].second])
                    return false;
    }
    return true;
}

MissingColorMap missing_color_map(const Graph& g, const EdgeColoring& c) {
    auto d = g.regular_degree();
    if (!d)
        throw std::invalid_argument("missing_color_map needs a regular graph");
    if (c.universe.size() != static_cast<std::size_t>(*d) + 1)
        throw std::invalid_argument("universe must have d+1 labels");
    if (!is_proper(g, c))
        throw std::invalid_argument("missing_color_map needs a proper coloring");
    MissingColorMap out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<Label> present;
        for (auto [w, e] : g.neighbors(v))
            present.push_back(c.labels[e]);
        std::sort(present.begin(), present.end());
        std::vector<Label> absent;
        for (Label x : c.universe.values())
            if (!std::binary_search(present.begin(), present.end(), x))
                absent.push_back(x);
        if (absent.size() != 1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " misses " +
                                        std::to_string(absent.size()) + " universe labels, expected 1");
        out[v] = absent[0];
    }
    return out;
}

} // namespace etaedge
