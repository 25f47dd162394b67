#include "etaedge/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace etaedge {

namespace {

using nlohmann::json;

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

class BitReader {
public:
    BitReader(std::string_view chars) : chars_(chars) {}

    int next() {
        if (pos_ >= 6 * chars_.size())
            throw FormatError("graph6 data truncated");
        unsigned char c = static_cast<unsigned char>(chars_[pos_ / 6]);
        int bit = (c - 63) >> (5 - pos_ % 6) & 1;
        ++pos_;
        return bit;
    }

private:
    std::string_view chars_;
    std::size_t pos_ = 0;
};

long long read_graph6_size(std::string_view& s) {
    auto take = [&]() -> long long {
        if (s.empty())
            throw FormatError("graph6 header truncated");
        unsigned char c = static_cast<unsigned char>(s.front());
        if (c < 63 || c > 126)
            throw FormatError("graph6 byte out of range");
        s.remove_prefix(1);
        return c - 63;
    };
    long long first = take();
    if (first < 63)
        return first;
    long long second = take();
    if (second < 63) {
        long long n = second;
        for (int i = 0; i < 2; ++i)
            n = (n << 6) | take();
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 6; ++i)
        n = (n << 6) | take();
    return n;
}

Graph read_graph6(std::string_view text) {
    std::string_view s = trim(text);
    if (s.substr(0, kGraph6Prefix.size()) == kGraph6Prefix)
        s.remove_prefix(kGraph6Prefix.size());
    if (s.empty())
        throw FormatError("empty graph6 input");
    long long n = read_graph6_size(s);
    if (n > 1'000'000)
        throw FormatError("graph6 vertex count too large");
    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) != need)
        throw FormatError("graph6 body has " + std::to_string(s.size()) + " bytes, expected " +
                          std::to_string(need));
    for (char c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126)
            throw FormatError("graph6 byte out of range");
    }
    BitReader reader(s);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (long long j = 1; j < n; ++j)
        for (long long i = 0; i < j; ++i)
            if (reader.next())
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    for (long long p = bits; p < need * 6; ++p)
        if (reader.next())
            throw FormatError("graph6 padding bits must be zero");
    return Graph(static_cast<int>(n), std::move(edges));
}

void append_graph6_size(std::string& out, long long n) {
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

std::string write_graph6(const Graph& g) {
    std::string out;
    long long n = g.vertex_count();
    append_graph6_size(out, n);
    int acc = 0;
    int used = 0;
    auto push_bit = [&](int b) {
        acc = (acc << 1) | b;
        if (++used == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            used = 0;
        }
    };
    for (long long j = 1; j < n; ++j)
        for (long long i = 0; i < j; ++i)
            push_bit(g.adjacent(static_cast<VertexId>(i), static_cast<VertexId>(j)) ? 1 : 0);
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

Graph read_edgelist(std::string_view text) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        std::istringstream fields(line);
        long long u, v;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw FormatError("edgelist line " + std::to_string(line_no) + ": expected \"u v\"");
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
            throw FormatError("edgelist line " + std::to_string(line_no) + ": vertex out of range");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
    }
    try {
        return Graph(max_vertex + 1, std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw FormatError(std::string("edgelist: ") + err.what());
    }
}

std::string write_edgelist(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph read_graph_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw FormatError(std::string("graph json: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw FormatError("graph json needs object with \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer())
        throw FormatError("graph json: \"n\" must be an integer");
    if (!doc["edges"].is_array())
        throw FormatError("graph json: \"edges\" must be an array");
    long long n = doc["n"].get<long long>();
    if (n < 0 || n > 1'000'000)
        throw FormatError("graph json: vertex count out of range");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw FormatError("graph json: each edge must be [u, v]");
        edges.emplace_back(pair[0].get<VertexId>(), pair[1].get<VertexId>());
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw FormatError(std::string("graph json: ") + err.what());
    }
}

std::string write_graph_json(const Graph& g) {
    json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = json::array();
    for (auto [u, v] : g.edges())
        doc["edges"].push_back(json::array({u, v}));
    return doc.dump();
}

} // namespace

GraphFormat graph_format_from_string(std::string_view name) {
    if (name == "graph6" || name == "g6")
        return GraphFormat::Graph6;
    if (name == "edgelist" || name == "el")
        return GraphFormat::EdgeList;
    if (name == "json")
        return GraphFormat::Json;
    throw FormatError("unknown graph format: " + std::string(name));
}

std::string to_string(GraphFormat f) {
    switch (f) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::EdgeList: return "edgelist";
    case GraphFormat::Json: return "json";
    }
    return "?";
}

Graph read_graph(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::Graph6: return read_graph6(text);
    case GraphFormat::EdgeList: return read_edgelist(text);
    case GraphFormat::Json: return read_graph_json(text);
    }
    throw FormatError("unknown graph format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
    case GraphFormat::Graph6: return write_graph6(g);
    case GraphFormat::EdgeList: return write_edgelist(g);
    case GraphFormat::Json: return write_graph_json(g);
    }
    throw FormatError("unknown graph format");
}

EdgeColoring coloring_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw FormatError(std::string("coloring json: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("universe") || !doc.contains("labels"))
        throw FormatError("coloring json needs object with \"universe\" and \"labels\"");
    if (!doc["universe"].is_array() || !doc["labels"].is_object())
        throw FormatError("coloring json: bad field types");
    std::vector<Label> universe;
    for (const auto& x : doc["universe"]) {
        if (!x.is_number_integer())
            throw FormatError("coloring json: universe labels must be integers");
        universe.push_back(x.get<Label>());
    }
    std::vector<std::pair<EdgeId, Label>> entries;
    for (const auto& [key, value] : doc["labels"].items()) {
        EdgeId e;
        try {
            std::size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw FormatError("coloring json: bad edge id \"" + key + "\"");
        }
        if (e < 0 || !value.is_number_integer())
            throw FormatError("coloring json: bad entry for edge \"" + key + "\"");
        entries.emplace_back(e, value.get<Label>());
    }
    std::sort(entries.begin(), entries.end());
    EdgeColoring c;
    try {
        c.universe = LabelSet(std::move(universe));
    } catch (const std::invalid_argument& err) {
        throw FormatError(std::string("coloring json: ") + err.what());
    }
    c.labels.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first != static_cast<EdgeId>(i))
            throw FormatError("coloring json: labels must cover edge ids 0..m-1 exactly once");
        c.labels[i] = entries[i].second;
    }
    return c;
}

std::string coloring_to_json(const EdgeColoring& c) {
    json doc;
    doc["universe"] = c.universe.values();
    json labels = json::object();
    for (EdgeId e = 0; e < static_cast<EdgeId>(c.labels.size()); ++e)
        labels[std::to_string(e)] = c.labels[e];
    doc["labels"] = std::move(labels);
    return doc.dump();
}

} // namespace etaedge
