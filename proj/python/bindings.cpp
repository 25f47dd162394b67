#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etaedge/additive.hpp"
#include "etaedge/constructions.hpp"
#include "etaedge/edge_coloring.hpp"
#include "etaedge/graph.hpp"
#include "etaedge/graph_io.hpp"
#include "etaedge/oracle.hpp"
#include "etaedge/spaced.hpp"

namespace py = pybind11;
using namespace etaedge;

namespace {

const char* feasibility_name(Feasibility f) {
    switch (f) {
    case Feasibility::Yes: return "yes";
    case Feasibility::No: return "no";
    case Feasibility::Unknown: return "unknown";
    }
    return "?";
}

EdgeColoring make_coloring(std::vector<Label> labels, std::vector<Label> universe) {
    return EdgeColoring{std::move(labels), LabelSet(std::move(universe))};
}

} // namespace

PYBIND11_MODULE(_etaedge, m) {
    m.doc() = "additive edge colorings of regular graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<VertexId, VertexId>>>(), py::arg("vertex_count"),
             py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("endpoints", &Graph::endpoints, py::arg("edge"))
        .def("degree", &Graph::degree, py::arg("vertex"))
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("find_edge", &Graph::find_edge, py::arg("u"), py::arg("v"))
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def_property_readonly("regular_degree", &Graph::regular_degree)
        .def_property_readonly("is_bipartite", &Graph::is_bipartite)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init(&make_coloring), py::arg("labels"), py::arg("universe"))
        .def_property_readonly("labels", [](const EdgeColoring& c) { return c.labels; })
        .def_property_readonly("universe", [](const EdgeColoring& c) { return c.universe.values(); })
        .def("__repr__", [](const EdgeColoring& c) {
            return "EdgeColoring(m=" + std::to_string(c.labels.size()) + ")";
        });

    py::class_<AdditiveVerdict>(m, "AdditiveVerdict")
        .def_readonly("ok", &AdditiveVerdict::ok)
        .def_readonly("violation", &AdditiveVerdict::violation)
        .def_readonly("sums", &AdditiveVerdict::sums)
        .def_readonly("proper", &AdditiveVerdict::proper);

    py::class_<ClassResult>(m, "ClassResult")
        .def_property_readonly("vizing_class",
                               [](const ClassResult& r) -> py::object {
                                   switch (r.kind) {
                                   case ClassResult::Kind::Class1: return py::int_(1);
                                   case ClassResult::Kind::Class2: return py::int_(2);
                                   default: return py::none();
                                   }
                               })
        .def_property_readonly("certificate",
                               [](const ClassResult& r) -> py::object {
                                   switch (r.certificate) {
                                   case ClassResult::Certificate::Bipartite:
                                       return py::str("bipartite");
                                   case ClassResult::Certificate::Counting:
                                       return py::str("counting");
                                   case ClassResult::Certificate::Exhaustive:
                                       return py::str("exhaustive");
                                   default: return py::none();
                                   }
                               })
        .def_readonly("witness", &ClassResult::witness);

    py::class_<ResistanceResult>(m, "ResistanceResult")
        .def_readonly("known", &ResistanceResult::known)
        .def_readonly("value", &ResistanceResult::value)
        .def_readonly("witness", &ResistanceResult::witness);

    py::class_<RecolorStep>(m, "RecolorStep")
        .def_readonly("walk", &RecolorStep::walk)
        .def_readonly("chosen_color", &RecolorStep::chosen_color)
        .def_readonly("advanced_to", &RecolorStep::advanced_to)
        .def_readonly("recolored_edge", &RecolorStep::recolored_edge)
        .def_readonly("tag_destination", &RecolorStep::tag_destination);

    py::class_<PhaseTrace>(m, "PhaseTrace")
        .def_readonly("phase", &PhaseTrace::phase)
        .def_readonly("orientation_start", &PhaseTrace::orientation_start)
        .def_readonly("satisfied", &PhaseTrace::satisfied)
        .def_readonly("satisfied_at_step", &PhaseTrace::satisfied_at_step)
        .def_readonly("steps", &PhaseTrace::steps);

    py::class_<RecolorTrace>(m, "RecolorTrace").def_readonly("phases", &RecolorTrace::phases);

    py::class_<TaggedColoring>(m, "TaggedColoring")
        .def_readonly("labels", &TaggedColoring::labels)
        .def_readonly("tag", &TaggedColoring::tag)
        .def("projection", &TaggedColoring::projection);

    py::class_<SpacedRunResult>(m, "SpacedRunResult")
        .def_readonly("success", &SpacedRunResult::success)
        .def_readonly("tagged", &SpacedRunResult::tagged)
        .def_readonly("trace", &SpacedRunResult::trace)
        .def_readonly("girth_hypothesis_held", &SpacedRunResult::girth_hypothesis_held)
        .def_readonly("heavy_count", &SpacedRunResult::heavy_count)
        .def_readonly("steps_taken", &SpacedRunResult::steps_taken);

    py::class_<CopyMapEntry>(m, "CopyMapEntry")
        .def_readonly("identified", &CopyMapEntry::identified)
        .def_readonly("copy", &CopyMapEntry::copy)
        .def_readonly("original", &CopyMapEntry::original);

    py::class_<BuilderOutput>(m, "BuilderOutput")
        .def_readonly("graph", &BuilderOutput::graph)
        .def_readonly("coloring", &BuilderOutput::coloring)
        .def_readonly("heavy_class", &BuilderOutput::heavy_class)
        .def_readonly("copy_map", &BuilderOutput::copy_map);

    // graph core
    m.def("girth", &girth, py::arg("graph"));
    m.def("edge_neighbors", &edge_neighbors, py::arg("graph"), py::arg("edge"));
    m.def("is_two_reachable", &is_two_reachable, py::arg("graph"), py::arg("e"), py::arg("f"));
    m.def("edge_in_triangle", &edge_in_triangle, py::arg("graph"), py::arg("edge"));
    m.def(
        "find_unreachable_cycle_edge",
        [](const Graph& g, const std::vector<VertexId>& cycle, const std::vector<EdgeId>& s) {
            return find_unreachable_cycle_edge(g, Walk{cycle}, s);
        },
        py::arg("graph"), py::arg("cycle"), py::arg("avoid"));
    m.def(
        "read_graph",
        [](const std::string& text, const std::string& format) {
            return read_graph(text, graph_format_from_string(format));
        },
        py::arg("text"), py::arg("format"));
    m.def(
        "write_graph",
        [](const Graph& g, const std::string& format) {
            return write_graph(g, graph_format_from_string(format));
        },
        py::arg("graph"), py::arg("format"));

    // constructions
    m.def(
        "make_named_graph",
        [](const std::string& family, const std::vector<int>& params) {
            return make_named_graph(family_from_string(family), params);
        },
        py::arg("family"), py::arg("params") = std::vector<int>{});
    m.def("build_high_resistance", &build_high_resistance, py::arg("d"), py::arg("template_graph"),
          py::arg("template_coloring") = std::optional<EdgeColoring>{},
          py::arg("subdivided_edge") = std::optional<EdgeId>{});

    // edge coloring
    m.def("proper_edge_color", &proper_edge_color, py::arg("graph"));
    m.def("is_proper", &is_proper, py::arg("graph"), py::arg("coloring"));
    m.def(
        "classify",
        [](const Graph& g, std::int64_t budget) { return classify(g, SearchBudget{budget}); },
        py::arg("graph"), py::arg("budget") = SearchBudget{}.remaining);
    m.def(
        "resistance",
        [](const Graph& g, std::int64_t budget) { return resistance(g, SearchBudget{budget}); },
        py::arg("graph"), py::arg("budget") = SearchBudget{}.remaining);
    m.def("missing_color_map", &missing_color_map, py::arg("graph"), py::arg("coloring"));

    // additive
    m.def("neighbor_sum", &neighbor_sum, py::arg("graph"), py::arg("coloring"), py::arg("edge"));
    m.def("verify_additive", &verify_additive, py::arg("graph"), py::arg("coloring"),
          py::arg("require_proper") = false);
    m.def(
        "difference_free_set", [](int n) { return difference_free_set(n).values(); },
        py::arg("level"));
    m.def(
        "difference_condition_holds",
        [](std::vector<Label> values) { return difference_condition_holds(LabelSet(values)); },
        py::arg("labels"));
    m.def(
        "additive_index_bound",
        [](int d) {
            auto b = additive_index_bound(d);
            return std::make_pair(b.bound, b.refined_bound);
        },
        py::arg("d"));
    m.def("missing_odd_or_zero", &missing_odd_or_zero, py::arg("graph"), py::arg("coloring"));

    // spaced recoloring
    m.def("is_spaced", &is_spaced, py::arg("graph"), py::arg("coloring"));
    m.def("spaced_to_additive", &spaced_to_additive, py::arg("graph"), py::arg("coloring"));
    m.def("make_spaced", &make_spaced, py::arg("graph"), py::arg("coloring"),
          py::arg("step_budget") = -1);
    m.def("replay_trace", &replay_trace, py::arg("graph"), py::arg("coloring"), py::arg("trace"));

    // oracle
    auto oracle_mod = m.def_submodule("oracle", "exhaustive ground truth on small graphs");
    oracle_mod.def(
        "exact_eta_p_prime",
        [](const Graph& g, Label max_label, std::int64_t budget) {
            auto r = oracle::exact_eta_p_prime(g, max_label, SearchBudget{budget});
            return py::make_tuple(feasibility_name(r.status), r.value, r.witness);
        },
        py::arg("graph"), py::arg("max_label"), py::arg("budget") = SearchBudget{}.remaining);
    oracle_mod.def(
        "exact_resistance",
        [](const Graph& g, std::int64_t budget) {
            auto r = oracle::exact_resistance(g, SearchBudget{budget});
            return py::make_tuple(r.known, r.value, r.witness);
        },
        py::arg("graph"), py::arg("budget") = SearchBudget{}.remaining);
    oracle_mod.def(
        "verify_strong_set",
        [](const Graph& g, std::vector<Label> labels, std::int64_t budget) {
            auto r = oracle::verify_strong_set(g, LabelSet(std::move(labels)), SearchBudget{budget});
            return py::make_tuple(feasibility_name(r.status), r.via_shortcut, r.counterexample);
        },
        py::arg("graph"), py::arg("labels"), py::arg("budget") = SearchBudget{}.remaining);

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<MinimalityViolation>(m, "MinimalityViolation", PyExc_RuntimeError);
}
