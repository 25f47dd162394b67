#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaedge/additive.hpp"
#include "etaedge/constructions.hpp"
#include "etaedge/edge_coloring.hpp"
#include "etaedge/graph.hpp"
#include "etaedge/graph_io.hpp"
#include "etaedge/oracle.hpp"
#include "etaedge/spaced.hpp"

namespace {

using nlohmann::json;
using namespace etaedge;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

int emit(const json& report, int code) {
    std::cout << report.dump() << "\n";
    return code;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << text;
}

GraphFormat infer_format(const std::string& path, const std::string& override_name) {
    if (!override_name.empty())
        return graph_format_from_string(override_name);
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6")
        return GraphFormat::Graph6;
    if (ext == "el" || ext == "edgelist" || ext == "txt")
        return GraphFormat::EdgeList;
    if (ext == "json")
        return GraphFormat::Json;
    throw std::runtime_error("cannot infer graph format from \"" + path +
                             "\"; pass --format graph6|edgelist|json");
}

Graph load_graph(const std::string& path, const std::string& format_name) {
    return read_graph(slurp(path), infer_format(path, format_name));
}

EdgeColoring load_coloring(const std::string& path) {
    return coloring_from_json(slurp(path));
}

json coloring_report(const EdgeColoring& c) {
    return json::parse(coloring_to_json(c));
}

json graph_payload(const Graph& g, GraphFormat f) {
    if (f == GraphFormat::Json)
        return json::parse(write_graph(g, f));
    return write_graph(g, f);
}

json verdict_report(const AdditiveVerdict& verdict, bool proper_checked) {
    json out;
    out["ok"] = verdict.ok;
    if (verdict.violation)
        out["violation"] = json::array({verdict.violation->first, verdict.violation->second});
    else
        out["violation"] = nullptr;
    json sums = json::object();
    for (EdgeId e = 0; e < static_cast<EdgeId>(verdict.sums.size()); ++e)
        sums[std::to_string(e)] = verdict.sums[e];
    out["sums"] = std::move(sums);
    if (proper_checked)
        out["proper"] = verdict.proper;
    return out;
}

std::vector<Label> parse_label_list(const std::string& text) {
    std::vector<Label> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty())
        throw std::runtime_error("empty label list");
    return out;
}

json trace_report(const SpacedRunResult& run) {
    json phases = json::array();
    for (const auto& phase : run.trace.phases) {
        json steps = json::array();
        for (const auto& step : phase.steps) {
            steps.push_back(json{{"walk", step.walk},
                                 {"chosen_color", step.chosen_color},
                                 {"advanced_to", step.advanced_to},
                                 {"recolored_edge", step.recolored_edge},
                                 {"tag_destination", step.tag_destination}});
        }
        phases.push_back(json{{"phase", phase.phase},
                              {"orientation_start", phase.orientation_start},
                              {"satisfied", phase.satisfied},
                              {"satisfied_at_step", phase.satisfied_at_step},
                              {"steps", std::move(steps)}});
    }
    return json{{"status", run.success ? "success" : "budget_exhausted"},
                {"r", run.heavy_count},
                {"girth_hypothesis_held", run.girth_hypothesis_held},
                {"steps_taken", run.steps_taken},
                {"phases", std::move(phases)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive edge coloring toolkit for regular graphs"};
    app.require_subcommand(1);

    std::string in_path, coloring_path, format_name, out_path, trace_path;
    std::string family_name, params_text, labels_text, out_format_name = "json";
    std::int64_t budget = SearchBudget{}.remaining;
    std::int64_t step_budget = -1;
    int n_param = 0, d_param = 0;
    Label max_label = 0;
    bool require_proper = false, do_check = false, do_transform = false, do_make = false;
    bool oracle_eta = false, oracle_resistance = false;
    std::optional<EdgeId> subdivide_edge;
    EdgeId subdivide_edge_value = 0;

    auto* generate = app.add_subcommand("generate", "emit a named graph");
    generate->add_option("--family", family_name, "cycle|complete|complete_bipartite|hypercube|petersen|heawood")
        ->required();
    generate->add_option("--params", params_text, "comma-separated integer parameters");
    generate->add_option("--format", out_format_name, "graph payload format (default json)");
    generate->add_option("--out", out_path, "also write the payload to a file");

    auto* build = app.add_subcommand("build-p214", "build a d-regular graph with heavy class d/2 from a bipartite template");
    build->add_option("--d", d_param, "even degree >= 4")->required();
    build->add_option("--in", in_path, "bipartite d-regular template graph")->required();
    build->add_option("--in-format", format_name, "input format override");
    build->add_option("--coloring", coloring_path, "optional proper d-coloring of the template");
    auto* edge_opt = build->add_option("--edge", subdivide_edge_value, "edge id to subdivide (default 0)");
    build->add_option("--format", out_format_name, "graph payload format (default json)");
    build->add_option("--out", out_path, "also write the graph payload to a file");

    auto* color = app.add_subcommand("color", "proper edge coloring with max degree + 1 labels");
    color->add_option("--in", in_path, "input graph")->required();
    color->add_option("--format", format_name, "input format override");

    auto* classify_cmd = app.add_subcommand("classify", "chromatic index dichotomy for a regular graph");
    classify_cmd->add_option("--in", in_path, "input graph")->required();
    classify_cmd->add_option("--format", format_name, "input format override");
    classify_cmd->add_option("--budget", budget, "search node budget");

    auto* resistance_cmd = app.add_subcommand("resistance", "minimum heavy class size over proper (d+1)-colorings");
    resistance_cmd->add_option("--in", in_path, "input graph")->required();
    resistance_cmd->add_option("--format", format_name, "input format override");
    resistance_cmd->add_option("--budget", budget);

    auto* verify = app.add_subcommand("verify", "check a coloring for distinct incident neighbor sums");
    verify->add_option("--in", in_path, "input graph")->required();
    verify->add_option("--format", format_name, "input format override");
    verify->add_option("--coloring", coloring_path, "coloring json")->required();
    verify->add_flag("--require-proper", require_proper, "also require properness");

    auto* labelset = app.add_subcommand("labelset", "difference-free label family");
    labelset->add_option("--n", n_param, "family level (1..16)")->required();

    auto* bound = app.add_subcommand("bound", "largest label needed for class-2 regular graphs");
    bound->add_option("--d", d_param, "degree >= 2")->required();

    auto* spaced = app.add_subcommand("spaced", "spaced-coloring predicate, transform, and recoloring walks");
    spaced->add_option("--in", in_path, "input graph")->required();
    spaced->add_option("--format", format_name, "input format override");
    spaced->add_option("--coloring", coloring_path, "proper (d+1)-coloring json")->required();
    spaced->add_flag("--check", do_check, "report whether the coloring is spaced");
    spaced->add_flag("--transform", do_transform, "relabel a spaced coloring into an additive one");
    spaced->add_flag("--make", do_make, "run the recoloring walks");
    spaced->add_option("--budget", step_budget, "step budget for --make (default 6m)");
    spaced->add_option("--trace", trace_path, "write the full walk trace to a file");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth on small graphs");
    oracle_cmd->add_option("--in", in_path, "input graph")->required();
    oracle_cmd->add_option("--format", format_name, "input format override");
    oracle_cmd->add_flag("--eta-p-prime", oracle_eta, "least usable maximum label");
    oracle_cmd->add_option("--max-label", max_label, "cap for --eta-p-prime (default 2*degree+2)");
    oracle_cmd->add_flag("--resistance", oracle_resistance, "exact resistance");
    oracle_cmd->add_option("--strong-set", labels_text, "labels, e.g. 1,2,5,6: is every proper coloring additive?");
    oracle_cmd->add_option("--budget", budget);

    auto* girth_cmd = app.add_subcommand("girth", "shortest cycle length");
    girth_cmd->add_option("--in", in_path, "input graph")->required();
    girth_cmd->add_option("--format", format_name, "input format override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            std::vector<int> params;
            if (!params_text.empty())
                for (Label v : parse_label_list(params_text))
                    params.push_back(static_cast<int>(v));
            Graph g = make_named_graph(family_from_string(family_name), params);
            GraphFormat f = graph_format_from_string(out_format_name);
            json report{{"family", family_name},
                        {"n", g.vertex_count()},
                        {"m", g.edge_count()},
                        {"graph", graph_payload(g, f)}};
            if (!out_path.empty()) {
                spill(out_path, write_graph(g, f));
                report["written_to"] = out_path;
            }
            return emit(report, kExitOk);
        }

        if (build->parsed()) {
            Graph h = load_graph(in_path, format_name);
            std::optional<EdgeColoring> base;
            if (!coloring_path.empty())
                base = load_coloring(coloring_path);
            if (edge_opt->count() > 0)
                subdivide_edge = subdivide_edge_value;
            BuilderOutput out = build_high_resistance(d_param, h, base, subdivide_edge);
            GraphFormat f = graph_format_from_string(out_format_name);
            json copy_map = json::array();
            for (VertexId v = 0; v < out.graph.vertex_count(); ++v) {
                const auto& entry = out.copy_map[v];
                if (entry.identified)
                    copy_map.push_back(json{{"vertex", v}, {"identified", true}});
                else
                    copy_map.push_back(json{{"vertex", v},
                                            {"identified", false},
                                            {"copy", entry.copy},
                                            {"original", entry.original}});
            }
            auto g_out = girth(out.graph);
            json report{{"d", d_param},
                        {"n", out.graph.vertex_count()},
                        {"m", out.graph.edge_count()},
                        {"girth", g_out ? json(*g_out) : json("infinite")},
                        {"graph", graph_payload(out.graph, f)},
                        {"coloring", coloring_report(out.coloring)},
                        {"heavy_class", out.heavy_class},
                        {"copy_map", std::move(copy_map)}};
            if (!out_path.empty()) {
                spill(out_path, write_graph(out.graph, f));
                report["written_to"] = out_path;
            }
            return emit(report, kExitOk);
        }

        if (color->parsed()) {
            Graph g = load_graph(in_path, format_name);
            return emit(coloring_report(proper_edge_color(g)), kExitOk);
        }

        if (classify_cmd->parsed()) {
            Graph g = load_graph(in_path, format_name);
            ClassResult r = classify(g, SearchBudget{budget});
            if (r.kind == ClassResult::Kind::Unknown)
                return emit(json{{"status", "budget_exhausted"}}, kExitBudget);
            json report;
            report["class"] = r.kind == ClassResult::Kind::Class1 ? 1 : 2;
            switch (r.certificate) {
            case ClassResult::Certificate::Bipartite: report["certificate"] = "bipartite"; break;
            case ClassResult::Certificate::Counting: report["certificate"] = "counting"; break;
            case ClassResult::Certificate::Exhaustive: report["certificate"] = "exhaustive"; break;
            case ClassResult::Certificate::None: report["certificate"] = nullptr; break;
            }
            report["witness"] = coloring_report(*r.witness);
            return emit(report, kExitOk);
        }

        if (resistance_cmd->parsed()) {
            Graph g = load_graph(in_path, format_name);
            ResistanceResult r = resistance(g, SearchBudget{budget});
            if (!r.known)
                return emit(json{{"status", "budget_exhausted"}}, kExitBudget);
            return emit(json{{"resistance", r.value}, {"witness", coloring_report(*r.witness)}},
                        kExitOk);
        }

        if (verify->parsed()) {
            Graph g = load_graph(in_path, format_name);
            EdgeColoring c = load_coloring(coloring_path);
            AdditiveVerdict verdict = verify_additive(g, c, require_proper);
            return emit(verdict_report(verdict, require_proper), kExitOk);
        }

        if (labelset->parsed()) {
            LabelSet a = difference_free_set(n_param);
            return emit(json{{"elements", a.values()},
                             {"max", a.max()},
                             {"difference_condition", difference_condition_holds(a)}},
                        kExitOk);
        }

        if (bound->parsed()) {
            AdditiveIndexBound b = additive_index_bound(d_param);
            return emit(json{{"bound", b.bound}, {"refined_bound", b.refined_bound}}, kExitOk);
        }

        if (spaced->parsed()) {
            if (do_check + do_transform + do_make != 1)
                throw std::runtime_error("pick exactly one of --check, --transform, --make");
            Graph g = load_graph(in_path, format_name);
            EdgeColoring c = load_coloring(coloring_path);
            if (do_check)
                return emit(json{{"spaced", is_spaced(g, c)}}, kExitOk);
            if (do_transform)
                return emit(json{{"coloring", coloring_report(spaced_to_additive(g, c))}}, kExitOk);
            SpacedRunResult run = make_spaced(g, c, step_budget);
            json report = trace_report(run);
            report.erase("phases");
            json phase_summary = json::array();
            for (const auto& phase : run.trace.phases)
                phase_summary.push_back(json{{"phase", phase.phase},
                                             {"satisfied", phase.satisfied},
                                             {"satisfied_at_step", phase.satisfied_at_step},
                                             {"steps", phase.steps.size()}});
            report["phases"] = std::move(phase_summary);
            report["projection"] = coloring_report(run.tagged.projection());
            if (!trace_path.empty())
                spill(trace_path, trace_report(run).dump() + "\n");
            return emit(report, run.success ? kExitOk : kExitBudget);
        }

        if (oracle_cmd->parsed()) {
            if (oracle_eta + oracle_resistance + !labels_text.empty() != 1)
                throw std::runtime_error("pick exactly one of --eta-p-prime, --resistance, --strong-set");
            Graph g = load_graph(in_path, format_name);
            if (oracle_eta) {
                Label cap = max_label;
                if (cap == 0) {
                    int md = 0;
                    for (VertexId v = 0; v < g.vertex_count(); ++v)
                        md = std::max(md, g.degree(v));
                    cap = 2 * md + 2;
                }
                auto r = oracle::exact_eta_p_prime(g, cap, SearchBudget{budget});
                if (r.status == Feasibility::Unknown)
                    return emit(json{{"status", "budget_exhausted"}}, kExitBudget);
                if (r.status == Feasibility::No)
                    return emit(json{{"eta_p_prime", nullptr}, {"max_label", cap}}, kExitOk);
                return emit(json{{"eta_p_prime", r.value},
                                 {"witness", coloring_report(*r.witness)}},
                            kExitOk);
            }
            if (oracle_resistance) {
                auto r = oracle::exact_resistance(g, SearchBudget{budget});
                if (!r.known)
                    return emit(json{{"status", "budget_exhausted"}}, kExitBudget);
                return emit(json{{"resistance", r.value}, {"witness", coloring_report(*r.witness)}},
                            kExitOk);
            }
            LabelSet a(parse_label_list(labels_text));
            auto r = oracle::verify_strong_set(g, a, SearchBudget{budget});
            if (r.status == Feasibility::Unknown)
                return emit(json{{"status", "budget_exhausted"}}, kExitBudget);
            json report{{"strong", r.status == Feasibility::Yes}, {"via_shortcut", r.via_shortcut}};
            report["counterexample"] =
                r.counterexample ? coloring_report(*r.counterexample) : json(nullptr);
            return emit(report, kExitOk);
        }

        if (girth_cmd->parsed()) {
            Graph g = load_graph(in_path, format_name);
            auto value = girth(g);
            return emit(json{{"girth", value ? json(*value) : json("infinite")}}, kExitOk);
        }
    } catch (const std::exception& err) {
        return emit(json{{"error", err.what()}}, kExitError);
    }
    return emit(json{{"error", "no subcommand"}}, kExitError);
}
