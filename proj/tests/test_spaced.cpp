#include <doctest.h>

#include "etaedge/spaced.hpp"

#include <map>

#include "etaedge/additive.hpp"
#include "etaedge/edge_coloring.hpp"
#include "test_util.hpp"

using namespace etaedge;
using namespace etaedge::testing;

namespace {

// Step invariants for the recoloring walks: no backtracking, exactly one edge
// carries the moving tag, and away from the walk head the projection looks
// proper with only the heavy color allowed to double up at the two head
// vertices.
void check_trace_invariants(const Graph& g, const EdgeColoring& start,
                            const SpacedRunResult& run) {
    int d = *g.regular_degree();
    auto snapshots = replay_trace(g, start, run.trace);
    std::size_t snap = 0;

    // Snapshot 0 is the initial tagging.
    std::map<int, EdgeId> tag_at;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (snapshots[0].tag[e] != 0)
            tag_at[snapshots[0].tag[e]] = e;

    for (const auto& phase : run.trace.phases) {
        for (const auto& step : phase.steps) {
            ++snap;
            REQUIRE(snap < snapshots.size());
            const TaggedColoring& t = snapshots[snap];

            // Walk validity.
            const auto& walk = step.walk;
            REQUIRE(walk.size() >= 3);
            for (std::size_t k = 0; k + 1 < walk.size(); ++k)
                CHECK(g.adjacent(walk[k], walk[k + 1]));
            for (std::size_t k = 1; k + 1 < walk.size(); ++k)
                CHECK(walk[k - 1] != walk[k + 1]);
            CHECK(walk.back() == step.advanced_to);

            // Tag conservation: the moving tag sits on one edge, the others
            // have not moved.
            int seen = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (t.tag[e] == phase.phase)
                    ++seen;
            CHECK(seen == 1);
            CHECK(t.tag[step.tag_destination] == phase.phase);
            for (const auto& [index, home] : tag_at)
                if (index != phase.phase)
                    CHECK(t.tag[home] == index);

            // Local properness: d distinct colors everywhere off the head,
            // and only d+1 may repeat at the head vertices, at most twice.
            VertexId head_a = walk[walk.size() - 2];
            VertexId head_b = walk.back();
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                std::map<Label, int> count;
                for (auto [w, e] : g.neighbors(v))
                    ++count[t.labels[e]];
                if (v == head_a || v == head_b) {
                    for (const auto& [label, times] : count) {
                        if (label == d + 1)
                            CHECK(times <= 2);
                        else
                            CHECK(times == 1);
                    }
                } else {
                    CHECK(count.size() == static_cast<std::size_t>(d));
                }
            }
        }
        if (phase.satisfied) {
            // Phase exit: the projection is proper and no two tags with
            // indices up to this phase are mutually 2-reachable (including
            // each with itself). Later phases must enter with this intact.
            const TaggedColoring& t = snapshots[snap];
            std::map<Label, int> seen;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                seen.clear();
                for (auto [w, e] : g.neighbors(v))
                    CHECK(++seen[t.labels[e]] == 1);
            }
            std::vector<EdgeId> low;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (t.tag[e] >= 1 && t.tag[e] <= phase.phase)
                    low.push_back(e);
            for (std::size_t a = 0; a < low.size(); ++a)
                for (std::size_t b = a; b < low.size(); ++b)
                    CHECK_FALSE(is_two_reachable(g, low[a], low[b]));
            tag_at[phase.phase] = snapshots[snap].tagged_edge(phase.phase);
        }
    }
    CHECK(snap + 1 == snapshots.size());
}

} // namespace

TEST_CASE("is_spaced") {
    Graph c7 = cycle(7);
    CHECK(is_spaced(c7, coloring_over({3, 1, 2, 1, 2, 1, 2}, LabelSet({1, 2, 3}))));
    CHECK_FALSE(is_spaced(c7, coloring_over({3, 1, 3, 1, 2, 1, 2}, LabelSet({1, 2, 3}))));

    Graph k3 = complete(3);
    CHECK_FALSE(is_spaced(k3, coloring_over({1, 2, 3}, LabelSet({1, 2, 3}))));

    CHECK_THROWS_AS(is_spaced(c7, coloring_over({3, 3, 2, 1, 2, 1, 2}, LabelSet({1, 2, 3}))),
                    std::invalid_argument); // improper
    CHECK_THROWS_AS(is_spaced(c7, coloring_over({3, 1, 2, 1, 2, 1, 2}, LabelSet({1, 2, 3, 4}))),
                    std::invalid_argument); // wrong universe

    // No heavy edge at all is vacuously spaced.
    Graph c6 = cycle(6);
    CHECK(is_spaced(c6, coloring_over({1, 2, 1, 2, 1, 2}, LabelSet({1, 2, 3}))));
}

TEST_CASE("spaced_to_additive on C_7") {
    Graph c7 = cycle(7);
    EdgeColoring spaced = coloring_over({3, 1, 2, 1, 2, 1, 2}, LabelSet({1, 2, 3}));
    EdgeColoring out = spaced_to_additive(c7, spaced);
    CHECK(out.labels == std::vector<Label>{1, 2, 4, 2, 4, 2, 4});
    auto verdict = verify_additive(c7, out, /*require_proper=*/true);
    CHECK(verdict.ok);
    CHECK(verdict.sums == std::vector<Label>{6, 5, 4, 8, 4, 8, 3});
    Label top = *std::max_element(out.labels.begin(), out.labels.end());
    CHECK(top == 4); // 2d with d = 2

    CHECK_THROWS_AS(spaced_to_additive(complete(3), coloring_over({1, 2, 3}, LabelSet({1, 2, 3}))),
                    std::invalid_argument);
}

TEST_CASE("make_spaced returns immediately on C_7 with one heavy edge") {
    Graph c7 = cycle(7);
    EdgeColoring c = coloring_over({3, 1, 2, 1, 2, 1, 2}, LabelSet({1, 2, 3}));
    SpacedRunResult run = make_spaced(c7, c);
    CHECK(run.success);
    CHECK(run.heavy_count == 1);
    CHECK(run.girth_hypothesis_held); // girth 7 >= 6*1-5 = 1
    REQUIRE(run.trace.phases.size() == 1);
    CHECK(run.trace.phases[0].satisfied);
    CHECK(run.trace.phases[0].satisfied_at_step == 0);
    CHECK(run.trace.phases[0].steps.empty());
    CHECK(run.tagged.projection().labels == c.labels); // untouched
    CHECK(is_spaced(c7, run.tagged.projection()));
}

TEST_CASE("make_spaced walks on the petersen graph and keeps every invariant") {
    Graph p = petersen();
    ResistanceResult r = resistance(p);
    REQUIRE(r.known);
    REQUIRE(r.value == 2);
    SpacedRunResult run = make_spaced(p, *r.witness);

    // Any two distinct edges of the petersen graph are mutually 2-reachable
    // (diameter 2, girth 5), so two heavy edges can never be spaced and the
    // budget must run out in phase 2.
    for (EdgeId e = 0; e < p.edge_count(); ++e)
        for (EdgeId f = e + 1; f < p.edge_count(); ++f)
            CHECK(is_two_reachable(p, e, f));
    CHECK_FALSE(run.success);
    CHECK_FALSE(run.girth_hypothesis_held); // girth 5 < 6*2-5 = 7
    CHECK(run.steps_taken == 6 * p.edge_count());

    check_trace_invariants(p, *r.witness, run);
}

TEST_CASE("make_spaced walks in phase one when the heavy edge sits on a triangle") {
    Graph k5 = complete(5);
    ResistanceResult r = resistance(k5);
    REQUIRE(r.known);
    REQUIRE(r.value == 2);
    SpacedRunResult run = make_spaced(k5, *r.witness);
    CHECK_FALSE(run.success); // every edge of K_5 lies on a triangle
    REQUIRE(!run.trace.phases.empty());
    CHECK(run.trace.phases[0].steps.size() > 0);
    check_trace_invariants(k5, *r.witness, run);
}

TEST_CASE("make_spaced succeeds on larger odd cycles after the full chain") {
    for (int n : {5, 9, 11}) {
        Graph g = cycle(n);
        ResistanceResult r = resistance(g);
        REQUIRE(r.known);
        REQUIRE(r.value == 1);
        SpacedRunResult run = make_spaced(g, *r.witness);
        CHECK(run.success);
        EdgeColoring projection = run.tagged.projection();
        CHECK(is_spaced(g, projection));
        EdgeColoring additive = spaced_to_additive(g, projection);
        CHECK(verify_additive(g, additive, /*require_proper=*/true).ok);
        Label top = *std::max_element(additive.labels.begin(), additive.labels.end());
        CHECK(top <= 2 * *g.regular_degree());
        check_trace_invariants(g, *r.witness, run);
    }
}

TEST_CASE("make_spaced input validation") {
    Graph c7 = cycle(7);
    CHECK_THROWS_AS(make_spaced(c7, coloring_over({1, 2, 1, 2, 1, 2, 1}, LabelSet({1, 2, 3}))),
                    std::invalid_argument); // improper (edges 6 and 0 share vertex 0)
    CHECK_THROWS_AS(make_spaced(c7, coloring_over({2, 1, 2, 1, 2, 1, 3}, LabelSet({1, 2, 4, 3}))),
                    std::invalid_argument); // universe must be contiguous... {1,2,3,4} has size d+2
    Graph c6 = cycle(6);
    CHECK_THROWS_AS(make_spaced(c6, coloring_over({1, 2, 1, 2, 1, 2}, LabelSet({1, 2, 3}))),
                    std::invalid_argument); // no heavy edge
}

TEST_CASE("a non-minimum heavy class trips the lazy contract check") {
    // C_7 has resistance 1, but this proper coloring wastes two heavy edges.
    // The walk's color-ahead lookup must fail and name the blocked vertex.
    Graph c7 = cycle(7);
    EdgeColoring wasteful = coloring_over({3, 1, 2, 1, 2, 3, 2}, LabelSet({1, 2, 3}));
    REQUIRE(is_proper(c7, wasteful));
    try {
        make_spaced(c7, wasteful);
        FAIL("expected MinimalityViolation");
    } catch (const MinimalityViolation& err) {
        CHECK(err.vertex == 6);
    }
}

TEST_CASE("tagging helpers") {
    Graph c7 = cycle(7);
    EdgeColoring c = coloring_over({3, 1, 2, 1, 2, 1, 3}, LabelSet({1, 2, 3}));
    CHECK_FALSE(is_proper(c7, c)); // heavy edges adjacent: tagging itself is fine
    TaggedColoring t = initial_tagging(c7, c);
    CHECK(t.tag[0] == 1);
    CHECK(t.tag[6] == 2);
    CHECK(t.tagged_edge(1) == 0);
    CHECK(t.tagged_edge(2) == 6);
    CHECK(t.projection().labels == c.labels);
    CHECK_THROWS_AS(t.tagged_edge(3), std::logic_error);
}
