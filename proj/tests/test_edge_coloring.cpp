#include <doctest.h>

#include "etaedge/edge_coloring.hpp"

#include "test_util.hpp"

using namespace etaedge;
using namespace etaedge::testing;

TEST_CASE("fan coloring is proper and stays within max degree + 1") {
    std::vector<Graph> graphs{petersen(),  complete(4),  complete(5),          cycle(4),
                              cycle(7),    hypercube(3), complete_bipartite(4, 4), heawood()};
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        graphs.push_back(random_graph(5 + seed % 8, 2 + static_cast<int>(seed % 14), seed));
    for (const Graph& g : graphs) {
        EdgeColoring c = proper_edge_color(g);
        CHECK(is_proper(g, c));
        int md = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            md = std::max(md, g.degree(v));
        for (Label l : c.labels) {
            CHECK(l >= 1);
            CHECK(l <= md + 1);
        }
    }
}

TEST_CASE("fan coloring on the named examples") {
    EdgeColoring p = proper_edge_color(petersen());
    CHECK(is_proper(petersen(), p));
    CHECK(p.universe == LabelSet::contiguous(1, 4));

    EdgeColoring k4 = proper_edge_color(complete(4));
    CHECK(is_proper(complete(4), k4));
    for (Label l : k4.labels)
        CHECK(l <= 4);

    EdgeColoring c4 = proper_edge_color(cycle(4));
    CHECK(is_proper(cycle(4), c4));
    for (Label l : c4.labels)
        CHECK(l <= 3);
}

TEST_CASE("find_d_coloring") {
    SearchBudget budget;
    CHECK(find_d_coloring(complete_bipartite(3, 3), 3, budget).feasibility == Feasibility::Yes);
    CHECK(find_d_coloring(petersen(), 3, budget).feasibility == Feasibility::No);
    CHECK(find_d_coloring(cycle(6), 2, budget).feasibility == Feasibility::Yes);
    CHECK(find_d_coloring(cycle(5), 2, budget).feasibility == Feasibility::No);
    auto witness = find_d_coloring(hypercube(3), 3, budget);
    REQUIRE(witness.feasibility == Feasibility::Yes);
    CHECK(is_proper(hypercube(3), *witness.witness));

    SearchBudget tiny{3};
    CHECK(find_d_coloring(petersen(), 3, tiny).feasibility == Feasibility::Unknown);
}

TEST_CASE("classify named graphs") {
    SUBCASE("bipartite short-circuit") {
        ClassResult r = classify(complete_bipartite(3, 3));
        CHECK(r.kind == ClassResult::Kind::Class1);
        CHECK(r.certificate == ClassResult::Certificate::Bipartite);
        REQUIRE(r.witness.has_value());
        CHECK(is_proper(complete_bipartite(3, 3), *r.witness));
        CHECK(r.witness->universe == LabelSet::contiguous(1, 3));
    }
    SUBCASE("counting certificate") {
        ClassResult r = classify(cycle(5));
        CHECK(r.kind == ClassResult::Kind::Class2);
        CHECK(r.certificate == ClassResult::Certificate::Counting);
        REQUIRE(r.witness.has_value());
        CHECK(is_proper(cycle(5), *r.witness));
        CHECK(r.witness->universe == LabelSet::contiguous(1, 3));
    }
    SUBCASE("exhaustive class 2") {
        ClassResult r = classify(petersen());
        CHECK(r.kind == ClassResult::Kind::Class2);
        CHECK(r.certificate == ClassResult::Certificate::Exhaustive);
        REQUIRE(r.witness.has_value());
        CHECK(is_proper(petersen(), *r.witness));
    }
    SUBCASE("exhaustive class 1") {
        ClassResult r = classify(complete(4));
        CHECK(r.kind == ClassResult::Kind::Class1);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->universe == LabelSet::contiguous(1, 3));
        CHECK(is_proper(complete(4), *r.witness));
    }
    SUBCASE("irregular input") {
        CHECK_THROWS_AS(classify(Graph(3, {{0, 1}})), std::invalid_argument);
    }
    SUBCASE("budget exhaustion") {
        CHECK(classify(petersen(), SearchBudget{2}).kind == ClassResult::Kind::Unknown);
    }
}

TEST_CASE("resistance of named graphs") {
    auto check = [&](const Graph& g, int expected) {
        ResistanceResult r = resistance(g);
        REQUIRE(r.known);
        CHECK(r.value == expected);
        REQUIRE(r.witness.has_value());
        CHECK(is_proper(g, *r.witness));
        auto d = g.regular_degree();
        REQUIRE(d.has_value());
        CHECK(r.witness->universe == LabelSet::contiguous(1, *d + 1));
        int heavy = 0;
        for (Label l : r.witness->labels)
            if (l == *d + 1)
                ++heavy;
        CHECK(heavy == expected);
    };
    check(petersen(), 2);
    check(cycle(5), 1);
    check(cycle(7), 1);
    check(complete_bipartite(3, 3), 0);
    check(complete(4), 0);
    check(complete(5), 2);
    check(hypercube(3), 0);
}

TEST_CASE("resistance witness minimality is oracle-checked on a small graph") {
    // For every k below the answer, no k-edge matching leaves a 2-colorable rest.
    Graph c5 = cycle(5);
    ResistanceResult r = resistance(c5);
    REQUIRE(r.known);
    REQUIRE(r.value == 1);
    SearchBudget budget;
    auto whole = find_d_coloring(c5, 2, budget);
    CHECK(whole.feasibility == Feasibility::No);
}
