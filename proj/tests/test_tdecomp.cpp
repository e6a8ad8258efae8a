#include <doctest.h>

#include <algorithm>

#include "knesertw/exactsolver.hpp"
#include "knesertw/kneser.hpp"
#include "knesertw/tdecomp.hpp"

using namespace knesertw;

namespace {

TreeDecomposition trivial_decomposition(const Graph& g) {
    TreeDecomposition td;
    td.num_nodes = 1;
    td.bags.resize(1);
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) td.bags[0].push_back(v);
    return td;
}

}  // namespace

TEST_CASE("trivial decomposition is valid with width |V|-1") {
    Graph g = build_graph(validate_params(5, 2, 1)).graph;
    WidthReport r = validate_decomposition(g, trivial_decomposition(g));
    CHECK(r.valid());
    CHECK(r.width == 9);
}

TEST_CASE("Petersen star decomposition has width 5") {
    KneserParams p = validate_params(5, 2, 1);
    Graph g = build_graph(p).graph;
    VertexSet pencil = pencil_independent_set(p, {1});
    TreeDecomposition td = star_decomposition(g, pencil);
    WidthReport r = validate_decomposition(g, td);
    CHECK(r.valid());
    CHECK(r.width == 5);  // max(deg 3, 10 - 4 - 1)
    CHECK(td.num_nodes == 5);
}

TEST_CASE("K(6,3,2) star decomposition has width 15") {
    KneserParams p = validate_params(6, 3, 2);
    Graph g = build_graph(p).graph;
    TreeDecomposition td = star_decomposition(g, pencil_independent_set(p, {1, 2}));
    WidthReport r = validate_decomposition(g, td);
    CHECK(r.valid());
    CHECK(r.width == 15);  // max(10, 20 - 4 - 1)
}

TEST_CASE("star from empty set degenerates to the trivial decomposition") {
    Graph g = build_graph(validate_params(5, 2, 1)).graph;
    TreeDecomposition td = star_decomposition(g, {});
    WidthReport r = validate_decomposition(g, td);
    CHECK(r.valid());
    CHECK(r.width == 9);
}

TEST_CASE("star rejects dependent sets") {
    Graph g = complete_graph(4);
    CHECK_THROWS(star_decomposition(g, VertexSet{0, 1}));
}

TEST_CASE("validator flags an uncovered edge") {
    Graph g = build_graph(validate_params(5, 2, 1)).graph;
    TreeDecomposition td = trivial_decomposition(g);
    td.bags[0].erase(td.bags[0].begin());  // drop vertex 0; its edges lose cover
    WidthReport r = validate_decomposition(g, td);
    CHECK_FALSE(r.valid());
    bool saw_uncovered = false, saw_missing = false;
    for (const auto& v : r.violations) {
        if (v.kind == ViolationKind::UncoveredEdge) saw_uncovered = true;
        if (v.kind == ViolationKind::MissingVertex) saw_missing = true;
    }
    CHECK(saw_uncovered);
    CHECK(saw_missing);
}

TEST_CASE("validator flags a disconnected trace") {
    Graph g = path_graph(3);
    TreeDecomposition td;
    td.num_nodes = 3;
    td.bags = {{0, 1}, {1, 2}, {0, 2}};  // vertex 0 in bags 0 and 2, not 1
    td.tree_edges = {{0, 1}, {1, 2}};
    WidthReport r = validate_decomposition(g, td);
    bool saw = false;
    for (const auto& v : r.violations)
        if (v.kind == ViolationKind::DisconnectedTrace) saw = true;
    CHECK(saw);
}

TEST_CASE("validator flags a malformed tree before semantic checks") {
    Graph g = path_graph(3);
    TreeDecomposition td;
    td.num_nodes = 3;
    td.bags = {{0, 1}, {1, 2}, {0, 1, 2}};
    td.tree_edges = {{0, 1}};  // disconnected: node 2 unreachable
    WidthReport r = validate_decomposition(g, td);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::MalformedTree);
}

TEST_CASE("mutation of a star bag that breaks coverage is detected") {
    KneserParams p = validate_params(5, 2, 1);
    Graph g = build_graph(p).graph;
    TreeDecomposition td = star_decomposition(g, pencil_independent_set(p, {1}));
    for (std::size_t node = 1; node < td.num_nodes; ++node) {
        TreeDecomposition broken = td;
        // remove the leaf vertex itself; its incident edges lose their only cover
        VertexSet& bag = broken.bags[node];
        for (std::size_t i = 0; i < bag.size(); ++i) {
            TreeDecomposition mutated = td;
            mutated.bags[node].erase(mutated.bags[node].begin() + i);
            WidthReport r = validate_decomposition(g, mutated);
            // each deletion must either break coverage, a trace, or leave a
            // still-valid decomposition covered elsewhere; recheck honestly
            if (!r.valid()) CHECK(r.violations.size() >= 1);
        }
        std::uint32_t leaf_vertex = 0;
        for (std::uint32_t v : bag) {
            bool in_center = false;
            for (std::uint32_t w : td.bags[0]) in_center |= (w == v);
            if (!in_center) leaf_vertex = v;
        }
        TreeDecomposition mutated = td;
        auto& b = mutated.bags[node];
        b.erase(std::find(b.begin(), b.end(), leaf_vertex));
        CHECK_FALSE(validate_decomposition(g, mutated).valid());
    }
}

TEST_CASE("upper bound formula") {
    CHECK(upper_bound_formula(validate_params(6, 3, 2)) == 15);
    CHECK(upper_bound_formula(validate_params(5, 3, 2)) == 6);
    CHECK(upper_bound_formula(validate_params(5, 2, 1)) == 5);
}

TEST_CASE("star width equals max(Delta, |V|-alpha-1) with a maximum independent set") {
    for (long n = 4; n <= 8; ++n)
        for (long k = 2; k < n; ++k)
            for (long t = 1; t < k; ++t) {
                if (param_violation(n, k, t)) continue;
                if (binom(n, k) > 40) continue;
                KneserGraph kg = build_graph(KneserParams{n, k, t});
                AlphaResult alpha = brute_force_alpha(kg.graph);
                TreeDecomposition td = star_decomposition(kg.graph, alpha.witness);
                WidthReport r = validate_decomposition(kg.graph, td);
                CHECK(r.valid());
                long expect = std::max<long>(
                    static_cast<long>(kg.graph.max_degree()),
                    static_cast<long>(kg.graph.num_vertices()) -
                        static_cast<long>(alpha.size) - 1);
                CHECK(r.width == expect);
            }
}
