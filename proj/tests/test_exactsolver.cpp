#include <doctest.h>

#include "knesertw/exactsolver.hpp"
#include "knesertw/kneser.hpp"

using namespace knesertw;

namespace {

Graph random_tree(std::size_t n, std::uint64_t seed) {
    Graph g(n);
    std::uint64_t state = seed;
    for (std::uint32_t v = 1; v < n; ++v) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        g.add_edge(v, static_cast<std::uint32_t>((state >> 33) % v));
    }
    return g;
}

void check_exact(const Graph& g, long expect) {
    for (SolveMethod m : {SolveMethod::SubsetDP, SolveMethod::BranchAndBound}) {
        SolveResult r = exact_treewidth(g, {}, m);
        CHECK(r.exact);
        CHECK(r.treewidth == expect);
        WidthReport w = validate_decomposition(g, r.certificate);
        CHECK(w.valid());
        CHECK(w.width == r.treewidth);
    }
}

}  // namespace

TEST_CASE("complete graphs have treewidth m-1") {
    for (std::size_t m = 1; m <= 8; ++m) check_exact(complete_graph(m), static_cast<long>(m) - 1);
}

TEST_CASE("trees have treewidth 1") {
    check_exact(path_graph(7), 1);
    for (std::uint64_t seed : {3u, 17u, 99u}) check_exact(random_tree(12, seed), 1);
}

TEST_CASE("Petersen has treewidth 4, methods agree, certificate validates") {
    Graph g = build_graph(validate_params(5, 2, 1)).graph;
    check_exact(g, 4);
}

TEST_CASE("single vertex and edgeless graphs") {
    check_exact(Graph(1), 0);
    check_exact(Graph(5), 0);
}

TEST_CASE("lower bound never exceeds the exact value") {
    CHECK(treewidth_lower_bound(complete_graph(6)) == 5);
    Graph petersen = build_graph(validate_params(5, 2, 1)).graph;
    long lb = treewidth_lower_bound(petersen);
    CHECK(lb >= 3);
    CHECK(lb <= 4);
}

TEST_CASE("greedy width sandwiches the exact value") {
    Graph petersen = build_graph(validate_params(5, 2, 1)).graph;
    GreedyResult fill = greedy_upper_bound(petersen, EliminationHeuristic::MinFill);
    CHECK(fill.width >= 4);
    CHECK(fill.width <= 6);
    CHECK(elimination_width(petersen, fill.order) == fill.width);
    CHECK(greedy_upper_bound(complete_graph(7), EliminationHeuristic::MinDegree).width == 6);
    CHECK(greedy_upper_bound(path_graph(6), EliminationHeuristic::MinFill).width == 1);
}

TEST_CASE("sandwich property over a mixed corpus") {
    std::vector<Graph> corpus;
    corpus.push_back(complete_graph(5));
    corpus.push_back(path_graph(9));
    corpus.push_back(random_tree(10, 5));
    corpus.push_back(build_graph(validate_params(5, 2, 1)).graph);
    corpus.push_back(build_graph(validate_params(5, 3, 2)).graph);
    corpus.push_back(build_graph(validate_params(6, 4, 3)).graph);
    for (const Graph& g : corpus) {
        SolveResult r = exact_treewidth(g);
        REQUIRE(r.exact);
        CHECK(treewidth_lower_bound(g) <= r.treewidth);
        CHECK(greedy_upper_bound(g, EliminationHeuristic::MinFill).width >= r.treewidth);
        CHECK(greedy_upper_bound(g, EliminationHeuristic::MinDegree).width >= r.treewidth);
    }
}

TEST_CASE("decomposition from any elimination order validates") {
    Graph g = build_graph(validate_params(5, 3, 2)).graph;
    std::vector<std::uint32_t> order;
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) order.push_back(v);
    TreeDecomposition td = decomposition_from_elimination(g, order);
    WidthReport r = validate_decomposition(g, td);
    CHECK(r.valid());
    CHECK(r.width == elimination_width(g, order));
}

TEST_CASE("p-separator predicate") {
    Graph g = build_graph(validate_params(5, 2, 1)).graph;
    BigRat p23 = make_rat(2, 3);
    CHECK(is_p_separator(g, g.full_vertex_set(), p23));  // no components left
    CHECK_FALSE(is_p_separator(g, DynBitset(10), p23));  // whole graph one component
    CHECK_THROWS(is_p_separator(g, DynBitset(10), make_rat(1, 2)));
    CHECK_THROWS(is_p_separator(g, DynBitset(10), BigRat(1)));
}

TEST_CASE("minimum balanced separators on named graphs") {
    BigRat p23 = make_rat(2, 3);

    SeparatorResult path = min_balanced_separator(path_graph(5), p23);
    CHECK(path.separator.size() == 1);
    CHECK(path.separator[0] == 2);  // middle vertex
    CHECK(path.is_minimum);

    for (std::size_t m = 3; m <= 6; ++m) {
        SeparatorResult km = min_balanced_separator(complete_graph(m), p23);
        CHECK(km.separator.size() == m);  // any leftover clique component is too big
        CHECK(km.separator.size() <= m);  // tw + 1
    }

    SeparatorResult petersen =
        min_balanced_separator(build_graph(validate_params(5, 2, 1)).graph, p23);
    CHECK(petersen.separator.size() <= 5);  // tw + 1 (Robertson-Seymour instance check)
    DynBitset X(10);
    for (std::uint32_t v : petersen.separator) X.set(v);
    CHECK(is_p_separator(build_graph(validate_params(5, 2, 1)).graph, X, p23));
}

TEST_CASE("separator size <= treewidth + 1 across the corpus") {
    std::vector<Graph> corpus;
    corpus.push_back(path_graph(8));
    corpus.push_back(complete_graph(6));
    corpus.push_back(random_tree(11, 7));
    corpus.push_back(build_graph(validate_params(5, 2, 1)).graph);
    corpus.push_back(build_graph(validate_params(5, 3, 2)).graph);
    BigRat p23 = make_rat(2, 3);
    for (const Graph& g : corpus) {
        SolveResult r = exact_treewidth(g);
        REQUIRE(r.exact);
        SeparatorResult sep = min_balanced_separator(g, p23);
        CHECK(static_cast<long>(sep.separator.size()) <= r.treewidth + 1);
    }
}

TEST_CASE("solver determinism") {
    Graph g = build_graph(validate_params(5, 2, 1)).graph;
    SolveResult a = exact_treewidth(g);
    SolveResult b = exact_treewidth(g);
    CHECK(a.treewidth == b.treewidth);
    CHECK(a.certificate.bags == b.certificate.bags);
    CHECK(a.certificate.tree_edges == b.certificate.tree_edges);
}

TEST_CASE("caps produce bracketing results or errors") {
    SolverLimits tiny;
    tiny.dp_max_vertices = 4;
    tiny.bnb_max_vertices = 6;
    Graph g = build_graph(validate_params(5, 2, 1)).graph;  // 10 vertices
    SolveResult r = exact_treewidth(g, tiny);
    CHECK_FALSE(r.exact);
    CHECK(r.lower <= 4);
    CHECK(r.upper >= 4);
    CHECK(validate_decomposition(g, r.certificate).valid());
    CHECK_THROWS(exact_treewidth(g, tiny, SolveMethod::SubsetDP));
}
