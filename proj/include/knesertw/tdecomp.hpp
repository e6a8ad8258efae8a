#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knesertw/combinatorics.hpp"
#include "knesertw/graph.hpp"
#include "knesertw/kneser.hpp"

namespace knesertw {

// Tree plus one bag of graph vertices per tree node.
struct TreeDecomposition {
    std::size_t num_nodes = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
    std::vector<VertexSet> bags;  // sorted vertex ranks, one per node
};

enum class ViolationKind {
    MalformedTree,      // node edges do not form a tree
    UncoveredEdge,      // graph edge in no bag
    MissingVertex,      // graph vertex in no bag
    DisconnectedTrace,  // nodes holding a vertex induce a disconnected subtree
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct WidthReport {
    long width = -1;  // max bag size - 1
    std::uint32_t largest_bag_node = 0;
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

// Checks the two defining conditions: every graph edge inside some bag, and
// every vertex's bag nodes inducing a connected non-empty subtree. Structural
// tree problems are reported first and skip the semantic checks.
WidthReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Star decomposition from an independent set: center node 0 with bag
// V minus indep, one leaf per member a with bag {a} plus its neighbors.
// Leaves are ordered by vertex rank. Throws if indep is not independent.
TreeDecomposition star_decomposition(const Graph& g, const VertexSet& indep);

// C(n,k) - C(n-t,k-t) - 1.
BigInt upper_bound_formula(const KneserParams& p);

}  // namespace knesertw
