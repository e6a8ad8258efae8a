#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knesertw/combinatorics.hpp"
#include "knesertw/graph.hpp"
#include "knesertw/tdecomp.hpp"

namespace knesertw {

enum class SolveMethod { SubsetDP, BranchAndBound, Heuristic };

struct SolverLimits {
    std::size_t dp_max_vertices = 26;
    std::size_t bnb_max_vertices = 34;
    double time_limit_seconds = 0;  // 0 = unlimited
};

struct SolveResult {
    bool exact = false;
    long treewidth = -1;  // meaningful only when exact
    long lower = 0;       // valid bracket in every case
    long upper = 0;
    TreeDecomposition certificate;  // validates with width == upper
    SolveMethod method = SolveMethod::Heuristic;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0;
};

// Exact treewidth with a validating certificate. Picks subset DP when the
// graph fits the DP cap, branch and bound otherwise; `force` overrides.
// Beyond the caps or past the time limit the result is marked non-exact and
// carries bracketing bounds plus the incumbent's certificate.
SolveResult exact_treewidth(const Graph& g, const SolverLimits& limits = {},
                            std::optional<SolveMethod> force = std::nullopt);

// Minor-min-width: max over a contraction sequence of the minimum degree.
// Never exceeds the treewidth.
long treewidth_lower_bound(const Graph& g);

enum class EliminationHeuristic { MinDegree, MinFill };

struct GreedyResult {
    long width = 0;
    std::vector<std::uint32_t> order;
};

// Width of the heuristic elimination ordering; an upper bound on treewidth.
// Ties broken by smallest vertex index.
GreedyResult greedy_upper_bound(const Graph& g, EliminationHeuristic h);

// Max back-degree of the ordering in its fill-in graph.
long elimination_width(const Graph& g, const std::vector<std::uint32_t>& order);

// Standard bag construction from an elimination ordering; validates against
// the graph with width == elimination_width.
TreeDecomposition decomposition_from_elimination(const Graph& g,
                                                 const std::vector<std::uint32_t>& order);

// True iff every component of g - X has at most p * |V \ X| vertices.
// Requires 2/3 <= p < 1 (throws otherwise); comparison is exact rational.
bool is_p_separator(const Graph& g, const DynBitset& X, const BigRat& p);

struct SeparatorResult {
    VertexSet separator;
    BigRat p;
    bool is_minimum = false;
};

// Minimum-cardinality p-separator by exhaustive search over subsets in
// increasing size. Requires |V| <= vertex_cap.
SeparatorResult min_balanced_separator(const Graph& g, const BigRat& p,
                                       std::size_t vertex_cap = 20);

}  // namespace knesertw
