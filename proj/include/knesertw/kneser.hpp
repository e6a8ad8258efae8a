#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knesertw/combinatorics.hpp"
#include "knesertw/graph.hpp"

namespace knesertw {

// Parameters of the generalized Kneser graph K(n,k,t): vertices are the
// k-subsets of [n], two adjacent iff they share fewer than t elements.
// Valid iff k > t > 0 and n > 2k - t.
struct KneserParams {
    long n = 0;
    long k = 0;
    long t = 0;
};

// Reason the triple is invalid, or nullopt if it is fine.
std::optional<std::string> param_violation(long n, long k, long t);

// Throws std::invalid_argument naming the violated constraint.
KneserParams validate_params(long n, long k, long t);

bool is_adjacent(const KSubset& u, const KSubset& v, long t);

BigInt vertex_count(const KneserParams& p);  // C(n,k)

// Degree of every vertex: sum_{i=0}^{t-1} C(k,i) C(n-k,k-i).
BigInt max_degree_formula(const KneserParams& p);

BigInt pencil_size_formula(const KneserParams& p);  // C(n-t,k-t)

// Number of k-subsets with at least t+1 elements inside [t+2]:
// sum_{j=t+1}^{min(k,t+2)} C(t+2,j) C(n-t-2,k-j).
BigInt crowded_size_formula(const KneserParams& p);

// Right side of the degree bound: C(n,k) - C(n-t,k-t) - (k-t) t C(n-k,k-t).
BigInt degree_bound_formula(const KneserParams& p);

inline constexpr std::size_t kDefaultVertexCap = 4096;

// Materialized graph: vertex i is the colex-rank-i k-subset of [n].
struct KneserGraph {
    KneserParams params;
    Graph graph;
    std::vector<KSubset> subsets;  // indexed by colex rank
};

// Throws std::length_error when C(n,k) exceeds the cap, std::invalid_argument
// on bad params. Requires n <= 128.
KneserGraph build_graph(const KneserParams& p, std::size_t vertex_cap = kDefaultVertexCap);

// Colex ranks of all k-subsets containing the given t-set. Independent:
// any two members share at least the t base elements.
VertexSet pencil_independent_set(const KneserParams& p, const std::vector<int>& base);

// Colex ranks of all k-subsets with >= t+1 elements in [t+2]. Independent:
// two (t+1)-subsets of a (t+2)-set always share >= t elements.
VertexSet crowded_independent_set(const KneserParams& p);

struct AlphaResult {
    std::size_t size = 0;
    VertexSet witness;
};

// Exact maximum independent set by branch and bound with a greedy clique
// cover bound. Deterministic: candidates explored in ascending vertex order,
// incumbent replaced only on strict improvement.
AlphaResult brute_force_alpha(const Graph& g, std::size_t vertex_cap = 64);

}  // namespace knesertw
