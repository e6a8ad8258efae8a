#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "knesertw/bitset.hpp"

namespace knesertw {

using VertexSet = std::vector<std::uint32_t>;  // sorted vertex indices

// Simple undirected graph on vertices 0..n-1 with adjacency bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    void add_edge(std::uint32_t u, std::uint32_t v);
    bool has_edge(std::uint32_t u, std::uint32_t v) const { return adj_[u].test(v); }

    const DynBitset& neighbors(std::uint32_t v) const { return adj_[v]; }
    std::size_t degree(std::uint32_t v) const { return adj_[v].count(); }
    std::size_t max_degree() const;

    // Edges as (u,v), u < v, sorted lexicographically.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    bool is_independent(const VertexSet& vs) const;

    // Connected components of the subgraph induced on `alive`.
    std::vector<DynBitset> components(const DynBitset& alive) const;

    DynBitset full_vertex_set() const;

private:
    std::vector<DynBitset> adj_;
    std::size_t num_edges_ = 0;
};

Graph complete_graph(std::size_t m);
Graph path_graph(std::size_t m);

}  // namespace knesertw
