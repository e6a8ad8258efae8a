#include "knesertw/tdecomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace knesertw {

namespace {

bool edges_form_tree(std::size_t num_nodes,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    if (num_nodes == 0) return false;
    if (edges.size() != num_nodes - 1) return false;
    std::vector<std::vector<std::uint32_t>> adj(num_nodes);
    for (auto [a, b] : edges) {
        if (a >= num_nodes || b >= num_nodes || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(num_nodes, 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::uint32_t x = stack.back();
        stack.pop_back();
        for (std::uint32_t y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++visited;
                stack.push_back(y);
            }
    }
    return visited == num_nodes;
}

}  // namespace

WidthReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    WidthReport report;
    if (td.bags.size() != td.num_nodes) {
        report.violations.push_back({ViolationKind::MalformedTree, "bag count != node count"});
        return report;
    }
    if (!edges_form_tree(td.num_nodes, td.tree_edges)) {
        report.violations.push_back(
            {ViolationKind::MalformedTree, "tree edges are not a tree"});
        return report;
    }

    std::size_t max_bag = 0;
    for (std::uint32_t i = 0; i < td.num_nodes; ++i) {
        if (td.bags[i].size() > max_bag) {
            max_bag = td.bags[i].size();
            report.largest_bag_node = i;
        }
    }
    report.width = static_cast<long>(max_bag) - 1;

    std::vector<DynBitset> bag_sets;
    bag_sets.reserve(td.num_nodes);
    for (const auto& bag : td.bags) {
        DynBitset bs(g.num_vertices());
        for (std::uint32_t v : bag) {
            if (v >= g.num_vertices())
                throw std::out_of_range("validate_decomposition: bag vertex out of range");
            bs.set(v);
        }
        bag_sets.push_back(std::move(bs));
    }

    // Condition 1: every edge covered by some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bs : bag_sets)
            if (bs.test(u) && bs.test(v)) {
                covered = true;
                break;
            }
        if (!covered)
            report.violations.push_back(
                {ViolationKind::UncoveredEdge,
                 "edge {" + std::to_string(u) + "," + std::to_string(v) + "}"});
    }

    // Condition 2: per vertex, the nodes holding it induce a connected
    // non-empty subtree of T.
    std::vector<std::vector<std::uint32_t>> node_adj(td.num_nodes);
    for (auto [a, b] : td.tree_edges) {
        node_adj[a].push_back(b);
        node_adj[b].push_back(a);
    }
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::uint32_t> holders;
        for (std::uint32_t i = 0; i < td.num_nodes; ++i)
            if (bag_sets[i].test(v)) holders.push_back(i);
        if (holders.empty()) {
            report.violations.push_back(
                {ViolationKind::MissingVertex, "vertex " + std::to_string(v)});
            continue;
        }
        std::vector<char> in_trace(td.num_nodes, 0), seen(td.num_nodes, 0);
        for (std::uint32_t i : holders) in_trace[i] = 1;
        std::vector<std::uint32_t> stack{holders[0]};
        seen[holders[0]] = 1;
        std::size_t visited = 1;
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            for (std::uint32_t y : node_adj[x])
                if (in_trace[y] && !seen[y]) {
                    seen[y] = 1;
                    ++visited;
                    stack.push_back(y);
                }
        }
        if (visited != holders.size())
            report.violations.push_back(
                {ViolationKind::DisconnectedTrace, "vertex " + std::to_string(v)});
    }
    return report;
}

TreeDecomposition star_decomposition(const Graph& g, const VertexSet& indep) {
    if (!g.is_independent(indep))
        throw std::invalid_argument("star_decomposition: set is not independent");
    VertexSet sorted = indep;
    std::sort(sorted.begin(), sorted.end());

    DynBitset in_indep(g.num_vertices());
    for (std::uint32_t v : sorted) in_indep.set(v);

    TreeDecomposition td;
    td.num_nodes = sorted.size() + 1;
    td.bags.resize(td.num_nodes);
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        if (!in_indep.test(v)) td.bags[0].push_back(v);
    for (std::uint32_t i = 0; i < sorted.size(); ++i) {
        std::uint32_t a = sorted[i];
        VertexSet bag = g.neighbors(a).to_vector();
        bag.push_back(a);
        std::sort(bag.begin(), bag.end());
        td.bags[i + 1] = std::move(bag);
        td.tree_edges.emplace_back(0, i + 1);
    }
    return td;
}

BigInt upper_bound_formula(const KneserParams& p) {
    return binom(p.n, p.k) - binom(p.n - p.t, p.k - p.t) - 1;
}

}  // namespace knesertw
