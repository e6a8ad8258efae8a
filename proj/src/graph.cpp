#include "knesertw/graph.hpp"

#include <stdexcept>

namespace knesertw {

Graph::Graph(std::size_t n) : adj_(n, DynBitset(n)) {}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u >= adj_.size() || v >= adj_.size())
        throw std::out_of_range("Graph: vertex out of range");
    if (!adj_[u].test(v)) {
        adj_[u].set(v);
        adj_[v].set(u);
        ++num_edges_;
    }
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (std::uint32_t v = 0; v < adj_.size(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(num_edges_);
    for (std::uint32_t u = 0; u < adj_.size(); ++u)
        for (std::size_t v = adj_[u].find_next(u + 1); v < adj_.size();
             v = adj_[u].find_next(v + 1))
            out.emplace_back(u, static_cast<std::uint32_t>(v));
    return out;
}

bool Graph::is_independent(const VertexSet& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (has_edge(vs[i], vs[j])) return false;
    return true;
}

std::vector<DynBitset> Graph::components(const DynBitset& alive) const {
    std::vector<DynBitset> comps;
    DynBitset seen(adj_.size());
    for (std::size_t s = alive.find_first(); s < alive.size(); s = alive.find_next(s + 1)) {
        if (seen.test(s)) continue;
        DynBitset comp(adj_.size());
        comp.set(s);
        DynBitset frontier = comp;
        while (frontier.any()) {
            DynBitset next(adj_.size());
            for (std::size_t v = frontier.find_first(); v < frontier.size();
                 v = frontier.find_next(v + 1))
                next |= adj_[v];
            next &= alive;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

DynBitset Graph::full_vertex_set() const {
    DynBitset all(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) all.set(v);
    return all;
}

Graph complete_graph(std::size_t m) {
    Graph g(m);
    for (std::uint32_t u = 0; u < m; ++u)
        for (std::uint32_t v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(std::size_t m) {
    Graph g(m);
    for (std::uint32_t u = 0; u + 1 < m; ++u) g.add_edge(u, u + 1);
    return g;
}

}  // namespace knesertw
