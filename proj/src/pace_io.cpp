#include "knesertw/pace_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace knesertw {

namespace {

std::runtime_error parse_error(const std::string& what, std::size_t line_no) {
    return std::runtime_error("parse error at line " + std::to_string(line_no) + ": " +
                              what);
}

}  // namespace

std::string write_gr(const Graph& g) {
    std::ostringstream out;
    out << "p tw " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

Graph parse_gr(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    Graph g;
    std::size_t edges_seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string p, tw;
            if (!(ls >> p >> tw >> n >> m) || p != "p" || tw != "tw")
                throw parse_error("expected 'p tw <n> <m>' header", line_no);
            have_header = true;
            g = Graph(n);
            continue;
        }
        std::size_t u, v;
        if (!(ls >> u >> v)) throw parse_error("expected edge '<u> <v>'", line_no);
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw parse_error("edge endpoints out of range", line_no);
        g.add_edge(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
        ++edges_seen;
    }
    if (!have_header) throw std::runtime_error("parse error: missing 'p tw' header");
    if (edges_seen != m || g.num_edges() != m)
        throw std::runtime_error("parse error: edge count does not match header");
    return g;
}

Graph parse_gr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_gr(in);
}

std::string write_td(const TreeDecomposition& td, std::size_t num_graph_vertices) {
    std::size_t max_bag = 0;
    for (const auto& bag : td.bags) max_bag = std::max(max_bag, bag.size());
    std::ostringstream out;
    out << "s td " << td.num_nodes << " " << max_bag << " " << num_graph_vertices << "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << (i + 1);
        for (std::uint32_t v : td.bags[i]) out << " " << (v + 1);
        out << "\n";
    }
    auto edges = td.tree_edges;
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) out << (a + 1) << " " << (b + 1) << "\n";
    return out.str();
}

TreeDecomposition parse_td(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t num_bags = 0, max_bag = 0, nv = 0;
    TreeDecomposition td;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string s, tdtok;
            if (!(ls >> s >> tdtok >> num_bags >> max_bag >> nv) || s != "s" ||
                tdtok != "td")
                throw parse_error("expected 's td <bags> <max-bag> <n>' header", line_no);
            have_header = true;
            td.num_nodes = num_bags;
            td.bags.resize(num_bags);
            continue;
        }
        if (line[0] == 'b') {
            char b;
            std::size_t id;
            std::istringstream bs(line);
            if (!(bs >> b >> id) || id < 1 || id > num_bags)
                throw parse_error("bad bag line", line_no);
            VertexSet bag;
            std::size_t v;
            while (bs >> v) {
                if (v < 1 || v > nv) throw parse_error("bag vertex out of range", line_no);
                bag.push_back(static_cast<std::uint32_t>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            td.bags[id - 1] = std::move(bag);
            continue;
        }
        std::size_t a, b2;
        if (!(ls >> a >> b2)) throw parse_error("expected tree edge '<i> <j>'", line_no);
        if (a < 1 || a > num_bags || b2 < 1 || b2 > num_bags || a == b2)
            throw parse_error("tree edge out of range", line_no);
        td.tree_edges.emplace_back(static_cast<std::uint32_t>(a - 1),
                                   static_cast<std::uint32_t>(b2 - 1));
    }
    if (!have_header) throw std::runtime_error("parse error: missing 's td' header");
    if (td.tree_edges.size() + 1 != num_bags && !(num_bags == 0 && td.tree_edges.empty()))
        throw std::runtime_error("parse error: tree edge count does not match bag count");
    return td;
}

TreeDecomposition parse_td_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_td(in);
}

}  // namespace knesertw
