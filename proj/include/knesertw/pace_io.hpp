#pragma once

#include <iosfwd>
#include <string>

#include "knesertw/graph.hpp"
#include "knesertw/tdecomp.hpp"

namespace knesertw {

// PACE .gr: optional "c ..." comments, one "p tw <#vertices> <#edges>" header,
// then one "<u> <v>" line per edge, 1-based, u < v, sorted lexicographically.
std::string write_gr(const Graph& g);
Graph parse_gr(std::istream& in);
Graph parse_gr_file(const std::string& path);

// PACE .td: optional comments, "s td <#bags> <max-bag-size> <#vertices>",
// bag lines "b <id> <v...>" with sorted vertices, then tree edges "<i> <j>",
// i < j, sorted. num_graph_vertices drives the header's vertex count.
std::string write_td(const TreeDecomposition& td, std::size_t num_graph_vertices);
TreeDecomposition parse_td(std::istream& in);
TreeDecomposition parse_td_file(const std::string& path);

}  // namespace knesertw
