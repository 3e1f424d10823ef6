#pragma once

#include <iosfwd>
#include <string>

#include "limpack/graph.hpp"

namespace limpack {

enum class GraphFormat { edge_list, dimacs };

// Edge-list text format: one "u v" edge per line with 0-based ids, '#'
// starts a comment, blank lines are ignored. The first data line may be
// "n <count>" to declare isolated vertices. Writers emit a canonical
// form: optional "# family <tag>" comment, "n <count>", then edges
// sorted ascending.
Graph parse_edge_list(std::istream& in, std::string* family_tag = nullptr);
void write_edge_list(std::ostream& out, const Graph& g, const std::string& family_tag = "");

// DIMACS: "p edge <n> <m>" header, "e u v" lines with 1-based ids (shifted
// to 0-based on parse), "c" comment lines.
Graph parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

Graph load_graph_file(const std::string& path, GraphFormat fmt, std::string* family_tag = nullptr);

std::string to_string(GraphFormat fmt);
GraphFormat format_from_string(const std::string& s);

}  // namespace limpack
