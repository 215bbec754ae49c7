#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mvd/graph.hpp"
#include "mvd/solver.hpp"

namespace mvd {

// Edge-list text format (".mvdg"):
//   # comment
//   vertices: a, b, c
//   edges: a-b, b-c
// Whitespace-insensitive; '#' starts a comment anywhere on a line.
Graph parse_mvdg(std::string_view text);
std::string format_mvdg(const Graph& g);

// Matrix layout shared with the catalog: a header line of names (optionally
// name:color pairs, colors ignored here) followed by 0/1 adjacency rows.
Graph parse_matrix_graph(std::string_view text);

// Reads either format, deciding by the first data line.
Graph load_graph_file(const std::filesystem::path& path);
void save_mvdg(const Graph& g, const std::filesystem::path& path);

// Coloring text format: "a:1, b:2, c:1". Must assign every vertex exactly once.
Coloring parse_coloring(const Graph& g, std::string_view text);
std::string format_coloring(const Graph& g, const Coloring& c);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

namespace detail {
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
// Removes '#' comments and blank lines, keeping line order.
std::vector<std::string> data_lines(std::string_view text);
}  // namespace detail

}  // namespace mvd
