#ifndef ROS_GRAPH_IO_HPP
#define ROS_GRAPH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ros/graph.hpp"

namespace ros {

enum class GraphFormat { gset, dimacs, edgelist };

/// Parses "gset", "dimacs" or "edgelist"; throws Error(argument) otherwise.
GraphFormat parse_format(std::string_view name);
const char* to_string(GraphFormat format);

/// Counters reported by the readers.
struct ParseStats {
    std::size_t collapsed_duplicates = 0;
};

/// Gset: first line `N M`, then exactly M lines `i j w` with 1-based indices.
WeightedGraph parse_gset(std::string_view text);

/// DIMACS COLOR: `c ...` comments, one `p edge N M` header, `e i j` unit edges.
/// Repeated pairs (in either orientation) are collapsed and counted in stats.
WeightedGraph parse_dimacs_color(std::string_view text, ParseStats* stats = nullptr);

/// Signed edge list: `i j w` per line, 0-based, separated by whitespace or
/// commas; `#` and `%` start comment lines. Node count is max index + 1.
/// Repeats with equal weight are collapsed; conflicting weights are an error.
WeightedGraph parse_edge_list(std::string_view text, ParseStats* stats = nullptr);

WeightedGraph parse_graph(std::string_view text, GraphFormat format, ParseStats* stats = nullptr);

/// Reads a whole file and dispatches on format. Throws Error(io) when unreadable.
WeightedGraph load_graph(const std::filesystem::path& path, GraphFormat format,
                         ParseStats* stats = nullptr);

/// Writes Gset text. Weights use the shortest representation that parses back
/// to the same double.
std::string serialize_gset(const WeightedGraph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ros

#endif  // ROS_GRAPH_IO_HPP
