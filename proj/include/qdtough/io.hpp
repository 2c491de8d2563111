#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qdtough/graph.hpp"

namespace qdtough {

enum class GraphFormat { Graph6, EdgeList };

/// Largest order representable with the one- and four-byte graph6 headers.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Standard graph6 encoding without the optional ">>graph6<<" header or
/// trailing newline.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and surrounding whitespace.
/// Throws Parse on malformed input or orders above kGraph6MaxOrder.
Graph from_graph6(std::string_view text);

/// "n m" header line, then one "u v" line per edge (0-indexed, u < v).
std::string to_edge_list(const Graph& g);
/// Blank lines and '#' comments are ignored. Throws Parse.
Graph from_edge_list(std::string_view text);

/// ".g6" means graph6, ".edges"/".txt"/".el" mean edge list, otherwise the
/// content decides: a first line of two integers is an edge list.
GraphFormat detect_format(const std::filesystem::path& path, std::string_view content);

Graph read_graph(const std::filesystem::path& path);
Graph parse_graph(std::string_view content, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace qdtough
