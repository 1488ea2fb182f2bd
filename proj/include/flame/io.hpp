#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "flame/digraph.hpp"

namespace flame {

struct LoadResult {
  RootedDigraph graph;
  std::vector<std::string> warnings;
};

/// Reads {"root": s, "vertices": [s...]?, "edges": [[s, s]...]}. Repeated
/// edges and vertices are dropped with a warning. Edges into the root throw
/// DigraphError(EdgeIntoRoot) unless `normalize_root`, which drops them with
/// a warning. Structural problems throw DigraphError(Malformed).
LoadResult parse_digraph(const nlohmann::json& doc, bool normalize_root = false);
LoadResult load_digraph(const std::filesystem::path& path, bool normalize_root = false);

/// Canonical document: sorted vertices, edges in (tail, head) name order.
nlohmann::json digraph_to_json(const RootedDigraph& g);
/// Edge list as [[tail, head], ...] in canonical order.
nlohmann::json edges_to_json(const Digraph& g, std::span<const Edge> edges);

/// Graphviz rendering. The root is a doublecircle; edges in `highlight` are
/// bold, the rest dashed grey when a highlight is given.
std::string to_dot(const RootedDigraph& g, const EdgeSet* highlight = nullptr);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace flame
