#include "flame/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace flame {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw DigraphError(DigraphError::Kind::Malformed, "malformed digraph document: " + what);
}

std::string expect_string(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) malformed(where + " must be a string");
  std::string s = j.get<std::string>();
  if (s.empty()) malformed(where + " must be non-empty");
  return s;
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

LoadResult parse_digraph(const nlohmann::json& doc, bool normalize_root) {
  if (!doc.is_object()) malformed("top level must be an object");
  if (!doc.contains("root")) throw DigraphError(DigraphError::Kind::MissingRoot, "digraph document has no root");
  LoadResult out;
  const std::string root = expect_string(doc["root"], "root");

  std::set<std::string> listed;
  const bool has_vertices = doc.contains("vertices");
  if (has_vertices) {
    if (!doc["vertices"].is_array()) malformed("vertices must be an array");
    for (const auto& item : doc["vertices"]) {
      std::string name = expect_string(item, "vertex");
      if (!listed.insert(name).second) out.warnings.push_back("duplicate vertex " + name + " ignored");
    }
    if (!listed.count(root)) {
      throw DigraphError(DigraphError::Kind::MissingRoot, "root " + root + " is not among the vertices");
    }
  }

  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) malformed("edges must be an array");
    for (const auto& item : doc["edges"]) {
      if (!item.is_array() || item.size() != 2) malformed("each edge must be a two-element array");
      std::string u = expect_string(item[0], "edge endpoint");
      std::string w = expect_string(item[1], "edge endpoint");
      if (has_vertices && (!listed.count(u) || !listed.count(w))) {
        throw DigraphError(DigraphError::Kind::UnknownVertex,
                           "edge " + u + "->" + w + " uses a vertex missing from the vertex list");
      }
      if (u == w) throw DigraphError(DigraphError::Kind::SelfLoop, "self-loop at " + u);
      if (w == root) {
        if (!normalize_root) {
          throw DigraphError(DigraphError::Kind::EdgeIntoRoot, "edge " + u + "->" + w + " enters the root");
        }
        out.warnings.push_back("edge " + u + "->" + w + " enters the root and was dropped");
        continue;
      }
      if (!seen.emplace(u, w).second) {
        out.warnings.push_back("duplicate edge " + u + "->" + w + " ignored");
        continue;
      }
      edges.emplace_back(std::move(u), std::move(w));
    }
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "root" && it.key() != "vertices" && it.key() != "edges") {
      out.warnings.push_back("unknown field " + it.key() + " ignored");
    }
  }
  std::vector<std::string> extra(listed.begin(), listed.end());
  out.graph = RootedDigraph::from_names(root, edges, extra);
  return out;
}

LoadResult load_digraph(const std::filesystem::path& path, bool normalize_root) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
  return parse_digraph(doc, normalize_root);
}

nlohmann::json edges_to_json(const Digraph& g, std::span<const Edge> edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({g.name(e.tail), g.name(e.head)});
  return out;
}

nlohmann::json digraph_to_json(const RootedDigraph& g) {
  nlohmann::json out;
  out["root"] = g.name(g.root());
  out["vertices"] = *g.names();
  out["edges"] = edges_to_json(g, g.edges());
  return out;
}

std::string to_dot(const RootedDigraph& g, const EdgeSet* highlight) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << quoted(g.name(v));
    if (v == g.root()) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << quoted(g.name(e.tail)) << " -> " << quoted(g.name(e.head));
    if (highlight) os << (edge_set_contains(*highlight, e) ? " [style=bold]" : " [style=dashed, color=grey]");
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace flame
