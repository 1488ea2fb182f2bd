#include "flame/certificate.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "flame/io.hpp"

namespace flame {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw DigraphError(DigraphError::Kind::Malformed, "malformed certificate: " + what);
}

Vertex vertex_from_json(const Digraph& g, const nlohmann::json& j) {
  if (!j.is_string()) malformed("vertex names must be strings");
  return g.at(j.get<std::string>());
}

Path path_from_json(const Digraph& g, const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) malformed("a path must be a non-empty array");
  Path p;
  for (const auto& item : j) p.push_back(vertex_from_json(g, item));
  return p;
}

}  // namespace

nlohmann::json path_to_json(const Digraph& g, const Path& path) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex w : path) out.push_back(g.name(w));
  return out;
}

nlohmann::json system_to_json(const Digraph& g, const PathSystem& system) {
  nlohmann::json out = nlohmann::json::array();
  for (const Path& p : system.paths) out.push_back(path_to_json(g, p));
  return out;
}

nlohmann::json separation_to_json(const Digraph& g, const Separation& s) {
  return {{"vertices", path_to_json(g, s.vertices)}, {"uses_root_edge", s.uses_root_edge}};
}

nlohmann::json certificate_to_json(const Digraph& g, const MengerCertificate& c) {
  nlohmann::json assignment = nlohmann::json::array();
  for (const auto& a : c.assignment) assignment.push_back(a ? nlohmann::json(g.name(*a)) : nlohmann::json(nullptr));
  return {{"v", g.name(c.target)},
          {"system", system_to_json(g, c.system)},
          {"separation", separation_to_json(g, c.separation)},
          {"assignment", assignment}};
}

nlohmann::json bubble_to_json(const Digraph& g, const Bubble& b) {
  return {{"target", g.name(b.target)},
          {"vertices", path_to_json(g, b.vertices)},
          {"entrance", path_to_json(g, b.entrance)},
          {"witness", system_to_json(g, b.witness)}};
}

MengerCertificate certificate_from_json(const Digraph& g, const nlohmann::json& doc) {
  if (!doc.is_object()) malformed("certificate must be an object");
  for (const char* key : {"v", "system", "separation", "assignment"}) {
    if (!doc.contains(key)) malformed(std::string("missing field ") + key);
  }
  MengerCertificate c;
  c.target = vertex_from_json(g, doc["v"]);
  c.separation.target = c.target;
  c.system.kind = SystemKind::InternallyDisjoint;
  if (!doc["system"].is_array()) malformed("system must be an array");
  for (const auto& p : doc["system"]) c.system.paths.push_back(path_from_json(g, p));
  const auto& sep = doc["separation"];
  if (!sep.is_object() || !sep.contains("vertices") || !sep.contains("uses_root_edge") ||
      !sep["vertices"].is_array() || !sep["uses_root_edge"].is_boolean()) {
    malformed("separation must be {vertices: [...], uses_root_edge: bool}");
  }
  std::vector<Vertex> vs;
  for (const auto& item : sep["vertices"]) vs.push_back(vertex_from_json(g, item));
  c.separation.vertices = make_vertex_set(vs);
  if (c.separation.vertices.size() != vs.size()) malformed("separation lists a vertex twice");
  c.separation.uses_root_edge = sep["uses_root_edge"].get<bool>();
  if (!doc["assignment"].is_array()) malformed("assignment must be an array");
  for (const auto& item : doc["assignment"]) {
    if (item.is_null()) {
      c.assignment.emplace_back(std::nullopt);
    } else {
      c.assignment.emplace_back(vertex_from_json(g, item));
    }
  }
  return c;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string input_hash(const RootedDigraph& g) { return sha256_hex(digraph_to_json(g).dump()); }

nlohmann::json make_bundle(const ConstructionResult& result, bool prefix_relative) {
  const RootedDigraph& e = result.flame;
  nlohmann::json order = nlohmann::json::array();
  for (Vertex v : result.order) order.push_back(e.name(v));
  nlohmann::json per_vertex = nlohmann::json::array();
  for (const MengerCertificate& c : result.certificates) per_vertex.push_back(certificate_to_json(e, c));
  return {{"input_hash", input_hash(result.input)},
          {"order", order},
          {"per_vertex", per_vertex},
          {"output_edges", edges_to_json(e, e.edges())},
          {"prefix_relative", prefix_relative}};
}

std::optional<std::string> verify_bundle(const RootedDigraph& input, const nlohmann::json& bundle) {
  try {
    if (!bundle.is_object()) return "bundle must be an object";
    for (const char* key : {"input_hash", "order", "per_vertex", "output_edges"}) {
      if (!bundle.contains(key)) return std::string("bundle lacks ") + key;
    }
    if (!bundle["input_hash"].is_string() || bundle["input_hash"].get<std::string>() != input_hash(input)) {
      return "input hash does not match the digraph";
    }
    if (!bundle["order"].is_array()) return "order must be an array";
    std::vector<Vertex> order;
    for (const auto& item : bundle["order"]) order.push_back(vertex_from_json(input, item));
    std::vector<Vertex> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < input.vertex_count(); ++v) {
      if (v != input.root()) expected.push_back(v);
    }
    if (sorted_order != expected) return "order does not list every non-root vertex once";

    if (!bundle["output_edges"].is_array()) return "output_edges must be an array";
    std::vector<Edge> edges;
    for (const auto& item : bundle["output_edges"]) {
      if (!item.is_array() || item.size() != 2) return "output edges must be pairs";
      Edge e{vertex_from_json(input, item[0]), vertex_from_json(input, item[1])};
      if (!input.has_edge(e)) return "output edge " + describe(input, e) + " is not an edge of the input";
      edges.push_back(e);
    }
    const RootedDigraph flame = input.spanning(edges);

    if (!bundle["per_vertex"].is_array()) return "per_vertex must be an array";
    std::set<Vertex> covered;
    for (const auto& doc : bundle["per_vertex"]) {
      MengerCertificate c = certificate_from_json(input, doc);
      const std::string at = "certificate of " + input.name(c.target);
      if (c.target == input.root()) return at + ": the root has no certificate";
      if (!covered.insert(c.target).second) return at + " appears twice";
      if (auto err = check_certificate(flame, input, c)) return at + ": " + *err;
      if (last_edges(c.system) != flame.in_edges(c.target)) {
        return at + ": last edges differ from the in-edges of the output";
      }
    }
    if (covered.size() != expected.size()) return "some vertex has no certificate";
  } catch (const DigraphError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

}  // namespace flame
