#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flame/digraph.hpp"
#include "flame/flow.hpp"

namespace flame {

enum class SystemKind {
  InternallyDisjoint,  // r -> v paths meeting only in r and v
  Disjoint,            // X -> Y paths, pairwise vertex-disjoint
  RootFan,             // paths sharing only their first vertex r
  InFan,               // paths sharing only their last vertex v
};

const char* to_string(SystemKind kind);

struct PathSystem {
  SystemKind kind = SystemKind::InternallyDisjoint;
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  bool empty() const { return paths.empty(); }
};

VertexSet first_vertices(std::span<const Path> paths);
VertexSet last_vertices(std::span<const Path> paths);
/// Last edges of the non-singleton paths.
EdgeSet last_edges(std::span<const Path> paths);
EdgeSet path_edges(const Path& path);
EdgeSet system_edges(std::span<const Path> paths);
/// Edges of the system whose head is `v` (in_P(v)).
EdgeSet edges_into(std::span<const Path> paths, Vertex v);

inline VertexSet first_vertices(const PathSystem& s) { return first_vertices(s.paths); }
inline VertexSet last_vertices(const PathSystem& s) { return last_vertices(s.paths); }
inline EdgeSet last_edges(const PathSystem& s) { return last_edges(s.paths); }
inline EdgeSet system_edges(const PathSystem& s) { return system_edges(s.paths); }

// Validators return a human-readable reason on failure and nullopt on success.
std::optional<std::string> check_path(const Digraph& g, const Path& path);
std::optional<std::string> check_rv_system(const Digraph& g, Vertex r, Vertex v, std::span<const Path> paths);
std::optional<std::string> check_xy_system(const Digraph& g, std::span<const Vertex> sources,
                                           std::span<const Vertex> sinks, std::span<const Path> paths);
std::optional<std::string> check_fan(const Digraph& g, Vertex r, std::span<const Path> paths);
std::optional<std::string> check_infan(const Digraph& g, Vertex v, std::span<const Path> paths);

/// A vertex set S inside V - {r, v}, optionally together with the edge rv.
struct Separation {
  Vertex target = 0;
  VertexSet vertices;
  bool uses_root_edge = false;

  std::size_t size() const { return vertices.size() + (uses_root_edge ? 1 : 0); }
};

/// Whether S (plus rv when flagged) meets every r -> target path of `g`.
bool separates(const RootedDigraph& g, const Separation& separation);

/// An internally disjoint r -> v system together with a separation that picks
/// exactly one element from each path. assignment[i] is the separating vertex
/// chosen on paths[i], or nullopt when paths[i] is the single edge rv.
struct MengerCertificate {
  Vertex target = 0;
  PathSystem system;
  Separation separation;
  std::vector<std::optional<Vertex>> assignment;
};

/// Checks the certificate's paths inside `paths_host` and its separation
/// inside `separation_host` (a supergraph or the same digraph). Success means
/// the system lies in paths_host and is a member of I_{separation_host}(v).
std::optional<std::string> check_certificate(const RootedDigraph& paths_host,
                                             const RootedDigraph& separation_host,
                                             const MengerCertificate& certificate);

inline std::optional<std::string> check_certificate(const RootedDigraph& g, const MengerCertificate& c) {
  return check_certificate(g, g, c);
}

}  // namespace flame
