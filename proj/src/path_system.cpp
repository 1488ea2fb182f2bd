#include "flame/path_system.hpp"

#include <algorithm>
#include <map>

namespace flame {

const char* to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::InternallyDisjoint: return "internally-disjoint";
    case SystemKind::Disjoint: return "disjoint";
    case SystemKind::RootFan: return "r-fan";
    case SystemKind::InFan: return "v-infan";
  }
  return "unknown";
}

VertexSet first_vertices(std::span<const Path> paths) {
  std::vector<Vertex> out;
  for (const Path& p : paths) {
    if (!p.empty()) out.push_back(p.front());
  }
  return make_vertex_set(std::move(out));
}

VertexSet last_vertices(std::span<const Path> paths) {
  std::vector<Vertex> out;
  for (const Path& p : paths) {
    if (!p.empty()) out.push_back(p.back());
  }
  return make_vertex_set(std::move(out));
}

EdgeSet last_edges(std::span<const Path> paths) {
  std::vector<Edge> out;
  for (const Path& p : paths) {
    if (p.size() >= 2) out.push_back({p[p.size() - 2], p.back()});
  }
  return make_edge_set(std::move(out));
}

EdgeSet path_edges(const Path& path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back({path[i], path[i + 1]});
  return make_edge_set(std::move(out));
}

EdgeSet system_edges(std::span<const Path> paths) {
  std::vector<Edge> out;
  for (const Path& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back({p[i], p[i + 1]});
  }
  return make_edge_set(std::move(out));
}

EdgeSet edges_into(std::span<const Path> paths, Vertex v) {
  std::vector<Edge> out;
  for (const Path& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i + 1] == v) out.push_back({p[i], v});
    }
  }
  return make_edge_set(std::move(out));
}

std::optional<std::string> check_path(const Digraph& g, const Path& path) {
  if (path.empty()) return "empty path";
  std::vector<Vertex> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "path " + describe(g, path) + " repeats a vertex";
  }
  for (Vertex v : path) {
    if (!g.contains_vertex(v)) return "path uses an unknown vertex";
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      return "path " + describe(g, path) + " uses missing edge " + describe(g, Edge{path[i], path[i + 1]});
    }
  }
  return std::nullopt;
}

namespace {

std::optional<std::string> check_distinct(const Digraph& g, std::span<const Path> paths) {
  std::vector<Path> sorted(paths.begin(), paths.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) return "path " + describe(g, *dup) + " occurs twice";
  return std::nullopt;
}

// Every vertex outside `shared` may lie on at most one path.
std::optional<std::string> check_overlap(const Digraph& g, std::span<const Path> paths,
                                         std::span<const Vertex> shared) {
  std::map<Vertex, std::size_t> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (Vertex v : paths[i]) {
      if (std::find(shared.begin(), shared.end(), v) != shared.end()) continue;
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh && it->second != i) {
        return "paths " + describe(g, paths[it->second]) + " and " + describe(g, paths[i]) + " share " + g.name(v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_rv_system(const Digraph& g, Vertex r, Vertex v, std::span<const Path> paths) {
  for (const Path& p : paths) {
    if (auto err = check_path(g, p)) return err;
    if (p.front() != r || p.back() != v || p.size() < 2) {
      return "path " + describe(g, p) + " is not an " + g.name(r) + "->" + g.name(v) + " path";
    }
  }
  if (auto err = check_distinct(g, paths)) return err;
  const Vertex shared[] = {r, v};
  return check_overlap(g, paths, shared);
}

std::optional<std::string> check_xy_system(const Digraph& g, std::span<const Vertex> sources,
                                           std::span<const Vertex> sinks, std::span<const Path> paths) {
  for (const Path& p : paths) {
    if (auto err = check_path(g, p)) return err;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool in_x = set_contains(sources, p[i]);
      bool in_y = set_contains(sinks, p[i]);
      if ((i == 0) != in_x || (i + 1 == p.size()) != in_y) {
        return "path " + describe(g, p) + " is not an X->Y path";
      }
    }
  }
  return check_overlap(g, paths, {});
}

std::optional<std::string> check_fan(const Digraph& g, Vertex r, std::span<const Path> paths) {
  for (const Path& p : paths) {
    if (auto err = check_path(g, p)) return err;
    if (p.front() != r) return "fan path " + describe(g, p) + " does not start at " + g.name(r);
  }
  if (auto err = check_distinct(g, paths)) return err;
  const Vertex shared[] = {r};
  return check_overlap(g, paths, shared);
}

std::optional<std::string> check_infan(const Digraph& g, Vertex v, std::span<const Path> paths) {
  for (const Path& p : paths) {
    if (auto err = check_path(g, p)) return err;
    if (p.back() != v) return "infan path " + describe(g, p) + " does not end at " + g.name(v);
  }
  if (auto err = check_distinct(g, paths)) return err;
  const Vertex shared[] = {v};
  return check_overlap(g, paths, shared);
}

bool separates(const RootedDigraph& g, const Separation& separation) {
  const Vertex r = g.root();
  const Vertex v = separation.target;
  if (set_contains(separation.vertices, r)) return true;
  bool direct = g.has_edge(r, v);
  if (direct && !separation.uses_root_edge) return false;
  RootedDigraph rest = g.without_root_edge(v);
  return !set_contains(reachable(rest, r, separation.vertices), v);
}

std::optional<std::string> check_certificate(const RootedDigraph& paths_host,
                                             const RootedDigraph& separation_host,
                                             const MengerCertificate& c) {
  const Vertex r = paths_host.root();
  const Vertex v = c.target;
  const auto& paths = c.system.paths;
  if (!paths_host.contains_vertex(v) || v == r) return "certificate target is not a non-root vertex";
  if (c.separation.target != v) return "separation target differs from certificate target";
  if (auto err = check_rv_system(paths_host, r, v, paths)) return err;
  if (!paths_host.is_subdigraph_of(separation_host)) return "path host is not a subdigraph of the separation host";
  if (c.assignment.size() != paths.size()) return "assignment does not cover every path";
  const auto& sep = c.separation.vertices;
  if (set_contains(sep, r) || set_contains(sep, v)) return "separation contains the root or the target";
  if (c.separation.uses_root_edge != separation_host.has_edge(r, v)) {
    return "root-edge flag disagrees with the host digraph";
  }
  std::vector<Vertex> chosen;
  std::size_t edge_choices = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    if (!c.assignment[i]) {
      if (p.size() != 2) return "path " + describe(paths_host, p) + " is assigned the root edge";
      ++edge_choices;
      continue;
    }
    Vertex s = *c.assignment[i];
    auto it = std::find(p.begin(), p.end(), s);
    if (it == p.end() || it == p.begin() || it + 1 == p.end()) {
      return "assigned vertex is not an internal vertex of " + describe(paths_host, p);
    }
    chosen.push_back(s);
  }
  if (edge_choices != (c.separation.uses_root_edge ? 1U : 0U)) return "root edge assigned inconsistently";
  VertexSet chosen_set = make_vertex_set(chosen);
  if (chosen_set.size() != chosen.size()) return "two paths are assigned the same vertex";
  if (chosen_set != sep) return "assignment does not match the separation set";
  if (!separates(separation_host, c.separation)) return "separation misses an r->v path";
  return std::nullopt;
}

}  // namespace flame
