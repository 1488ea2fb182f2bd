#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flame {

// Vertices are dense indices into a lexicographically sorted name table, so
// index order and name order coincide. Every tie-break downstream relies on it.
using Vertex = std::int32_t;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free.
using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<Edge>;

class DigraphError : public std::runtime_error {
 public:
  enum class Kind {
    UnknownVertex,
    SelfLoop,
    EdgeIntoRoot,
    MissingRoot,
    DuplicateVertex,
    Malformed,
    Mismatch,
  };

  DigraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

using NameTable = std::vector<std::string>;

/// A finite simple digraph over a shared, sorted name table.
///
/// Values are immutable: every edit returns a new digraph that shares the
/// name table with its source, so spanning subdigraphs stay index-compatible.
class Digraph {
 public:
  Digraph() = default;

  /// Builds a digraph on `names` (must be sorted and unique). Edges may be
  /// unsorted and repeated; self-loops throw.
  Digraph(std::shared_ptr<const NameTable> names, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& name(Vertex v) const { return (*names_)[static_cast<std::size_t>(v)]; }
  const std::shared_ptr<const NameTable>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  /// Like find() but throws DigraphError(UnknownVertex).
  Vertex at(std::string_view name) const;
  bool contains_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  std::span<const Vertex> out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  EdgeSet in_edges(Vertex v) const;
  EdgeSet out_edges(Vertex v) const;
  bool has_edge(Vertex tail, Vertex head) const;
  bool has_edge(Edge e) const { return has_edge(e.tail, e.head); }

  /// All edges in lexicographic (tail, head) order.
  EdgeSet edges() const;

  bool same_vertices(const Digraph& other) const;
  /// Same vertex table and every edge of this digraph lies in `super`.
  bool is_subdigraph_of(const Digraph& super) const;

 protected:
  std::shared_ptr<const NameTable> names_ = std::make_shared<const NameTable>();
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

/// A digraph with a distinguished root that has no ingoing edges.
class RootedDigraph : public Digraph {
 public:
  RootedDigraph() = default;

  /// Throws DigraphError on a self-loop or an edge into the root.
  RootedDigraph(std::shared_ptr<const NameTable> names, Vertex root, std::span<const Edge> edges);

  /// Convenience for tests and generators: names are collected from `root`,
  /// `extra_vertices` and the edge list, then sorted.
  static RootedDigraph from_names(
      std::string_view root,
      const std::vector<std::pair<std::string, std::string>>& edges,
      const std::vector<std::string>& extra_vertices = {});

  Vertex root() const { return root_; }

  RootedDigraph without_edges(std::span<const Edge> removed) const;
  RootedDigraph without_edge(Edge e) const { return without_edges(std::span<const Edge>(&e, 1)); }
  RootedDigraph with_edges(std::span<const Edge> added) const;
  RootedDigraph with_edge(Edge e) const { return with_edges(std::span<const Edge>(&e, 1)); }
  /// Spanning subdigraph on the same vertex table keeping exactly `kept`.
  RootedDigraph spanning(std::span<const Edge> kept) const;
  /// Induced subdigraph on `keep` (must contain the root); vertices are
  /// re-indexed into a fresh name table.
  RootedDigraph induced(std::span<const Vertex> keep) const;
  /// D - rv when rv is an edge, otherwise a copy.
  RootedDigraph without_root_edge(Vertex v) const;

  bool operator==(const RootedDigraph& other) const;

 private:
  Vertex root_ = 0;
};

/// Vertices reachable from `from` by directed paths that avoid `forbidden`
/// entirely; `from` itself is included. Throws std::invalid_argument when
/// `from` is forbidden or unknown.
VertexSet reachable(const Digraph& g, Vertex from, std::span<const Vertex> forbidden);

/// Set helpers on sorted vectors.
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
bool set_contains(std::span<const Vertex> set, Vertex v);
bool set_includes(std::span<const Vertex> super, std::span<const Vertex> sub);
VertexSet make_vertex_set(std::vector<Vertex> items);
EdgeSet make_edge_set(std::vector<Edge> items);
bool edge_set_contains(std::span<const Edge> set, Edge e);
EdgeSet edge_set_difference(std::span<const Edge> a, std::span<const Edge> b);
EdgeSet edge_set_union(std::span<const Edge> a, std::span<const Edge> b);

std::string describe(const Digraph& g, Edge e);
/// "r.a.v" for a path.
std::string describe(const Digraph& g, std::span<const Vertex> path);
/// "a, b, c" for a set.
std::string describe_set(const Digraph& g, std::span<const Vertex> set);

}  // namespace flame
