#pragma once

#include <vector>

#include "flame/digraph.hpp"

namespace flame {

/// Vertex-splitting transform: every v != r becomes an edge t_v -> h_v where
/// t_v inherits the ingoing and h_v the outgoing edges of v. Edge-disjoint
/// r -> t_v systems in the split digraph correspond to internally disjoint
/// r -> v systems in the base digraph.
class SplitDigraph {
 public:
  explicit SplitDigraph(RootedDigraph base);

  const RootedDigraph& base() const { return base_; }
  const RootedDigraph& graph() const { return split_; }

  /// Split identifiers of a base vertex; both equal the root for the root.
  Vertex tail_of(Vertex base_vertex) const { return tail_[static_cast<std::size_t>(base_vertex)]; }
  Vertex head_of(Vertex base_vertex) const { return head_[static_cast<std::size_t>(base_vertex)]; }
  Vertex origin(Vertex split_vertex) const { return origin_[static_cast<std::size_t>(split_vertex)]; }

  Edge map_edge(Edge base_edge) const;
  /// The base edge a split edge stands for; nullopt for internal t_v h_v edges.
  std::optional<Edge> unmap_edge(Edge split_edge) const;

  /// Base digraph formed by the non-internal edges of a spanning subdigraph
  /// of graph().
  RootedDigraph contract(const RootedDigraph& split_sub) const;

  /// r -> v base path as an r -> t_v split path.
  std::vector<Vertex> lift_path(std::span<const Vertex> base_path) const;
  /// r -> t_v split path back to the base r -> v path.
  std::vector<Vertex> lower_path(std::span<const Vertex> split_path) const;

 private:
  RootedDigraph base_;
  RootedDigraph split_;
  std::vector<Vertex> tail_;
  std::vector<Vertex> head_;
  std::vector<Vertex> origin_;
  std::vector<char> is_tail_;
};

/// Maximum number of edge-disjoint r -> t_v paths in the split digraph.
int edge_disjoint_paths_to_tail(const SplitDigraph& split, Vertex base_target);

}  // namespace flame
