#pragma once

#include <functional>
#include <span>
#include <vector>

#include "flame/digraph.hpp"

namespace flame {

using Path = std::vector<Vertex>;

/// Residual network with integer capacities. Augmentation is breadth-first in
/// arc insertion order and pushes one unit at a time.
class FlowNetwork {
 public:
  static constexpr int kUnbounded = 1 << 29;

  explicit FlowNetwork(int nodes);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int arc_count() const { return static_cast<int>(head_.size()); }
  int add_node();
  /// Returns the forward arc id; its residual twin is id ^ 1.
  int add_arc(int from, int to, int capacity);

  int arc_head(int arc) const { return head_[static_cast<std::size_t>(arc)]; }
  int arc_tail(int arc) const { return head_[static_cast<std::size_t>(arc ^ 1)]; }
  int capacity(int arc) const { return capacity_[static_cast<std::size_t>(arc)]; }
  int flow(int arc) const { return capacity(arc) - residual_[static_cast<std::size_t>(arc)]; }
  void push(int arc, int amount);
  std::span<const int> arcs_from(int node) const { return adjacency_[static_cast<std::size_t>(node)]; }

  /// One shortest augmenting path of one unit; false when none exists.
  bool augment(int source, int sink);
  int max_flow(int source, int sink);
  std::vector<char> residual_reachable(int source) const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> head_;
  std::vector<int> capacity_;
  std::vector<int> residual_;
};

/// Which part of a digraph a vertex-capacitated flow runs on.
struct SplitFlowSpec {
  std::vector<char> present;  // empty: every vertex
  std::vector<char> unit;     // empty: every vertex has capacity one
  VertexSet sources;
  VertexSet sinks;
  std::function<bool(Edge)> keep_edge;  // null: every edge between present vertices
};

/// Vertex-capacitated unit flow: each vertex w is split into in(w) -> out(w)
/// carrying its capacity, digraph edges and terminal attachments are unbounded.
/// A minimum cut therefore always consists of unit vertices.
class SplitFlow {
 public:
  SplitFlow(const Digraph& g, SplitFlowSpec spec);

  /// Loads an existing system of source -> sink paths as the current flow.
  /// Throws std::invalid_argument if a path leaves the network or overloads it.
  void preload(std::span<const Path> paths);
  bool augment();
  int run();
  int value() const { return value_; }

  /// Flow decomposition into source -> sink vertex paths, ordered by first
  /// vertex. Cycles are discarded.
  std::vector<Path> paths() const;
  /// Unit vertices on the source side of the residual cut nearest the sources.
  VertexSet cut() const;
  /// Vertices w whose in-node is residual-reachable from the super source.
  VertexSet source_side() const;

 private:
  int in_node(Vertex v) const { return 2 * v; }
  int out_node(Vertex v) const { return 2 * v + 1; }
  bool is_present(Vertex v) const;
  bool is_unit(Vertex v) const;
  int find_arc(int from, int to) const;

  const Digraph* g_;
  SplitFlowSpec spec_;
  FlowNetwork net_;
  int super_source_;
  int super_sink_;
  int value_ = 0;
};

}  // namespace flame
