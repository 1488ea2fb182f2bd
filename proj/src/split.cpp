#include "flame/split.hpp"

#include <algorithm>
#include <map>

#include "flame/flow.hpp"

namespace flame {

SplitDigraph::SplitDigraph(RootedDigraph base) : base_(std::move(base)) {
  const int n = base_.vertex_count();
  const Vertex r = base_.root();
  std::map<std::string, std::pair<Vertex, bool>> named;  // name -> (origin, is tail)
  named.emplace(base_.name(r), std::pair{r, true});
  for (Vertex v = 0; v < n; ++v) {
    if (v == r) continue;
    bool fresh_t = named.emplace("t:" + base_.name(v), std::pair{v, true}).second;
    bool fresh_h = named.emplace("h:" + base_.name(v), std::pair{v, false}).second;
    if (!fresh_t || !fresh_h) {
      throw DigraphError(DigraphError::Kind::DuplicateVertex,
                         "split name collision at " + base_.name(v));
    }
  }
  auto names = std::make_shared<NameTable>();
  tail_.assign(static_cast<std::size_t>(n), 0);
  head_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [name, info] : named) {
    auto id = static_cast<Vertex>(names->size());
    names->push_back(name);
    origin_.push_back(info.first);
    is_tail_.push_back(info.second ? 1 : 0);
    if (info.first == r) {
      tail_[static_cast<std::size_t>(r)] = id;
      head_[static_cast<std::size_t>(r)] = id;
    } else if (info.second) {
      tail_[static_cast<std::size_t>(info.first)] = id;
    } else {
      head_[static_cast<std::size_t>(info.first)] = id;
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    if (v != r) edges.push_back({tail_of(v), head_of(v)});
  }
  for (const Edge& e : base_.edges()) edges.push_back(map_edge(e));
  split_ = RootedDigraph(std::move(names), tail_of(r), edges);
}

Edge SplitDigraph::map_edge(Edge e) const {
  return {head_of(e.tail), tail_of(e.head)};
}

std::optional<Edge> SplitDigraph::unmap_edge(Edge e) const {
  Vertex u = origin(e.tail);
  Vertex w = origin(e.head);
  if (u == w) return std::nullopt;
  return Edge{u, w};
}

RootedDigraph SplitDigraph::contract(const RootedDigraph& split_sub) const {
  std::vector<Edge> edges;
  for (const Edge& e : split_sub.edges()) {
    if (auto base_edge = unmap_edge(e)) edges.push_back(*base_edge);
  }
  return RootedDigraph(base_.names(), base_.root(), edges);
}

std::vector<Vertex> SplitDigraph::lift_path(std::span<const Vertex> base_path) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < base_path.size(); ++i) {
    Vertex v = base_path[i];
    if (v == base_.root()) {
      out.push_back(tail_of(v));
      continue;
    }
    out.push_back(tail_of(v));
    if (i + 1 < base_path.size()) out.push_back(head_of(v));
  }
  return out;
}

std::vector<Vertex> SplitDigraph::lower_path(std::span<const Vertex> split_path) const {
  std::vector<Vertex> out;
  for (Vertex s : split_path) {
    Vertex v = origin(s);
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

int edge_disjoint_paths_to_tail(const SplitDigraph& split, Vertex base_target) {
  const RootedDigraph& g = split.graph();
  const int n = g.vertex_count();
  FlowNetwork net(n);
  for (const Edge& e : g.edges()) net.add_arc(e.tail, e.head, 1);
  return net.max_flow(g.root(), split.tail_of(base_target));
}

}  // namespace flame
