#include "flame/flow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace flame {

FlowNetwork::FlowNetwork(int nodes) : adjacency_(static_cast<std::size_t>(nodes)) {}

int FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return node_count() - 1;
}

int FlowNetwork::add_arc(int from, int to, int capacity) {
  const int id = static_cast<int>(head_.size());
  head_.push_back(to);
  capacity_.push_back(capacity);
  residual_.push_back(capacity);
  head_.push_back(from);
  capacity_.push_back(0);
  residual_.push_back(0);
  adjacency_[static_cast<std::size_t>(from)].push_back(id);
  adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

void FlowNetwork::push(int arc, int amount) {
  residual_[static_cast<std::size_t>(arc)] -= amount;
  residual_[static_cast<std::size_t>(arc ^ 1)] += amount;
}

bool FlowNetwork::augment(int source, int sink) {
  std::vector<int> via(adjacency_.size(), -1);
  std::vector<char> seen(adjacency_.size(), 0);
  std::deque<int> queue{source};
  seen[static_cast<std::size_t>(source)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(sink)]) {
    int node = queue.front();
    queue.pop_front();
    for (int arc : adjacency_[static_cast<std::size_t>(node)]) {
      int next = head_[static_cast<std::size_t>(arc)];
      if (residual_[static_cast<std::size_t>(arc)] <= 0 || seen[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = 1;
      via[static_cast<std::size_t>(next)] = arc;
      queue.push_back(next);
    }
  }
  if (!seen[static_cast<std::size_t>(sink)]) return false;
  int bottleneck = kUnbounded;
  for (int node = sink; node != source;) {
    int arc = via[static_cast<std::size_t>(node)];
    bottleneck = std::min(bottleneck, residual_[static_cast<std::size_t>(arc)]);
    node = head_[static_cast<std::size_t>(arc ^ 1)];
  }
  if (bottleneck >= kUnbounded) throw std::logic_error("flow network has an unbounded path");
  for (int node = sink; node != source;) {
    int arc = via[static_cast<std::size_t>(node)];
    push(arc, 1);
    node = head_[static_cast<std::size_t>(arc ^ 1)];
  }
  return true;
}

int FlowNetwork::max_flow(int source, int sink) {
  int total = 0;
  while (augment(source, sink)) ++total;
  return total;
}

std::vector<char> FlowNetwork::residual_reachable(int source) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{source};
  seen[static_cast<std::size_t>(source)] = 1;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    for (int arc : adjacency_[static_cast<std::size_t>(node)]) {
      int next = head_[static_cast<std::size_t>(arc)];
      if (residual_[static_cast<std::size_t>(arc)] > 0 && !seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

SplitFlow::SplitFlow(const Digraph& g, SplitFlowSpec spec)
    : g_(&g),
      spec_(std::move(spec)),
      net_(2 * g.vertex_count() + 2),
      super_source_(2 * g.vertex_count()),
      super_sink_(2 * g.vertex_count() + 1) {
  const int n = g.vertex_count();
  for (Vertex w = 0; w < n; ++w) {
    if (!is_present(w)) continue;
    net_.add_arc(in_node(w), out_node(w), is_unit(w) ? 1 : FlowNetwork::kUnbounded);
  }
  for (Vertex u = 0; u < n; ++u) {
    if (!is_present(u)) continue;
    for (Vertex w : g.out(u)) {
      if (!is_present(w)) continue;
      if (spec_.keep_edge && !spec_.keep_edge(Edge{u, w})) continue;
      net_.add_arc(out_node(u), in_node(w), FlowNetwork::kUnbounded);
    }
  }
  for (Vertex x : spec_.sources) {
    if (is_present(x)) net_.add_arc(super_source_, in_node(x), FlowNetwork::kUnbounded);
  }
  for (Vertex y : spec_.sinks) {
    if (is_present(y)) net_.add_arc(out_node(y), super_sink_, FlowNetwork::kUnbounded);
  }
}

bool SplitFlow::is_present(Vertex v) const {
  return spec_.present.empty() || spec_.present[static_cast<std::size_t>(v)];
}

bool SplitFlow::is_unit(Vertex v) const {
  return spec_.unit.empty() || spec_.unit[static_cast<std::size_t>(v)];
}

int SplitFlow::find_arc(int from, int to) const {
  for (int arc : net_.arcs_from(from)) {
    if ((arc & 1) == 0 && net_.arc_head(arc) == to) return arc;
  }
  return -1;
}

void SplitFlow::preload(std::span<const Path> paths) {
  auto push = [&](int from, int to) {
    int arc = find_arc(from, to);
    if (arc < 0) throw std::invalid_argument("preloaded path leaves the flow network");
    if (net_.flow(arc) >= net_.capacity(arc)) {
      throw std::invalid_argument("preloaded paths overload the flow network");
    }
    net_.push(arc, 1);
  };
  for (const Path& p : paths) {
    if (p.empty()) throw std::invalid_argument("empty path");
    push(super_source_, in_node(p.front()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      push(in_node(p[i]), out_node(p[i]));
      if (i + 1 < p.size()) push(out_node(p[i]), in_node(p[i + 1]));
    }
    push(out_node(p.back()), super_sink_);
    ++value_;
  }
}

bool SplitFlow::augment() {
  if (!net_.augment(super_source_, super_sink_)) return false;
  ++value_;
  return true;
}

int SplitFlow::run() {
  while (augment()) {
  }
  return value_;
}

std::vector<Path> SplitFlow::paths() const {
  // Remaining flow per arc id; residual twins stay at zero.
  std::vector<int> left(static_cast<std::size_t>(net_.arc_count()), 0);
  for (int arc = 0; arc < net_.arc_count(); arc += 2) left[static_cast<std::size_t>(arc)] = net_.flow(arc);
  std::vector<Path> result;
  for (int first : net_.arcs_from(super_source_)) {
    if (first & 1) continue;
    while (left[static_cast<std::size_t>(first)] > 0) {
      --left[static_cast<std::size_t>(first)];
      std::vector<int> nodes{net_.arc_head(first)};
      while (nodes.back() != super_sink_) {
        int next_arc = -1;
        for (int arc : net_.arcs_from(nodes.back())) {
          if ((arc & 1) == 0 && left[static_cast<std::size_t>(arc)] > 0) {
            next_arc = arc;
            break;
          }
        }
        if (next_arc < 0) throw std::logic_error("flow decomposition hit a dead end");
        --left[static_cast<std::size_t>(next_arc)];
        int next = net_.arc_head(next_arc);
        auto again = std::find(nodes.begin(), nodes.end(), next);
        if (again != nodes.end()) {
          nodes.erase(again + 1, nodes.end());
        } else {
          nodes.push_back(next);
        }
      }
      nodes.pop_back();
      Path p;
      for (int node : nodes) {
        Vertex v = node / 2;
        if (p.empty() || p.back() != v) p.push_back(v);
      }
      result.push_back(std::move(p));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

VertexSet SplitFlow::cut() const {
  auto seen = net_.residual_reachable(super_source_);
  VertexSet result;
  for (Vertex w = 0; w < g_->vertex_count(); ++w) {
    if (!is_present(w) || !is_unit(w)) continue;
    if (seen[static_cast<std::size_t>(in_node(w))] && !seen[static_cast<std::size_t>(out_node(w))]) {
      result.push_back(w);
    }
  }
  return result;
}

VertexSet SplitFlow::source_side() const {
  auto seen = net_.residual_reachable(super_source_);
  VertexSet result;
  for (Vertex w = 0; w < g_->vertex_count(); ++w) {
    if (is_present(w) && seen[static_cast<std::size_t>(in_node(w))]) result.push_back(w);
  }
  return result;
}

}  // namespace flame
