#include "flame/digraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace flame {

namespace {

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Digraph::Digraph(std::shared_ptr<const NameTable> names, std::span<const Edge> edges)
    : names_(std::move(names)) {
  const auto n = names_->size();
  out_.assign(n, {});
  in_.assign(n, {});
  for (const Edge& e : edges) {
    if (!contains_vertex(e.tail) || !contains_vertex(e.head)) {
      throw DigraphError(DigraphError::Kind::UnknownVertex, "edge endpoint out of range");
    }
    if (e.tail == e.head) {
      throw DigraphError(DigraphError::Kind::SelfLoop, "self-loop at " + name(e.tail));
    }
    out_[static_cast<std::size_t>(e.tail)].push_back(e.head);
    in_[static_cast<std::size_t>(e.head)].push_back(e.tail);
  }
  edge_count_ = 0;
  for (auto& list : out_) {
    sort_unique(list);
    edge_count_ += list.size();
  }
  for (auto& list : in_) sort_unique(list);
}

std::optional<Vertex> Digraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_->begin(), names_->end(), name);
  if (it == names_->end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_->begin());
}

Vertex Digraph::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw DigraphError(DigraphError::Kind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

EdgeSet Digraph::in_edges(Vertex v) const {
  EdgeSet result;
  for (Vertex u : in(v)) result.push_back({u, v});
  std::sort(result.begin(), result.end());
  return result;
}

EdgeSet Digraph::out_edges(Vertex v) const {
  EdgeSet result;
  for (Vertex w : out(v)) result.push_back({v, w});
  return result;
}

bool Digraph::has_edge(Vertex tail, Vertex head) const {
  if (!contains_vertex(tail) || !contains_vertex(head)) return false;
  auto list = out(tail);
  return std::binary_search(list.begin(), list.end(), head);
}

EdgeSet Digraph::edges() const {
  EdgeSet result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex w : out(u)) result.push_back({u, w});
  }
  return result;
}

bool Digraph::same_vertices(const Digraph& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

bool Digraph::is_subdigraph_of(const Digraph& super) const {
  if (!same_vertices(super)) return false;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    auto mine = out(u);
    auto theirs = super.out(u);
    if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) return false;
  }
  return true;
}

RootedDigraph::RootedDigraph(std::shared_ptr<const NameTable> names, Vertex root,
                             std::span<const Edge> edges)
    : Digraph(std::move(names), edges), root_(root) {
  if (!contains_vertex(root)) {
    throw DigraphError(DigraphError::Kind::MissingRoot, "root is not a vertex");
  }
  if (!in(root).empty()) {
    throw DigraphError(DigraphError::Kind::EdgeIntoRoot,
                       "edge " + name(in(root).front()) + "->" + name(root) + " enters the root");
  }
}

RootedDigraph RootedDigraph::from_names(
    std::string_view root, const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::string>& extra_vertices) {
  std::set<std::string> all(extra_vertices.begin(), extra_vertices.end());
  all.emplace(root);
  for (const auto& [u, w] : edges) {
    all.insert(u);
    all.insert(w);
  }
  auto names = std::make_shared<const NameTable>(all.begin(), all.end());
  auto index = [&](const std::string& s) {
    return static_cast<Vertex>(std::lower_bound(names->begin(), names->end(), s) - names->begin());
  };
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, w] : edges) list.push_back({index(u), index(w)});
  return RootedDigraph(names, index(std::string(root)), list);
}

RootedDigraph RootedDigraph::without_edges(std::span<const Edge> removed) const {
  EdgeSet gone(removed.begin(), removed.end());
  std::sort(gone.begin(), gone.end());
  std::vector<Edge> kept;
  kept.reserve(edge_count_);
  for (const Edge& e : edges()) {
    if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
  }
  return RootedDigraph(names_, root_, kept);
}

RootedDigraph RootedDigraph::with_edges(std::span<const Edge> added) const {
  std::vector<Edge> all = edges();
  all.insert(all.end(), added.begin(), added.end());
  return RootedDigraph(names_, root_, all);
}

RootedDigraph RootedDigraph::spanning(std::span<const Edge> kept) const {
  return RootedDigraph(names_, root_, kept);
}

RootedDigraph RootedDigraph::induced(std::span<const Vertex> keep) const {
  VertexSet kept = make_vertex_set({keep.begin(), keep.end()});
  if (!set_contains(kept, root_)) {
    throw DigraphError(DigraphError::Kind::MissingRoot, "induced subdigraph must keep the root");
  }
  std::vector<std::string> sub_names;
  sub_names.reserve(kept.size());
  for (Vertex v : kept) sub_names.push_back(name(v));
  auto table = std::make_shared<const NameTable>(std::move(sub_names));
  auto index = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin());
  };
  std::vector<Edge> sub_edges;
  for (Vertex u : kept) {
    for (Vertex w : out(u)) {
      if (set_contains(kept, w)) sub_edges.push_back({index(u), index(w)});
    }
  }
  return RootedDigraph(table, index(root_), sub_edges);
}

RootedDigraph RootedDigraph::without_root_edge(Vertex v) const {
  if (!has_edge(root_, v)) return *this;
  return without_edge({root_, v});
}

bool RootedDigraph::operator==(const RootedDigraph& other) const {
  return same_vertices(other) && root_ == other.root_ && out_ == other.out_;
}

VertexSet reachable(const Digraph& g, Vertex from, std::span<const Vertex> forbidden) {
  if (!g.contains_vertex(from)) throw std::invalid_argument("reachable: unknown start vertex");
  std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex f : forbidden) {
    if (g.contains_vertex(f)) blocked[static_cast<std::size_t>(f)] = 1;
  }
  if (blocked[static_cast<std::size_t>(from)]) {
    throw std::invalid_argument("reachable: start vertex is forbidden");
  }
  std::vector<char> seen(blocked.size(), 0);
  std::vector<Vertex> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.out(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (!seen[wi] && !blocked[wi]) {
        seen[wi] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexSet result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) result.push_back(v);
  }
  return result;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(std::span<const Vertex> set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

bool set_includes(std::span<const Vertex> super, std::span<const Vertex> sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VertexSet make_vertex_set(std::vector<Vertex> items) {
  sort_unique(items);
  return items;
}

EdgeSet make_edge_set(std::vector<Edge> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

bool edge_set_contains(std::span<const Edge> set, Edge e) {
  return std::binary_search(set.begin(), set.end(), e);
}

EdgeSet edge_set_difference(std::span<const Edge> a, std::span<const Edge> b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet edge_set_union(std::span<const Edge> a, std::span<const Edge> b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string describe(const Digraph& g, Edge e) {
  return g.name(e.tail) + "->" + g.name(e.head);
}

std::string describe(const Digraph& g, std::span<const Vertex> path) {
  std::ostringstream os;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) os << '.';
    os << g.name(path[i]);
  }
  return os.str();
}

std::string describe_set(const Digraph& g, std::span<const Vertex> set) {
  std::ostringstream os;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) os << ", ";
    os << g.name(set[i]);
  }
  return os.str();
}

}  // namespace flame
