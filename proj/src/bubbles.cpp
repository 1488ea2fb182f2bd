#include "flame/bubbles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "flame/flow.hpp"
#include "flame/menger.hpp"

namespace flame {

VertexSet entrance(const Digraph& g, std::span<const Vertex> set) {
  VertexSet members = make_vertex_set({set.begin(), set.end()});
  VertexSet result;
  for (Vertex w : members) {
    for (Vertex u : g.in(w)) {
      if (!set_contains(members, u)) {
        result.push_back(w);
        break;
      }
    }
  }
  return result;
}

VertexSet interior(const Digraph& g, std::span<const Vertex> set) {
  VertexSet members = make_vertex_set({set.begin(), set.end()});
  return set_difference(members, entrance(g, members));
}

std::optional<std::string> check_bubble(const RootedDigraph& g, const Bubble& b) {
  if (!set_contains(b.vertices, b.target)) return "bubble does not contain its target";
  if (set_contains(b.vertices, g.root())) return "bubble contains the root";
  if (b.entrance != entrance(g, b.vertices)) return "recorded entrance is wrong";
  if (auto err = check_infan(g, b.target, b.witness.paths)) return err;
  if (b.witness.size() != b.entrance.size()) return "witness is not one path per entrance vertex";
  if (first_vertices(b.witness) != b.entrance) return "witness paths do not start at the entrance";
  for (const Path& p : b.witness.paths) {
    for (Vertex w : p) {
      if (!set_contains(b.vertices, w)) return "witness path " + describe(g, p) + " leaves the bubble";
    }
  }
  return std::nullopt;
}

std::variant<Bubble, BubbleRefutation> is_bubble(const RootedDigraph& g, Vertex target,
                                                 std::span<const Vertex> set) {
  VertexSet members = make_vertex_set({set.begin(), set.end()});
  if (!set_contains(members, target)) throw std::invalid_argument("is_bubble: target outside the set");
  if (set_contains(members, g.root())) throw std::invalid_argument("is_bubble: set contains the root");
  for (Vertex w : members) {
    if (!g.contains_vertex(w)) throw std::invalid_argument("is_bubble: unknown vertex");
  }
  VertexSet ent = entrance(g, members);
  VertexSet starts = ent;
  starts.erase(std::remove(starts.begin(), starts.end(), target), starts.end());

  SplitFlowSpec spec;
  spec.present.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex w : members) spec.present[static_cast<std::size_t>(w)] = 1;
  spec.unit.assign(static_cast<std::size_t>(g.vertex_count()), 1);
  spec.unit[static_cast<std::size_t>(target)] = 0;
  spec.sources = starts;
  spec.sinks = {target};
  SplitFlow flow(g, std::move(spec));
  if (flow.run() < static_cast<int>(starts.size())) {
    return BubbleRefutation{starts, flow.cut()};
  }
  Bubble b;
  b.target = target;
  b.vertices = std::move(members);
  b.entrance = std::move(ent);
  b.witness.paths = flow.paths();
  if (set_contains(b.entrance, target)) b.witness.paths.push_back({target});
  std::sort(b.witness.paths.begin(), b.witness.paths.end());
  return b;
}

Bubble bubble_union(const RootedDigraph& g, std::span<const Bubble> chain) {
  if (chain.empty()) throw std::invalid_argument("bubble_union: empty chain");
  for (const Bubble& b : chain) {
    if (auto err = check_bubble(g, b)) throw std::invalid_argument("bubble_union: " + *err);
  }
  const Vertex target = chain.front().target;
  VertexSet united = chain.front().vertices;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Vertex t = chain[i].target;
    if (t != target && !set_contains(interior(g, united), t)) {
      throw std::invalid_argument("bubble_union: chain condition fails at position " + std::to_string(i));
    }
    united = set_union(united, chain[i].vertices);
  }

  std::map<Vertex, Path> to_target;  // u -> path from u to the first target
  for (const Path& p : chain.front().witness.paths) to_target[p.front()] = p;
  united = chain.front().vertices;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    VertexSet grown = set_union(united, chain[i].vertices);
    VertexSet fresh = set_difference(entrance(g, grown), entrance(g, united));
    std::map<Vertex, const Path*> later;
    for (const Path& q : chain[i].witness.paths) later[q.front()] = &q;
    for (Vertex u : fresh) {
      auto it = later.find(u);
      if (it == later.end()) throw std::logic_error("bubble_union: new entrance vertex without a witness path");
      const Path& q = *it->second;
      auto hit = std::find_if(q.begin(), q.end(), [&](Vertex w) { return set_contains(united, w); });
      if (hit == q.end()) throw std::logic_error("bubble_union: witness path never reaches the union");
      auto joined = to_target.find(*hit);
      if (joined == to_target.end()) throw std::logic_error("bubble_union: joining vertex has no path");
      Path p(q.begin(), hit);
      p.insert(p.end(), joined->second.begin(), joined->second.end());
      to_target[u] = std::move(p);
    }
    united = std::move(grown);
  }

  Bubble result;
  result.target = target;
  result.vertices = united;
  result.entrance = entrance(g, united);
  for (Vertex u : result.entrance) result.witness.paths.push_back(to_target.at(u));
  std::sort(result.witness.paths.begin(), result.witness.paths.end());
  if (auto err = check_bubble(g, result)) throw std::logic_error("bubble_union produced an invalid witness: " + *err);
  return result;
}

Bubble bubble_from_separation(const RootedDigraph& g, const MengerCertificate& cert) {
  if (auto err = check_certificate(g, cert)) {
    throw std::invalid_argument("bubble_from_separation: " + *err);
  }
  const Vertex r = g.root();
  const Vertex v = cert.target;
  const VertexSet& sep = cert.separation.vertices;
  RootedDigraph rest = g.without_root_edge(v);
  VertexSet outside = reachable(rest, r, sep);
  VertexSet all;
  for (Vertex w = 0; w < g.vertex_count(); ++w) all.push_back(w);

  Bubble b;
  b.target = v;
  b.vertices = set_difference(all, outside);
  if (entrance(rest, b.vertices) != sep) {
    throw std::logic_error("bubble_from_separation: entrance in D-rv differs from the separation");
  }
  for (Vertex w : rest.in(v)) {
    if (!set_contains(b.vertices, w)) {
      throw std::logic_error("bubble_from_separation: an in-neighbour of the target lies outside");
    }
  }
  b.entrance = entrance(g, b.vertices);
  for (std::size_t i = 0; i < cert.system.size(); ++i) {
    if (!cert.assignment[i]) continue;
    const Path& p = cert.system.paths[i];
    auto from = std::find(p.begin(), p.end(), *cert.assignment[i]);
    b.witness.paths.emplace_back(from, p.end());
  }
  if (set_contains(b.entrance, v)) b.witness.paths.push_back({v});
  std::sort(b.witness.paths.begin(), b.witness.paths.end());
  if (auto err = check_bubble(g, b)) throw std::logic_error("bubble_from_separation: " + *err);
  return b;
}

MaxBubble max_bubble(const RootedDigraph& g, Vertex v) {
  MengerCertificate cert = max_system(g, v);
  Bubble b = bubble_from_separation(g, cert);
  return {std::move(b), std::move(cert)};
}

LargenessVerdict largeness_check(const RootedDigraph& sub, const RootedDigraph& super, bool with_certificates) {
  if (!sub.is_subdigraph_of(super) || sub.root() != super.root()) {
    throw std::invalid_argument("largeness_check: not a spanning subdigraph with the same root");
  }
  LargenessVerdict verdict;
  std::map<Vertex, MaxBubble> bubbles;
  auto bubble_of = [&](Vertex v) -> const MaxBubble& {
    auto it = bubbles.find(v);
    if (it == bubbles.end()) it = bubbles.emplace(v, max_bubble(sub, v)).first;
    return it->second;
  };
  for (const Edge& e : edge_set_difference(super.edges(), sub.edges())) {
    if (!set_contains(bubble_of(e.head).bubble.vertices, e.tail)) {
      verdict.violation = e;
      return verdict;
    }
  }
  verdict.large = true;
  if (!with_certificates) return verdict;
  for (Vertex v = 0; v < sub.vertex_count(); ++v) {
    if (v == sub.root()) continue;
    const MengerCertificate& cert = bubble_of(v).certificate;
    if (auto err = check_certificate(sub, super, cert)) {
      throw std::logic_error("largeness certificate at " + sub.name(v) + " fails in the larger digraph: " + *err);
    }
    verdict.certificates.push_back(cert);
  }
  return verdict;
}

PathSystem fan_to_entrance_plus(const RootedDigraph& g, Vertex v, Vertex u) {
  const Vertex r = g.root();
  if (!g.contains_vertex(u) || u == r) throw std::invalid_argument("fan_to_entrance_plus: u must be a non-root vertex");
  MaxBubble mb = max_bubble(g, v);
  if (set_contains(mb.bubble.vertices, u)) {
    throw std::invalid_argument("fan_to_entrance_plus: u lies in the largest bubble");
  }
  RootedDigraph rest = g.without_root_edge(v);
  const VertexSet& ent = mb.certificate.separation.vertices;
  VertexSet ends = set_union(ent, VertexSet{u});
  VertexSet starts(rest.out(r).begin(), rest.out(r).end());

  // Entrance fan, cut short at u when it passes through u.
  std::vector<Path> segments;
  for (std::size_t i = 0; i < mb.certificate.system.size(); ++i) {
    if (!mb.certificate.assignment[i]) continue;
    const Path& p = mb.certificate.system.paths[i];
    auto stop = std::find(p.begin(), p.end(), *mb.certificate.assignment[i]);
    auto at_u = std::find(p.begin(), stop, u);
    if (at_u != stop) stop = at_u;
    Path prefix(p.begin(), stop + 1);
    std::size_t last_start = 1;
    for (std::size_t k = 1; k < prefix.size(); ++k) {
      if (set_contains(starts, prefix[k])) last_start = k;
    }
    segments.emplace_back(prefix.begin() + static_cast<std::ptrdiff_t>(last_start), prefix.end());
  }
  PathSystem partial{SystemKind::Disjoint, std::move(segments)};
  auto outcome = augmenting_walk(rest, starts, ends, partial);
  auto* grown = std::get_if<PathSystem>(&outcome);
  if (!grown) throw std::logic_error("fan_to_entrance_plus: no augmenting walk towards u");
  PathSystem fan{SystemKind::RootFan, {}};
  for (const Path& p : grown->paths) {
    Path full{r};
    full.insert(full.end(), p.begin(), p.end());
    fan.paths.push_back(std::move(full));
  }
  std::sort(fan.paths.begin(), fan.paths.end());
  if (auto err = check_fan(rest, r, fan.paths)) throw std::logic_error("fan_to_entrance_plus: " + *err);
  if (last_vertices(fan) != ends) throw std::logic_error("fan_to_entrance_plus: fan ends on the wrong set");
  return fan;
}

}  // namespace flame
