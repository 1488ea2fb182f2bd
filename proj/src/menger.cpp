#include "flame/menger.hpp"

#include <algorithm>
#include <stdexcept>

#include "flame/flow.hpp"

namespace flame {

namespace {

void require_target(const RootedDigraph& g, Vertex v) {
  if (!g.contains_vertex(v)) throw std::invalid_argument("target vertex is not in the digraph");
  if (v == g.root()) throw std::invalid_argument("target vertex must differ from the root");
}

SplitFlow root_to_target_flow(const RootedDigraph& g, Vertex v) {
  const Vertex r = g.root();
  SplitFlowSpec spec;
  spec.unit.assign(static_cast<std::size_t>(g.vertex_count()), 1);
  spec.unit[static_cast<std::size_t>(r)] = 0;
  spec.unit[static_cast<std::size_t>(v)] = 0;
  spec.sources = {r};
  spec.sinks = {v};
  spec.keep_edge = [r, v](Edge e) { return !(e.tail == r && e.head == v); };
  return SplitFlow(g, std::move(spec));
}

}  // namespace

int local_connectivity(const RootedDigraph& g, Vertex v) {
  require_target(g, v);
  SplitFlow flow = root_to_target_flow(g, v);
  return flow.run() + (g.has_edge(g.root(), v) ? 1 : 0);
}

MengerCertificate max_system(const RootedDigraph& g, Vertex v) {
  require_target(g, v);
  const Vertex r = g.root();
  SplitFlow flow = root_to_target_flow(g, v);
  flow.run();

  MengerCertificate cert;
  cert.target = v;
  cert.system.kind = SystemKind::InternallyDisjoint;
  cert.system.paths = flow.paths();
  cert.separation.target = v;
  cert.separation.vertices = flow.cut();
  cert.separation.uses_root_edge = g.has_edge(r, v);
  if (cert.separation.uses_root_edge) cert.system.paths.push_back({r, v});
  std::sort(cert.system.paths.begin(), cert.system.paths.end());

  for (const Path& p : cert.system.paths) {
    if (p.size() == 2 && p.front() == r && p.back() == v) {
      cert.assignment.emplace_back(std::nullopt);
      continue;
    }
    std::optional<Vertex> pick;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (set_contains(cert.separation.vertices, p[i])) {
        if (pick) throw std::logic_error("minimum cut meets a flow path twice");
        pick = p[i];
      }
    }
    if (!pick) throw std::logic_error("minimum cut misses a flow path");
    cert.assignment.push_back(pick);
  }
  return cert;
}

CoveringResult covering_system(const RootedDigraph& g, Vertex v, std::span<const Edge> in_subset) {
  require_target(g, v);
  EdgeSet wanted = make_edge_set({in_subset.begin(), in_subset.end()});
  EdgeSet available = g.in_edges(v);
  if (!std::includes(available.begin(), available.end(), wanted.begin(), wanted.end())) {
    throw std::invalid_argument("requested edges are not all ingoing edges of the target");
  }
  RootedDigraph restricted = g.without_edges(edge_set_difference(available, wanted));
  MengerCertificate cert = max_system(restricted, v);
  CoveringResult result;
  if (cert.system.size() == wanted.size()) {
    result.system = std::move(cert.system);
  } else {
    result.refutation = std::move(cert);
  }
  return result;
}

namespace {

SplitFlowSpec linkage_spec(std::span<const Vertex> sources, std::span<const Vertex> sinks) {
  SplitFlowSpec spec;
  spec.sources = make_vertex_set({sources.begin(), sources.end()});
  spec.sinks = make_vertex_set({sinks.begin(), sinks.end()});
  // X -> Y paths never enter X nor leave Y.
  spec.keep_edge = [x = spec.sources, y = spec.sinks](Edge e) {
    return !set_contains(x, e.head) && !set_contains(y, e.tail);
  };
  return spec;
}

}  // namespace

AugmentOutcome augmenting_walk(const Digraph& g, std::span<const Vertex> sources,
                               std::span<const Vertex> sinks, const PathSystem& system) {
  VertexSet xs = make_vertex_set({sources.begin(), sources.end()});
  VertexSet ys = make_vertex_set({sinks.begin(), sinks.end()});
  if (auto err = check_xy_system(g, xs, ys, system.paths)) {
    throw std::invalid_argument("augmenting_walk: " + *err);
  }
  SplitFlow flow(g, linkage_spec(xs, ys));
  flow.preload(system.paths);
  if (flow.augment()) return PathSystem{SystemKind::Disjoint, flow.paths()};

  LinkageCut cut;
  cut.vertices = flow.cut();
  for (const Path& p : system.paths) {
    std::optional<Vertex> pick;
    for (Vertex w : p) {
      if (set_contains(cut.vertices, w)) {
        if (pick) throw std::logic_error("linkage cut meets a path twice");
        pick = w;
      }
    }
    if (!pick) throw std::logic_error("linkage cut misses a path");
    cut.assignment.push_back(*pick);
  }
  if (cut.assignment.size() != cut.vertices.size()) throw std::logic_error("linkage cut is not one vertex per path");
  return cut;
}

PathSystem pym_link(const Digraph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks,
                    const PathSystem& first_side, const PathSystem& last_side) {
  VertexSet xs = make_vertex_set({sources.begin(), sources.end()});
  VertexSet ys = make_vertex_set({sinks.begin(), sinks.end()});
  if (auto err = check_xy_system(g, xs, ys, first_side.paths)) throw std::invalid_argument("pym_link: " + *err);
  if (auto err = check_xy_system(g, xs, ys, last_side.paths)) throw std::invalid_argument("pym_link: " + *err);

  const VertexSet forced_first = first_vertices(first_side);
  const VertexSet forced_last = last_vertices(last_side);
  const EdgeSet union_edges = edge_set_union(system_edges(first_side), system_edges(last_side));
  VertexSet used = set_union(first_vertices(first_side), forced_last);
  for (const auto* s : {&first_side, &last_side}) {
    for (const Path& p : s->paths) used = set_union(used, make_vertex_set(p));
  }

  // Circulation with lower bounds on the forced terminal arcs, reduced to a
  // max flow between auxiliary terminals.
  const int n = g.vertex_count();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  const int aux_source = 2 * n + 2;
  const int aux_sink = 2 * n + 3;
  FlowNetwork net(2 * n + 4);
  struct Arc {
    int id;
    int from;
    int to;
    int lower;
  };
  std::vector<Arc> arcs;
  int demand = 0;
  auto add = [&](int from, int to, int lower) {
    int id = net.add_arc(from, to, 1 - lower);
    arcs.push_back({id, from, to, lower});
    if (lower) {
      net.add_arc(aux_source, to, 1);
      net.add_arc(from, aux_sink, 1);
      ++demand;
    }
  };
  for (Vertex w : used) add(2 * w, 2 * w + 1, 0);
  for (const Edge& e : union_edges) add(2 * e.tail + 1, 2 * e.head, 0);
  for (Vertex x : xs) {
    if (set_contains(used, x)) add(source, 2 * x, set_contains(forced_first, x) ? 1 : 0);
  }
  for (Vertex y : ys) {
    if (set_contains(used, y)) add(2 * y + 1, sink, set_contains(forced_last, y) ? 1 : 0);
  }
  net.add_arc(sink, source, FlowNetwork::kUnbounded);
  if (net.max_flow(aux_source, aux_sink) != demand) {
    throw std::logic_error("pym_link: no linkage satisfies both inclusions");
  }

  std::vector<std::vector<std::pair<int, int>>> carried(static_cast<std::size_t>(2 * n + 2));
  for (const Arc& a : arcs) {
    int amount = net.flow(a.id) + a.lower;
    if (amount > 0) carried[static_cast<std::size_t>(a.from)].push_back({a.to, amount});
  }
  PathSystem result{SystemKind::Disjoint, {}};
  for (auto& [start, amount] : carried[static_cast<std::size_t>(source)]) {
    while (amount > 0) {
      --amount;
      std::vector<int> nodes{start};
      while (nodes.back() != sink) {
        auto& options = carried[static_cast<std::size_t>(nodes.back())];
        auto it = std::find_if(options.begin(), options.end(), [](const auto& o) { return o.second > 0; });
        if (it == options.end()) throw std::logic_error("pym_link: broken circulation");
        --it->second;
        auto again = std::find(nodes.begin(), nodes.end(), it->first);
        if (again != nodes.end()) {
          nodes.erase(again + 1, nodes.end());
        } else {
          nodes.push_back(it->first);
        }
      }
      nodes.pop_back();
      Path p;
      for (int node : nodes) {
        Vertex w = node / 2;
        if (p.empty() || p.back() != w) p.push_back(w);
      }
      result.paths.push_back(std::move(p));
    }
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

bool is_strongly_maximal(const RootedDigraph& g, Vertex v, const PathSystem& system) {
  require_target(g, v);
  if (auto err = check_rv_system(g, g.root(), v, system.paths)) {
    throw std::invalid_argument("is_strongly_maximal: " + *err);
  }
  return static_cast<int>(system.size()) == local_connectivity(g, v);
}

std::optional<PathSystem> root_fan_to(const RootedDigraph& g, std::span<const Vertex> targets) {
  const Vertex r = g.root();
  VertexSet ends = make_vertex_set({targets.begin(), targets.end()});
  if (set_contains(ends, r)) throw std::invalid_argument("fan targets must avoid the root");
  SplitFlowSpec spec;
  spec.unit.assign(static_cast<std::size_t>(g.vertex_count()), 1);
  spec.unit[static_cast<std::size_t>(r)] = 0;
  spec.sources = {r};
  spec.sinks = ends;
  spec.keep_edge = [ends](Edge e) { return !set_contains(ends, e.tail); };
  SplitFlow flow(g, std::move(spec));
  if (flow.run() != static_cast<int>(ends.size())) return std::nullopt;
  return PathSystem{SystemKind::RootFan, flow.paths()};
}

}  // namespace flame
