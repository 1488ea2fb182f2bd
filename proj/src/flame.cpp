#include "flame/flame.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "flame/bubbles.hpp"
#include "flame/menger.hpp"

namespace flame {

bool FlameReport::is_flame() const {
  return std::all_of(records.begin(), records.end(),
                     [](const FlameRecord& r) { return r.status == FlameStatus::Ok; });
}

std::optional<Vertex> FlameReport::first_violation() const {
  for (const FlameRecord& r : records) {
    if (r.status != FlameStatus::Ok) return r.vertex;
  }
  return std::nullopt;
}

FlameReport is_flame(const RootedDigraph& f) {
  FlameReport report;
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (v == f.root()) continue;
    FlameRecord rec;
    rec.vertex = v;
    rec.in_degree = static_cast<int>(f.in(v).size());
    EdgeSet all_in = f.in_edges(v);
    CoveringResult cov = covering_system(f, v, all_in);
    if (cov.covered()) {
      rec.kappa = rec.in_degree;
      rec.witness = std::move(cov.system);
      rec.status = FlameStatus::Ok;
    } else {
      rec.kappa = static_cast<int>(cov.refutation->system.size());
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

bool is_quasi_flame(const RootedDigraph& f, bool strict, int strict_degree_bound) {
  if (!strict) return is_flame(f).is_flame();
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (v == f.root()) continue;
    EdgeSet all_in = f.in_edges(v);
    if (static_cast<int>(all_in.size()) > strict_degree_bound) {
      throw std::invalid_argument("is_quasi_flame: in-degree of " + f.name(v) + " exceeds the strict bound");
    }
    const std::uint64_t subsets = std::uint64_t{1} << all_in.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      EdgeSet chosen;
      for (std::size_t i = 0; i < all_in.size(); ++i) {
        if (mask >> i & 1U) chosen.push_back(all_in[i]);
      }
      if (!covering_system(f, v, chosen).covered()) return false;
    }
  }
  return true;
}

std::vector<Vertex> default_order(const RootedDigraph& g) {
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != g.root()) order.push_back(v);
  }
  return order;
}

void check_order(const RootedDigraph& g, std::span<const Vertex> order) {
  std::vector<Vertex> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != default_order(g)) {
    throw std::invalid_argument("order must list every non-root vertex exactly once");
  }
}

RootedDigraph lovasz_trim(const RootedDigraph& g, std::span<const Vertex> order) {
  check_order(g, order);
  RootedDigraph current = g;
  for (Vertex u : order) {
    MengerCertificate cert = max_system(current, u);
    EdgeSet unused = edge_set_difference(current.in_edges(u), last_edges(cert.system));
    if (!unused.empty()) current = current.without_edges(unused);
  }
  return current;
}

bool keeps_flame(const RootedDigraph& f, Edge e) {
  RootedDigraph grown = f.with_edge(e);
  return local_connectivity(grown, e.head) == static_cast<int>(grown.in(e.head).size());
}

RootedDigraph flame_grow(const RootedDigraph& g, const RootedDigraph& seed) {
  if (!seed.is_subdigraph_of(g) || seed.root() != g.root()) {
    throw std::invalid_argument("flame_grow: seed is not a spanning subdigraph of the host");
  }
  if (auto bad = is_flame(seed).first_violation()) {
    throw std::invalid_argument("flame_grow: seed is not a flame at " + seed.name(*bad));
  }
  RootedDigraph current = seed;
  while (!largeness_check(current, g, false).large) {
    bool grown = false;
    for (const Edge& e : edge_set_difference(g.edges(), current.edges())) {
      if (keeps_flame(current, e)) {
        current = current.with_edge(e);
        grown = true;
        break;
      }
    }
    if (!grown) throw std::logic_error("flame_grow: no edge extends a non-large flame");
    if (auto bad = is_flame(current).first_violation()) {
      throw std::logic_error("flame_grow: flame property lost at " + current.name(*bad));
    }
  }
  return current;
}

RootedDigraph maximal_quasi_flame(const RootedDigraph& g) {
  RootedDigraph current = g.spanning(g.out_edges(g.root()));
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : edge_set_difference(g.edges(), current.edges())) {
      if (keeps_flame(current, e)) {
        current = current.with_edge(e);
        changed = true;
      }
    }
  }
  return current;
}

MengerCertificate splice_through_separation(const RootedDigraph& host, const MengerCertificate& base,
                                            std::span<const Edge> required, const PathSystem& cover) {
  const Vertex r = host.root();
  const Vertex v = base.target;
  const VertexSet& sep = base.separation.vertices;
  if (auto err = check_rv_system(host, r, v, base.system.paths)) {
    throw std::invalid_argument("splice: base system: " + *err);
  }
  if (auto err = check_rv_system(host, r, v, cover.paths)) {
    throw std::invalid_argument("splice: covering system: " + *err);
  }
  EdgeSet wanted = make_edge_set({required.begin(), required.end()});
  for (const Edge& e : wanted) {
    if (e.head != v || e.tail == r) throw std::invalid_argument("splice: required edges must be non-root in-edges of the target");
  }
  EdgeSet covered = last_edges(cover);
  if (!std::includes(covered.begin(), covered.end(), wanted.begin(), wanted.end())) {
    throw std::invalid_argument("splice: covering system misses a required edge");
  }

  // Auxiliary digraph: host minus v, plus a private sink y* for each
  // in-neighbour y of v other than r, so that the linkage ends at edges.
  auto aux_names = std::make_shared<NameTable>(*host.names());
  std::map<Vertex, Vertex> star;
  for (Vertex y : host.in(v)) {
    if (y == r) continue;
    star[y] = static_cast<Vertex>(aux_names->size());
    aux_names->push_back(host.name(y) + "->" + host.name(v));
  }
  std::vector<Edge> aux_edges;
  for (const Edge& e : host.edges()) {
    if (e.head == v || e.tail == v) continue;
    aux_edges.push_back(e);
  }
  for (const auto& [y, ys] : star) aux_edges.push_back({y, ys});
  Digraph aux(aux_names, aux_edges);
  VertexSet sinks;
  for (const auto& [y, ys] : star) sinks.push_back(ys);

  std::map<Vertex, Path> head_of;  // separation vertex -> base path up to it (exclusive)
  PathSystem first_side{SystemKind::Disjoint, {}};
  for (std::size_t i = 0; i < base.system.size(); ++i) {
    if (!base.assignment[i]) continue;
    const Path& p = base.system.paths[i];
    auto at = std::find(p.begin(), p.end(), *base.assignment[i]);
    head_of[*at] = Path(p.begin(), at);
    Path seg(at, p.end() - 1);
    seg.push_back(star.at(seg.back()));
    first_side.paths.push_back(std::move(seg));
  }
  PathSystem last_side{SystemKind::Disjoint, {}};
  for (const Path& q : cover.paths) {
    if (q.size() < 2 || !edge_set_contains(wanted, {q[q.size() - 2], v})) continue;
    std::size_t from = q.size();
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      if (set_contains(sep, q[k])) from = k;
    }
    if (from == q.size()) throw std::logic_error("splice: a covering path avoids the separation");
    Path seg(q.begin() + static_cast<std::ptrdiff_t>(from), q.end() - 1);
    seg.push_back(star.at(seg.back()));
    last_side.paths.push_back(std::move(seg));
  }

  PathSystem linked = pym_link(aux, sep, sinks, first_side, last_side);

  MengerCertificate out;
  out.target = v;
  out.separation = base.separation;
  out.system.kind = SystemKind::InternallyDisjoint;
  for (const Path& seg : linked.paths) {
    Path p = head_of.at(seg.front());
    p.insert(p.end(), seg.begin(), seg.end() - 1);
    p.push_back(v);
    out.system.paths.push_back(std::move(p));
  }
  if (base.separation.uses_root_edge) out.system.paths.push_back({r, v});
  std::sort(out.system.paths.begin(), out.system.paths.end());
  for (const Path& p : out.system.paths) {
    if (p.size() == 2 && p.front() == r) {
      out.assignment.emplace_back(std::nullopt);
      continue;
    }
    auto hit = std::find_if(p.begin() + 1, p.end() - 1, [&](Vertex w) { return set_contains(sep, w); });
    out.assignment.emplace_back(*hit);
  }
  if (auto err = check_certificate(host, out)) throw std::logic_error("splice produced an invalid certificate: " + *err);
  EdgeSet ends = last_edges(out.system);
  if (!std::includes(ends.begin(), ends.end(), wanted.begin(), wanted.end())) {
    throw std::logic_error("splice lost a required edge");
  }
  return out;
}

}  // namespace flame
