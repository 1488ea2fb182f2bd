#include "flame/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace flame::oracle {

namespace {

void check_size(const Digraph& g, int bound) {
  if (g.vertex_count() > bound) {
    throw BoundExceeded("oracle bound exceeded: " + std::to_string(g.vertex_count()) + " vertices > " +
                        std::to_string(bound));
  }
}

bool contains(std::span<const Vertex> xs, Vertex x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

std::set<Edge> edges_of(std::span<const Path> system) {
  std::set<Edge> out;
  for (const Path& p : system) {
    for (std::size_t i = 1; i < p.size(); ++i) out.insert({p[i - 1], p[i]});
  }
  return out;
}

std::set<Edge> last_edges_of(std::span<const Path> system) {
  std::set<Edge> out;
  for (const Path& p : system) {
    if (p.size() >= 2) out.insert({p[p.size() - 2], p.back()});
  }
  return out;
}

}  // namespace

std::vector<Path> simple_paths(const Digraph& g, Vertex from, Vertex to, std::optional<Edge> banned) {
  std::vector<Path> out;
  Path current{from};
  std::vector<char> on(static_cast<std::size_t>(g.vertex_count()), 0);
  on[static_cast<std::size_t>(from)] = 1;
  std::function<void()> extend = [&] {
    const Vertex at = current.back();
    if (at == to) {
      out.push_back(current);
      return;
    }
    for (Vertex next : g.out(at)) {
      if (on[static_cast<std::size_t>(next)]) continue;
      if (banned && banned->tail == at && banned->head == next) continue;
      on[static_cast<std::size_t>(next)] = 1;
      current.push_back(next);
      extend();
      current.pop_back();
      on[static_cast<std::size_t>(next)] = 0;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> SystemCatalog::system(std::size_t i) const {
  std::vector<Path> out;
  for (int idx : systems[i]) out.push_back(paths[static_cast<std::size_t>(idx)]);
  return out;
}

std::size_t SystemCatalog::max_size() const {
  std::size_t best = 0;
  for (const auto& s : systems) best = std::max(best, s.size());
  return best;
}

SystemCatalog enum_systems(const RootedDigraph& g, Vertex v, const Bounds& bounds) {
  check_size(g, bounds.max_vertices);
  SystemCatalog cat;
  cat.target = v;
  cat.paths = simple_paths(g, g.root(), v);
  std::vector<int> chosen;
  std::vector<int> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<void(int)> grow = [&](int from) {
    cat.systems.push_back(chosen);
    for (int i = from; i < static_cast<int>(cat.paths.size()); ++i) {
      const Path& p = cat.paths[static_cast<std::size_t>(i)];
      bool free = true;
      for (std::size_t k = 1; k + 1 < p.size(); ++k) free = free && !used[static_cast<std::size_t>(p[k])];
      if (!free) continue;
      for (std::size_t k = 1; k + 1 < p.size(); ++k) used[static_cast<std::size_t>(p[k])] = 1;
      chosen.push_back(i);
      grow(i + 1);
      chosen.pop_back();
      for (std::size_t k = 1; k + 1 < p.size(); ++k) used[static_cast<std::size_t>(p[k])] = 0;
    }
  };
  grow(0);
  return cat;
}

int brute_kappa(const SystemCatalog& catalog) { return static_cast<int>(catalog.max_size()); }

bool brute_admits_separation(const RootedDigraph& g, Vertex v, std::span<const Path> system) {
  const Vertex r = g.root();
  const std::vector<Path> all = simple_paths(g, r, v);
  std::vector<Vertex> pick(system.size(), -1);
  bool root_edge = false;
  std::function<bool(std::size_t)> choose = [&](std::size_t i) -> bool {
    if (i == system.size()) {
      for (const Path& q : all) {
        if (q.size() == 2 && root_edge) continue;
        bool met = false;
        for (std::size_t k = 1; k + 1 < q.size() && !met; ++k) met = contains(pick, q[k]);
        if (!met) return false;
      }
      return true;
    }
    const Path& p = system[i];
    if (p.size() == 2) {
      root_edge = true;
      bool ok = choose(i + 1);
      root_edge = false;
      return ok;
    }
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      pick[i] = p[k];
      if (choose(i + 1)) return true;
    }
    pick[i] = -1;
    return false;
  };
  return choose(0);
}

bool brute_strongly_maximal(const SystemCatalog& catalog, std::span<const Path> system) {
  std::set<Path> mine(system.begin(), system.end());
  for (std::size_t i = 0; i < catalog.systems.size(); ++i) {
    std::set<Path> other;
    for (int idx : catalog.systems[i]) other.insert(catalog.paths[static_cast<std::size_t>(idx)]);
    std::size_t only_other = 0;
    std::size_t only_mine = 0;
    for (const Path& p : other) only_other += mine.count(p) ? 0 : 1;
    for (const Path& p : mine) only_mine += other.count(p) ? 0 : 1;
    if (only_other > only_mine) return false;
  }
  return true;
}

bool brute_in_g(const SystemCatalog& catalog, std::span<const Edge> in_subset) {
  std::set<Edge> wanted(in_subset.begin(), in_subset.end());
  for (std::size_t i = 0; i < catalog.systems.size(); ++i) {
    if (last_edges_of(catalog.system(i)) == wanted) return true;
  }
  return false;
}

std::vector<EdgeSet> brute_g_family(const SystemCatalog& catalog) {
  std::set<std::set<Edge>> family;
  for (std::size_t i = 0; i < catalog.systems.size(); ++i) family.insert(last_edges_of(catalog.system(i)));
  std::vector<EdgeSet> out;
  for (const auto& s : family) out.emplace_back(s.begin(), s.end());
  return out;
}

VertexSet brute_entrance(const Digraph& g, std::span<const Vertex> set) {
  VertexSet out;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (!contains(set, w)) continue;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (!contains(set, u) && g.has_edge(u, w)) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

bool brute_is_bubble(const RootedDigraph& g, Vertex v, std::span<const Vertex> set) {
  const VertexSet ent = brute_entrance(g, set);
  std::vector<Edge> inside;
  for (const Edge& e : g.edges()) {
    if (contains(set, e.tail) && contains(set, e.head)) inside.push_back(e);
  }
  Digraph within(g.names(), inside);
  std::vector<std::vector<Path>> options;
  for (Vertex u : ent) options.push_back(simple_paths(within, u, v));
  std::vector<int> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<bool(std::size_t)> pick = [&](std::size_t i) -> bool {
    if (i == options.size()) return true;
    for (const Path& p : options[i]) {
      bool free = true;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) free = free && !used[static_cast<std::size_t>(p[k])];
      if (!free) continue;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) used[static_cast<std::size_t>(p[k])] = 1;
      bool ok = pick(i + 1);
      for (std::size_t k = 0; k + 1 < p.size(); ++k) used[static_cast<std::size_t>(p[k])] = 0;
      if (ok) return true;
    }
    return false;
  };
  return pick(0);
}

std::vector<VertexSet> brute_bubbles(const RootedDigraph& g, Vertex v, const Bounds& bounds) {
  check_size(g, bounds.max_vertices);
  std::vector<Vertex> others;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w != g.root() && w != v) others.push_back(w);
  }
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1U << others.size()); ++mask) {
    VertexSet b{v};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1U) b.push_back(others[i]);
    }
    std::sort(b.begin(), b.end());
    if (brute_is_bubble(g, v, b)) out.push_back(std::move(b));
  }
  return out;
}

VertexSet brute_max_bubble(const RootedDigraph& g, Vertex v, const Bounds& bounds) {
  std::set<Vertex> all;
  for (const VertexSet& b : brute_bubbles(g, v, bounds)) all.insert(b.begin(), b.end());
  return {all.begin(), all.end()};
}

VertexSet brute_b_s(const RootedDigraph& g, Vertex v, std::span<const Vertex> separation) {
  const Edge rv{g.root(), v};
  VertexSet out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    bool all_meet = true;
    for (const Path& p : simple_paths(g, g.root(), u, rv)) {
      bool met = false;
      for (Vertex w : p) met = met || contains(separation, w);
      if (!met) {
        all_meet = false;
        break;
      }
    }
    if (all_meet) out.push_back(u);
  }
  return out;
}

bool brute_largeness(const RootedDigraph& sub, const RootedDigraph& super, const Bounds& bounds) {
  for (Vertex v = 0; v < super.vertex_count(); ++v) {
    if (v == super.root()) continue;
    SystemCatalog cat = enum_systems(super, v, bounds);
    bool found = false;
    for (std::size_t i = 0; i < cat.systems.size() && !found; ++i) {
      std::vector<Path> sys = cat.system(i);
      bool inside = true;
      for (const Edge& e : edges_of(sys)) inside = inside && sub.has_edge(e);
      found = inside && brute_admits_separation(super, v, sys);
    }
    if (!found) return false;
  }
  return true;
}

bool brute_flame(const RootedDigraph& f, const Bounds& bounds) {
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (v == f.root()) continue;
    SystemCatalog cat = enum_systems(f, v, bounds);
    EdgeSet all_in;
    for (Vertex u : f.in(v)) all_in.push_back({u, v});
    if (!brute_in_g(cat, all_in)) return false;
  }
  return true;
}

std::optional<RootedDigraph> brute_spanning_flame_exists(const RootedDigraph& g, const Bounds& bounds) {
  if (g.vertex_count() > bounds.spanning_max_vertices ||
      static_cast<int>(g.edge_count()) > bounds.spanning_max_edges) {
    throw BoundExceeded("oracle bound exceeded for spanning-subdigraph enumeration");
  }
  const EdgeSet all = g.edges();
  for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) kept.push_back(all[i]);
    }
    RootedDigraph candidate = g.spanning(kept);
    if (brute_flame(candidate, bounds) && brute_largeness(candidate, g, bounds)) return candidate;
  }
  return std::nullopt;
}

}  // namespace flame::oracle
