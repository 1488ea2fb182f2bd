#include "support.hpp"

#include "flame/generators.hpp"
#include "flame/random.hpp"

namespace flame::testing {

RootedDigraph make(const std::vector<std::pair<std::string, std::string>>& edges,
                   const std::vector<std::string>& extra) {
  return RootedDigraph::from_names("r", edges, extra);
}

RootedDigraph g1() { return make({{"r", "v"}}); }
RootedDigraph g2() { return make({{"r", "a"}, {"r", "b"}, {"a", "v"}, {"b", "v"}, {"a", "b"}}); }
RootedDigraph g6() { return make({{"r", "a"}, {"a", "b"}, {"a", "c"}, {"b", "v"}, {"c", "v"}}); }

Edge edge(const Digraph& g, const std::string& tail, const std::string& head) { return {g.at(tail), g.at(head)}; }

Path path(const Digraph& g, const std::vector<std::string>& names) {
  Path p;
  for (const std::string& n : names) p.push_back(g.at(n));
  return p;
}

VertexSet vset(const Digraph& g, const std::vector<std::string>& names) { return make_vertex_set(path(g, names)); }

EdgeSet eset(const Digraph& g, const std::vector<std::pair<std::string, std::string>>& edges) {
  EdgeSet out;
  for (const auto& [t, h] : edges) out.push_back(edge(g, t, h));
  return make_edge_set(out);
}

std::vector<RootedDigraph> exhaustive(int others) {
  std::vector<std::string> names{"r"};
  for (int i = 0; i < others; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::string, std::string>> pool;
  for (const auto& t : names) {
    for (const auto& h : names) {
      if (t != h && h != "r") pool.emplace_back(t, h);
    }
  }
  std::vector<RootedDigraph> out;
  for (std::uint32_t mask = 0; mask < (1U << pool.size()); ++mask) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(pool[i]);
    }
    out.push_back(RootedDigraph::from_names("r", edges, names));
  }
  return out;
}

std::vector<RootedDigraph> random_corpus(int count, int min_vertices, int max_vertices, double min_p, double max_p,
                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RootedDigraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng.between(min_vertices, max_vertices));
    const double p = min_p + (max_p - min_p) * rng.unit();
    out.push_back(random_gnp(n, p, rng.next()));
  }
  return out;
}

std::vector<RootedDigraph> small_corpus(int max_exhaustive_others, int min_random, int max_random, int total,
                                        std::uint64_t seed) {
  std::vector<RootedDigraph> out;
  for (int others = 1; others <= max_exhaustive_others; ++others) {
    for (RootedDigraph& g : exhaustive(others)) out.push_back(std::move(g));
  }
  const int missing = total - static_cast<int>(out.size());
  if (missing > 0) {
    for (RootedDigraph& g : random_corpus(missing, min_random, max_random, 0.15, 0.6, seed)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Vertex> non_root(const RootedDigraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != g.root()) out.push_back(v);
  }
  return out;
}

}  // namespace flame::testing
