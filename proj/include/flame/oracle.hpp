#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "flame/digraph.hpp"
#include "flame/flow.hpp"

// Exhaustive reference implementations. Nothing here uses flows or any
// result of the fast modules beyond the digraph type itself; they enumerate
// paths and path systems and evaluate each definition literally.
namespace flame::oracle {

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  int max_vertices = 7;
  int spanning_max_vertices = 5;
  int spanning_max_edges = 10;
};

/// All simple paths from `from` to `to` avoiding `banned_edge` if given.
std::vector<Path> simple_paths(const Digraph& g, Vertex from, Vertex to,
                               std::optional<Edge> banned_edge = std::nullopt);

/// Every internally disjoint r -> v system (the empty one included), each a
/// sorted list of indices into `paths`.
struct SystemCatalog {
  Vertex target = 0;
  std::vector<Path> paths;
  std::vector<std::vector<int>> systems;

  std::vector<Path> system(std::size_t i) const;
  std::size_t max_size() const;
};

SystemCatalog enum_systems(const RootedDigraph& g, Vertex v, const Bounds& bounds = {});

int brute_kappa(const SystemCatalog& catalog);

/// One internal vertex per path (the edge rv for the path (r, v)) meeting
/// every r -> v path of g.
bool brute_admits_separation(const RootedDigraph& g, Vertex v, std::span<const Path> system);

/// |Q - P| <= |P - Q| for every system Q in the catalog.
bool brute_strongly_maximal(const SystemCatalog& catalog, std::span<const Path> system);

/// Whether some system has exactly I as its last-edge set.
bool brute_in_g(const SystemCatalog& catalog, std::span<const Edge> in_subset);

/// Every subset of in(v) realisable as the last-edge set of a system.
std::vector<EdgeSet> brute_g_family(const SystemCatalog& catalog);

/// ent_D(X), evaluated from the definition.
VertexSet brute_entrance(const Digraph& g, std::span<const Vertex> set);

/// Whether `set` (containing v, not r) carries a v-infan from its entrance
/// inside it, by exhaustive search over paths inside the set.
bool brute_is_bubble(const RootedDigraph& g, Vertex v, std::span<const Vertex> set);

/// All v-bubbles, in increasing bitmask order of their non-root vertices.
std::vector<VertexSet> brute_bubbles(const RootedDigraph& g, Vertex v, const Bounds& bounds = {});

/// Union of all v-bubbles.
VertexSet brute_max_bubble(const RootedDigraph& g, Vertex v, const Bounds& bounds = {});

/// Vertices all of whose r-paths in D - rv meet S, from path enumeration.
VertexSet brute_b_s(const RootedDigraph& g, Vertex v, std::span<const Vertex> separation);

/// For each v: some system of D lying in L admits a separation in D.
bool brute_largeness(const RootedDigraph& sub, const RootedDigraph& super, const Bounds& bounds = {});

/// in_F(v) realisable as a last-edge set at every v.
bool brute_flame(const RootedDigraph& f, const Bounds& bounds = {});

/// First spanning subdigraph (in edge-subset bitmask order) that is both a
/// flame and large.
std::optional<RootedDigraph> brute_spanning_flame_exists(const RootedDigraph& g, const Bounds& bounds = {});

}  // namespace flame::oracle
