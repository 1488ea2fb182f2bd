#pragma once

#include <optional>
#include <span>
#include <variant>

#include "flame/digraph.hpp"
#include "flame/path_system.hpp"

namespace flame {

/// kappa_D(r, v): the maximum number of internally disjoint r -> v paths.
/// The edge rv counts as one path of its own.
int local_connectivity(const RootedDigraph& g, Vertex v);

/// A maximum internally disjoint r -> v system with the Erdos-Menger
/// separation nearest to r. At finite scale a maximum system is strongly
/// maximal, so the result is a member of I_D(v). When rv is an edge the
/// system contains the path (r, v), assigned the edge itself.
MengerCertificate max_system(const RootedDigraph& g, Vertex v);

/// Outcome of asking whether a set I of in-edges of v is the exact last-edge
/// set of some internally disjoint r -> v system.
struct CoveringResult {
  std::optional<PathSystem> system;              // A_last(system) == I
  std::optional<MengerCertificate> refutation;   // in D with in(v) cut down to I; size < |I|

  bool covered() const { return system.has_value(); }
};

/// Throws std::invalid_argument unless I is a subset of in_D(v).
CoveringResult covering_system(const RootedDigraph& g, Vertex v, std::span<const Edge> in_subset);

/// An XY-separation choosing exactly one vertex from each path of a system:
/// assignment[i] lies on paths[i].
struct LinkageCut {
  VertexSet vertices;
  std::vector<Vertex> assignment;
};

using AugmentOutcome = std::variant<LinkageCut, PathSystem>;

/// Either separates Y from X with one vertex per path of `system`, or returns
/// a disjoint X -> Y system with one more path whose first and last vertex
/// sets contain those of `system`. Throws std::invalid_argument if `system`
/// is not a disjoint X -> Y system in g.
AugmentOutcome augmenting_walk(const Digraph& g, std::span<const Vertex> sources,
                               std::span<const Vertex> sinks, const PathSystem& system);

/// Pym linkage: a disjoint X -> Y system R with V_first(R) >= V_first(P) and
/// V_last(R) >= V_last(Q), built only from edges of P and Q.
PathSystem pym_link(const Digraph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks,
                    const PathSystem& first_side, const PathSystem& last_side);

/// Finite-scale strong maximality: |P| == kappa_D(r, v).
bool is_strongly_maximal(const RootedDigraph& g, Vertex v, const PathSystem& system);

/// An r-fan whose last-vertex set is exactly `targets`, if one exists.
std::optional<PathSystem> root_fan_to(const RootedDigraph& g, std::span<const Vertex> targets);

}  // namespace flame
