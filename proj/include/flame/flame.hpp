#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flame/digraph.hpp"
#include "flame/path_system.hpp"

namespace flame {

enum class FlameStatus { Ok, Violated };

struct FlameRecord {
  Vertex vertex = 0;
  int in_degree = 0;
  int kappa = 0;
  std::optional<PathSystem> witness;  // A_last(witness) == in_F(v) when Ok
  FlameStatus status = FlameStatus::Violated;
};

struct FlameReport {
  std::vector<FlameRecord> records;  // one per non-root vertex, in index order

  bool is_flame() const;
  std::optional<Vertex> first_violation() const;
};

/// Per-vertex check that in_F(v) is the last-edge set of an internally
/// disjoint r -> v system, i.e. kappa_F(r, v) == |in_F(v)|.
FlameReport is_flame(const RootedDigraph& f);

/// Every subset of every in-edge set is coverable. On finite digraphs this
/// coincides with is_flame (restrict a covering system to the subset); with
/// `strict` every subset is enumerated instead, up to in-degree
/// `strict_degree_bound` (std::invalid_argument beyond it).
bool is_quasi_flame(const RootedDigraph& f, bool strict = false, int strict_degree_bound = 14);

/// Non-root vertices in lexicographic order.
std::vector<Vertex> default_order(const RootedDigraph& g);
/// Throws std::invalid_argument unless `order` lists every non-root vertex once.
void check_order(const RootedDigraph& g, std::span<const Vertex> order);

/// Trimming: for each u in order, keep only the in-edges of u used by a
/// maximum r -> u system of the current digraph.
RootedDigraph lovasz_trim(const RootedDigraph& g, std::span<const Vertex> order);

/// Whether F + e is still a flame at the head of e, for a flame F.
bool keeps_flame(const RootedDigraph& f, Edge e);

/// Extends a flame `seed` inside `g` one edge at a time (lexicographically
/// first edge keeping the flame property) until it is g-large.
/// Throws std::invalid_argument if seed is not a flame inside g.
RootedDigraph flame_grow(const RootedDigraph& g, const RootedDigraph& seed);

/// A quasi-flame F inside g to which no single further edge of g can be added
/// without losing the property. Greedy: start from out_g(r), sweep the
/// remaining edges lexicographically until a sweep adds nothing.
RootedDigraph maximal_quasi_flame(const RootedDigraph& g);

/// Re-routes a system through a separation: keeps the initial segments of
/// `base`'s paths up to their separating vertices and links the separation to
/// the tails of `required` with Pym's theorem, using segments of `base` and of
/// `cover` (whose last edges include `required`). The result keeps `base`'s
/// separation and its last edges contain `required`. `base` must be a
/// certificate whose system lies in `host`; rv must not be in `required`.
MengerCertificate splice_through_separation(const RootedDigraph& host, const MengerCertificate& base,
                                            std::span<const Edge> required, const PathSystem& cover);

}  // namespace flame
