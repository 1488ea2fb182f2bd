#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "flame/digraph.hpp"
#include "flame/path_system.hpp"

namespace flame {

/// ent_D(X): vertices of X with an ingoing edge from outside X.
VertexSet entrance(const Digraph& g, std::span<const Vertex> set);
/// int_D(X) = X - ent_D(X).
VertexSet interior(const Digraph& g, std::span<const Vertex> set);

/// A v-bubble B together with its witnessing v-infan inside B: one path per
/// entrance vertex, the path of v itself being the singleton (v).
struct Bubble {
  Vertex target = 0;
  VertexSet vertices;
  VertexSet entrance;  // ent_D(B)
  PathSystem witness{SystemKind::InFan, {}};
};

/// Evidence that a vertex set is not a bubble: every path from `entrance`
/// (minus the target) to the target inside the set meets `cut`, and `cut` is
/// smaller than the number of entrance vertices to be linked.
struct BubbleRefutation {
  VertexSet entrance;
  VertexSet cut;
};

std::optional<std::string> check_bubble(const RootedDigraph& g, const Bubble& bubble);

/// Throws std::invalid_argument unless target is in `set` and the root is not.
std::variant<Bubble, BubbleRefutation> is_bubble(const RootedDigraph& g, Vertex target,
                                                 std::span<const Vertex> set);

/// Union of a finite bubble chain, where each later bubble targets either the
/// first target or an interior vertex of the union so far. The witness is
/// assembled by joining initial segments of later witnesses onto earlier
/// witness paths. Throws std::invalid_argument when the chain condition fails.
Bubble bubble_union(const RootedDigraph& g, std::span<const Bubble> chain);

/// B_{S,v,D}: vertices all of whose r-paths in D - rv meet S, for an S backed
/// by a valid certificate. Checks ent_{D-rv}(B) = S and N^in_{D-rv}(v) in B.
Bubble bubble_from_separation(const RootedDigraph& g, const MengerCertificate& certificate);

struct MaxBubble {
  Bubble bubble;
  /// Certificate whose separation is ent_{D-rv}(B_{v,D}).
  MengerCertificate certificate;
};

/// B_{v,D}, the largest v-bubble, from the minimum cut nearest to r.
MaxBubble max_bubble(const RootedDigraph& g, Vertex v);

struct LargenessVerdict {
  bool large = false;
  std::optional<Edge> violation;                  // uv in D - L with u outside B_{v,L}
  std::vector<MengerCertificate> certificates;    // per non-root vertex when large
};

/// Whether `sub` is `super`-vertex-large. On success every certificate's
/// system lies in `sub` and its separation is valid in both digraphs.
/// Throws std::invalid_argument unless sub is a spanning subdigraph of super.
LargenessVerdict largeness_check(const RootedDigraph& sub, const RootedDigraph& super,
                                 bool with_certificates = true);

/// An r-fan in D - rv ending exactly on ent_{D-rv}(B_{v,D}) + u, for
/// u outside B_{v,D}. Throws std::invalid_argument otherwise.
PathSystem fan_to_entrance_plus(const RootedDigraph& g, Vertex v, Vertex u);

}  // namespace flame
