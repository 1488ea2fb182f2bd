#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flame/digraph.hpp"

namespace flame {

/// Truncation at level k of the counterexample family built over {0,1}^omega.
///
/// Vertices: r; u_i, v_i, v_{i,0}, v_{i,1} for i < k; v_w (omega); v_f for
/// every f in {0,1}^k, so 4k + 2 + 2^k in total. Edges: r->u_i, r->v_w,
/// u_i->v_{i,j}, v_{i,j}->v_i, v_i->v_{j,b} for every source i < k (and i = w
/// unless excluded), and v_{i,f(i)}->v_f.
///
/// Names: "r", "u<i>", "v<i>", "v<i>.<j>", "vw", "vf:<bits>" with bit i = f(i).
/// The headline claims about this family concern the infinite digraph; a
/// truncation is not expected to reproduce them. Throws std::invalid_argument
/// unless 1 <= k <= 12.
RootedDigraph figure6(int k, bool omega_sources = true);

std::string figure6_name_u(int i);
std::string figure6_name_v(int i);
std::string figure6_name_vij(int i, int j);
std::string figure6_name_vf(std::uint32_t bits, int k);
inline const char* figure6_name_omega() { return "vw"; }

/// Root "r" plus n - 1 vertices "x<i>" (zero-padded); each admissible edge
/// (no loops, none into r) is kept independently with probability p.
RootedDigraph random_gnp(int n, double p, std::uint64_t seed);
/// Same vertex set, exactly m admissible edges chosen uniformly.
RootedDigraph random_gnm(int n, int m, std::uint64_t seed);
/// Root "r" then layers "l<i>_<j>". Layer 0 hangs off r; each vertex of a
/// later layer gets an edge from a random vertex of the previous layer and
/// every other one with probability 1/2; same-layer and backward edges appear
/// with probability 1/10 each.
RootedDigraph layered(const std::vector<int>& widths, std::uint64_t seed);

/// "figure6:k=2[,omega=0]", "random:n=10,m=20,seed=7",
/// "random:n=10,p=0.3,seed=7", "layered:widths=3-4-2,seed=5".
struct GeneratorSpec {
  enum class Kind { Figure6, RandomGnm, RandomGnp, Layered };
  Kind kind = Kind::Figure6;
  int k = 0;
  bool omega_sources = true;
  int n = 0;
  int m = 0;
  double p = 0;
  std::vector<int> widths;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on a malformed or incomplete spec; seeds are
  /// mandatory for the random kinds.
  static GeneratorSpec parse(const std::string& text);
  RootedDigraph build() const;
};

}  // namespace flame
