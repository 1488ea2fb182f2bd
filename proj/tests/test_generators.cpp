#include <doctest.h>

#include <map>

#include "flame/generators.hpp"
#include "flame/menger.hpp"
#include "flame/oracle.hpp"
#include "support.hpp"

using namespace flame;
using namespace flame::testing;

TEST_CASE("figure6 vertex and edge counts") {
  for (int k = 1; k <= 6; ++k) {
    const RootedDigraph g = figure6(k);
    // r, vw, u_i, v_i, two v_ij per level, and one v_f per choice function.
    CHECK(g.vertex_count() == 4 * k + 2 + (1 << k));
    const std::size_t edges = static_cast<std::size_t>(k) + 1 + 2 * k + 2 * k + (k + 1) * 2 * k + k * (1 << k);
    CHECK(g.edge_count() == edges);
    for (std::uint32_t f = 0; f < (1U << k); ++f) CHECK(g.in(g.at(figure6_name_vf(f, k))).size() == std::size_t(k));
    CHECK(figure6(k, false).edge_count() == edges - 2 * k);
  }
  CHECK(figure6(1).vertex_count() == 8);
  CHECK(figure6(2).vertex_count() == 14);
  CHECK_THROWS_AS(figure6(0), std::invalid_argument);
  CHECK_THROWS_AS(figure6(13), std::invalid_argument);
}

TEST_CASE("figure6 names its vertices") {
  const RootedDigraph g = figure6(2);
  CHECK(g.has_edge(g.root(), g.at(figure6_name_u(1))));
  CHECK(g.has_edge(g.root(), g.at(figure6_name_omega())));
  CHECK(g.has_edge(g.at(figure6_name_u(0)), g.at(figure6_name_vij(0, 1))));
  CHECK(g.has_edge(g.at(figure6_name_vij(1, 0)), g.at(figure6_name_v(1))));
  CHECK(g.has_edge(g.at(figure6_name_omega()), g.at(figure6_name_vij(1, 1))));
  CHECK(g.has_edge(g.at(figure6_name_v(0)), g.at(figure6_name_vij(1, 0))));
  // bit i of f picks v_{i,f(i)} as an in-neighbour of v_f
  CHECK(g.has_edge(g.at(figure6_name_vij(0, 1)), g.at(figure6_name_vf(0b01, 2))));
  CHECK(g.has_edge(g.at(figure6_name_vij(1, 0)), g.at(figure6_name_vf(0b01, 2))));
}

TEST_CASE("seeded random digraphs are reproducible") {
  CHECK(random_gnp(20, 0.2, 5) == random_gnp(20, 0.2, 5));
  CHECK_FALSE(random_gnp(20, 0.2, 5) == random_gnp(20, 0.2, 6));
  CHECK(random_gnm(15, 30, 9) == random_gnm(15, 30, 9));
  CHECK(random_gnm(15, 30, 9).edge_count() == 30);
  CHECK(random_gnp(12, 0.3, 1).vertex_count() == 12);
  CHECK(layered({3, 4, 2}, 4) == layered({3, 4, 2}, 4));
  for (const RootedDigraph& g : random_corpus(50, 2, 30, 0.05, 0.6, 3)) CHECK(g.in(g.root()).empty());
  CHECK_THROWS_AS(random_gnm(4, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_gnp(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("layered digraphs reach every layer") {
  const RootedDigraph g = layered({3, 4, 2}, 11);
  CHECK(g.vertex_count() == 10);
  CHECK(reachable(g, g.root(), {}).size() == 10);
  CHECK(g.out(g.root()).size() == 3);
}

TEST_CASE("generator specifications") {
  GeneratorSpec f = GeneratorSpec::parse("figure6:k=2");
  CHECK(f.kind == GeneratorSpec::Kind::Figure6);
  CHECK(f.build() == figure6(2));
  CHECK(GeneratorSpec::parse("figure6:k=2,omega=0").build() == figure6(2, false));
  CHECK(GeneratorSpec::parse("random:n=12,m=20,seed=4").build() == random_gnm(12, 20, 4));
  CHECK(GeneratorSpec::parse("random:n=12,p=0.25,seed=4").build() == random_gnp(12, 0.25, 4));
  CHECK(GeneratorSpec::parse("layered:widths=3-4-2,seed=1").build() == layered({3, 4, 2}, 1));
  for (const char* bad : {"random:n=12,m=20", "figure6:k=x", "nope:k=1", "layered:widths=,seed=1", "figure6",
                          "random:n=5,m=3,p=0.1,seed=1", "figure6:k=2,extra=1"}) {
    CHECK_THROWS_AS(GeneratorSpec::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("figure6 level pairs under both readings of the source range") {
  // {v_i.0 -> v_i, v_i.1 -> v_i} is realisable at level 1 only when vw feeds
  // the v_j.k; from level 2 on the other v_j supply a second route.
  const std::map<std::pair<int, bool>, bool> expected{
      {{1, true}, true}, {{1, false}, false}, {{2, true}, true}, {{2, false}, true}};
  for (const auto& [key, member] : expected) {
    const auto [k, omega] = key;
    const RootedDigraph g = figure6(k, omega);
    oracle::Bounds bounds;
    bounds.max_vertices = g.vertex_count();
    for (int i = 0; i < k; ++i) {
      const Vertex v = g.at(figure6_name_v(i));
      const EdgeSet pair{edge(g, figure6_name_vij(i, 0), figure6_name_v(i)), edge(g, figure6_name_vij(i, 1), figure6_name_v(i))};
      const EdgeSet sorted = make_edge_set(pair);
      CHECK(covering_system(g, v, sorted).covered() == member);
      CHECK(oracle::brute_in_g(oracle::enum_systems(g, v, bounds), sorted) == member);
    }
  }
}
