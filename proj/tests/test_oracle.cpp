#include <doctest.h>

#include <algorithm>

#include "flame/generators.hpp"
#include "flame/oracle.hpp"
#include "support.hpp"

using namespace flame;
using namespace flame::testing;

namespace {

bool catalog_has(const oracle::SystemCatalog& cat, std::vector<Path> wanted) {
  std::sort(wanted.begin(), wanted.end());
  for (std::size_t i = 0; i < cat.systems.size(); ++i) {
    auto sys = cat.system(i);
    std::sort(sys.begin(), sys.end());
    if (sys == wanted) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("enumerating internally disjoint systems") {
  {
    const RootedDigraph g = g1();
    const auto cat = oracle::enum_systems(g, g.at("v"));
    CHECK(cat.systems.size() == 2);
    CHECK(catalog_has(cat, {}));
    CHECK(catalog_has(cat, {path(g, {"r", "v"})}));
  }
  {
    const RootedDigraph g = g2();
    const auto cat = oracle::enum_systems(g, g.at("v"));
    CHECK(catalog_has(cat, {path(g, {"r", "a", "v"}), path(g, {"r", "b", "v"})}));
    CHECK(catalog_has(cat, {path(g, {"r", "a", "b", "v"})}));
    CHECK_FALSE(catalog_has(cat, {path(g, {"r", "a", "b", "v"}), path(g, {"r", "b", "v"})}));
    CHECK(cat.max_size() == 2);
  }
  CHECK(oracle::enum_systems(g6(), g6().at("v")).max_size() == 1);
}

TEST_CASE("enumerated bubbles") {
  const RootedDigraph a = g1();
  CHECK(oracle::brute_bubbles(a, a.at("v")) == std::vector<VertexSet>{vset(a, {"v"})});
  const RootedDigraph b = g2();
  CHECK(oracle::brute_max_bubble(b, b.at("v")) == vset(b, {"a", "b", "v"}));
  const RootedDigraph c = g6();
  CHECK(oracle::brute_max_bubble(c, c.at("v")) == vset(c, {"a", "b", "c", "v"}));
}

TEST_CASE("literal largeness") {
  const RootedDigraph d6 = g6();
  CHECK(oracle::brute_largeness(d6, d6));
  CHECK(oracle::brute_largeness(d6.without_edge(edge(d6, "c", "v")), d6));
  const RootedDigraph d2 = g2();
  CHECK_FALSE(oracle::brute_largeness(d2.without_edge(edge(d2, "a", "v")), d2));
}

TEST_CASE("spanning flame witnesses") {
  CHECK(oracle::brute_spanning_flame_exists(g1()) == g1());
  CHECK(oracle::brute_spanning_flame_exists(g2()) == g2());
  auto w = oracle::brute_spanning_flame_exists(g6());
  REQUIRE(w);
  CHECK(w->edge_count() == 4);
  CHECK(oracle::brute_flame(*w));
  CHECK(oracle::brute_largeness(*w, g6()));
}

TEST_CASE("separations chosen one vertex per path") {
  const RootedDigraph g = g2();
  const Vertex v = g.at("v");
  CHECK(oracle::brute_admits_separation(g, v, std::vector<Path>{path(g, {"r", "a", "v"}), path(g, {"r", "b", "v"})}));
  CHECK_FALSE(oracle::brute_admits_separation(g, v, std::vector<Path>{path(g, {"r", "a", "v"})}));
  CHECK(oracle::brute_entrance(g, vset(g, {"a", "b", "v"})) == vset(g, {"a", "b"}));
  CHECK(oracle::brute_b_s(g, v, vset(g, {"a", "b"})) == vset(g, {"a", "b", "v"}));
}

TEST_CASE("bounds are errors, never skips") {
  const RootedDigraph big = random_gnp(9, 0.3, 1);
  CHECK_THROWS_AS(oracle::enum_systems(big, 1), oracle::BoundExceeded);
  CHECK_THROWS_AS(oracle::brute_bubbles(big, 1), oracle::BoundExceeded);
  CHECK_THROWS_AS(oracle::brute_largeness(big, big), oracle::BoundExceeded);
  CHECK_THROWS_AS(oracle::brute_spanning_flame_exists(random_gnp(6, 0.5, 2)), oracle::BoundExceeded);
  oracle::Bounds wide;
  wide.max_vertices = 9;
  CHECK_NOTHROW(oracle::enum_systems(big, 1, wide));
}
