#include <doctest.h>

#include "flame/io.hpp"
#include "flame/menger.hpp"
#include "flame/oracle.hpp"
#include "flame/split.hpp"
#include "support.hpp"

using namespace flame;
using namespace flame::testing;

TEST_CASE("loading a single root edge") {
  auto r = parse_digraph(nlohmann::json::parse(R"({"root":"r","edges":[["r","v"]]})"));
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.graph.vertex_count() == 2);
  CHECK(r.warnings.empty());
}

TEST_CASE("edges into the root") {
  auto doc = nlohmann::json::parse(R"({"root":"r","edges":[["v","r"]]})");
  try {
    parse_digraph(doc);
    FAIL("accepted an edge into the root");
  } catch (const DigraphError& e) {
    CHECK(e.kind() == DigraphError::Kind::EdgeIntoRoot);
  }

  auto normalized = parse_digraph(nlohmann::json::parse(R"({"root":"r","edges":[["r","a"],["a","r"],["a","b"]]})"), true);
  CHECK(normalized.graph.edge_count() == 2);
  CHECK(normalized.warnings.size() == 1);
  CHECK(normalized.graph.in(normalized.graph.root()).empty());
}

TEST_CASE("malformed documents are rejected by kind") {
  auto kind_of = [](const char* text) {
    try {
      parse_digraph(nlohmann::json::parse(text));
    } catch (const DigraphError& e) {
      return e.kind();
    }
    FAIL("document accepted");
    return DigraphError::Kind::Malformed;
  };
  CHECK(kind_of(R"({"root":"r","edges":[["a","a"]]})") == DigraphError::Kind::SelfLoop);
  CHECK(kind_of(R"({"root":"r","vertices":["r","a"],"edges":[["a","b"]]})") == DigraphError::Kind::UnknownVertex);
  CHECK(kind_of(R"({"edges":[]})") == DigraphError::Kind::MissingRoot);
  CHECK(kind_of(R"({"root":"r","vertices":["a"]})") == DigraphError::Kind::MissingRoot);
  CHECK(kind_of(R"({"root":"r","edges":[["a"]]})") == DigraphError::Kind::Malformed);
  CHECK(kind_of(R"([1,2])") == DigraphError::Kind::Malformed);
}

TEST_CASE("duplicate edges are dropped with a warning") {
  auto r = parse_digraph(nlohmann::json::parse(R"({"root":"r","edges":[["r","a"],["r","a"],["a","b"]]})"));
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("vertices without edges survive loading and round-trip") {
  auto r = parse_digraph(nlohmann::json::parse(R"({"root":"r","vertices":["r","z","a"],"edges":[["r","a"]]})"));
  CHECK(r.graph.vertex_count() == 3);
  auto again = parse_digraph(digraph_to_json(r.graph));
  CHECK(again.graph == r.graph);
}

TEST_CASE("split digraph of G1 and G2") {
  SplitDigraph s1(g1());
  const auto& h = s1.graph();
  CHECK(h.edge_count() == 2);
  const Vertex v = s1.base().at("v");
  CHECK(h.has_edge(s1.tail_of(s1.base().root()), s1.tail_of(v)));
  CHECK(h.has_edge(s1.tail_of(v), s1.head_of(v)));

  SplitDigraph s2(g2());
  CHECK(s2.graph().edge_count() == 8);
}

TEST_CASE("splitting then contracting recovers the digraph") {
  for (const RootedDigraph& g : random_corpus(100, 2, 12, 0.05, 0.5, 11)) {
    SplitDigraph s(g);
    CHECK(s.graph().edge_count() == g.edge_count() + static_cast<std::size_t>(g.vertex_count()) - 1);
    CHECK(s.contract(s.graph()) == g);
    for (const Edge& e : g.edges()) CHECK(s.unmap_edge(s.map_edge(e)) == std::optional<Edge>(e));
  }
}

TEST_CASE("edge-disjoint paths in the split digraph count internally disjoint paths") {
  for (const RootedDigraph& g : random_corpus(60, 2, 7, 0.1, 0.6, 12)) {
    SplitDigraph s(g);
    for (Vertex v : non_root(g)) {
      const int split_count = edge_disjoint_paths_to_tail(s, v);
      CHECK(split_count == oracle::brute_kappa(oracle::enum_systems(g, v)));
      for (const Path& p : max_system(g, v).system.paths) {
        CHECK(s.lower_path(s.lift_path(p)) == p);
      }
    }
  }
}

TEST_CASE("reachability avoiding a set") {
  const RootedDigraph g = g6();
  CHECK(reachable(g, g.root(), vset(g, {"a"})) == vset(g, {"r"}));
  CHECK(reachable(g, g.root(), {}) == vset(g, {"r", "a", "b", "c", "v"}));
  CHECK_THROWS_AS(reachable(g, g.root(), vset(g, {"r"})), std::invalid_argument);
  CHECK_THROWS_AS(reachable(g, 99, {}), std::invalid_argument);
}

TEST_CASE("reachable sets avoid the forbidden set and are closed") {
  for (const RootedDigraph& g : random_corpus(80, 3, 10, 0.1, 0.5, 13)) {
    VertexSet forbidden;
    for (Vertex v : non_root(g)) {
      if (v % 3 == 1) forbidden.push_back(v);
    }
    VertexSet seen = reachable(g, g.root(), forbidden);
    CHECK(set_intersection(seen, forbidden).empty());
    for (Vertex u : seen) {
      for (Vertex w : g.out(u)) {
        if (!set_contains(forbidden, w)) CHECK(set_contains(seen, w));
      }
    }
  }
}

TEST_CASE("editing returns new values sharing the vertex table") {
  const RootedDigraph g = g2();
  RootedDigraph less = g.without_edge(edge(g, "a", "b"));
  CHECK(less.edge_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(less.is_subdigraph_of(g));
  CHECK_FALSE(g.is_subdigraph_of(less));
  CHECK(less.with_edge(edge(g, "a", "b")) == g);
  CHECK_THROWS_AS(g.with_edge(Edge{g.at("a"), g.root()}), DigraphError);
  RootedDigraph induced = g.induced(vset(g, {"r", "a", "v"}));
  CHECK(induced.vertex_count() == 3);
  CHECK(induced.edge_count() == 2);
}

TEST_CASE("DOT export marks the root and highlighted edges") {
  const RootedDigraph g = g6();
  EdgeSet kept = eset(g, {{"r", "a"}});
  std::string dot = to_dot(g, &kept);
  CHECK(dot.find("\"r\" [shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("\"r\" -> \"a\" [style=bold]") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"b\" [style=dashed, color=grey]") != std::string::npos);
}
