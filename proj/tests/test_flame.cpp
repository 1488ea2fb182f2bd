#include <doctest.h>

#include "flame/bubbles.hpp"
#include "flame/construction.hpp"
#include "flame/flame.hpp"
#include "flame/generators.hpp"
#include "flame/menger.hpp"
#include "flame/oracle.hpp"
#include "flame/random.hpp"
#include "support.hpp"

using namespace flame;
using namespace flame::testing;

namespace {

std::vector<Vertex> order_of(const RootedDigraph& g, const std::vector<std::string>& names) {
  std::vector<Vertex> out;
  for (const auto& n : names) out.push_back(g.at(n));
  return out;
}

// Replays a fixed list of vertices; lets tests feed malformed streams.
class ScriptedStream : public VertexStream {
 public:
  explicit ScriptedStream(std::vector<StreamedVertex> items) : items_(std::move(items)) {}
  std::string root() const override { return "r"; }
  std::optional<StreamedVertex> next() override {
    if (pos_ >= items_.size()) return std::nullopt;
    return items_[pos_++];
  }

 private:
  std::vector<StreamedVertex> items_;
  std::size_t pos_ = 0;
};

void check_large_flame(const RootedDigraph& d, const ConstructionResult& res) {
  CHECK(res.flame.is_subdigraph_of(d));
  CHECK(is_flame(res.flame).is_flame());
  CHECK(largeness_check(res.flame, d, false).large);
  CHECK_NOTHROW(audit_result(res));
}

}  // namespace

TEST_CASE("flame status per vertex") {
  CHECK(is_flame(g2()).is_flame());
  const RootedDigraph g = g6();
  FlameReport report = is_flame(g);
  CHECK_FALSE(report.is_flame());
  REQUIRE(report.first_violation());
  CHECK(*report.first_violation() == g.at("v"));
  const FlameRecord& at_v = report.records[static_cast<std::size_t>(g.at("v")) - 1];
  CHECK(at_v.in_degree == 2);
  CHECK(at_v.kappa == 1);
  CHECK(is_flame(make({}, {"a", "b"})).is_flame());
}

TEST_CASE("quasi-flames coincide with flames on finite digraphs") {
  CHECK(is_quasi_flame(g2()));
  CHECK(is_quasi_flame(g2(), true));
  CHECK_FALSE(is_quasi_flame(g6()));
  CHECK_FALSE(is_quasi_flame(g6(), true));
  CHECK(is_quasi_flame(make({})));
  for (const RootedDigraph& g : small_corpus(3, 5, 6, 300, 61)) {
    const bool flame = is_flame(g).is_flame();
    CHECK(is_quasi_flame(g) == flame);
    CHECK(is_quasi_flame(g, true) == flame);
    CHECK(oracle::brute_flame(g) == flame);
  }
}

TEST_CASE("Lovasz trimming") {
  const RootedDigraph g = g6();
  RootedDigraph e = lovasz_trim(g, order_of(g, {"a", "b", "c", "v"}));
  CHECK(e.edges() == eset(g, {{"r", "a"}, {"a", "b"}, {"a", "c"}, {"b", "v"}}));
  CHECK(lovasz_trim(g2(), default_order(g2())) == g2());
  CHECK(lovasz_trim(g1(), default_order(g1())) == g1());
  CHECK_THROWS_AS(lovasz_trim(g, order_of(g, {"a", "b", "v"})), std::invalid_argument);
  CHECK_THROWS_AS(lovasz_trim(g, order_of(g, {"a", "b", "c", "v", "a"})), std::invalid_argument);
}

TEST_CASE("trimmed digraphs keep every connectivity and have the sharp edge count") {
  for (const RootedDigraph& d : random_corpus(120, 3, 20, 0.05, 0.5, 62)) {
    RootedDigraph e = lovasz_trim(d, default_order(d));
    std::size_t sum = 0;
    for (Vertex v : non_root(d)) {
      const int k = local_connectivity(d, v);
      sum += static_cast<std::size_t>(k);
      CHECK(local_connectivity(e, v) == k);
      CHECK(static_cast<int>(e.in_edges(v).size()) == k);
    }
    CHECK(e.edge_count() == sum);
  }
}

TEST_CASE("growing a flame until it is large") {
  {
    const RootedDigraph d = g6();
    RootedDigraph seed = d.spanning(eset(d, {{"r", "a"}}));
    RootedDigraph e = flame_grow(d, seed);
    CHECK(e.edge_count() == 4);
    CHECK(is_flame(e).is_flame());
    CHECK(largeness_check(e, d, false).large);
    CHECK(flame_grow(d, e) == e);
  }
  {
    const RootedDigraph d = g2();
    CHECK(flame_grow(d, d.spanning(eset(d, {{"r", "a"}, {"r", "b"}}))) == d);
    CHECK_THROWS_AS(flame_grow(g6(), g6()), std::invalid_argument);
  }
}

TEST_CASE("maximal quasi-flames") {
  CHECK(maximal_quasi_flame(g2()) == g2());
  const RootedDigraph d = g6();
  RootedDigraph f = maximal_quasi_flame(d);
  CHECK(f == d.without_edge(edge(d, "c", "v")));
  CHECK_FALSE(is_quasi_flame(f.with_edge(edge(d, "c", "v"))));
  const RootedDigraph bare = make({}, {"a"});
  CHECK(maximal_quasi_flame(bare) == bare);
}

TEST_CASE("maximal quasi-flames are maximal and their large subdigraphs are large in the host") {
  for (const RootedDigraph& d : random_corpus(80, 3, 14, 0.1, 0.5, 63)) {
    RootedDigraph f = maximal_quasi_flame(d);
    CHECK(is_quasi_flame(f));
    for (const Edge& e : d.edges()) {
      if (!f.has_edge(e.tail, e.head)) CHECK_FALSE(is_quasi_flame(f.with_edge(e)));
    }
    RootedDigraph trimmed = lovasz_trim(f, default_order(f));
    CHECK(largeness_check(trimmed, f, false).large);
    CHECK(largeness_check(trimmed, d, false).large);
  }
}

TEST_CASE("construction on the small examples") {
  {
    const RootedDigraph d = g1();
    ConstructionResult res = construct_large_flame(d, default_order(d));
    CHECK(res.flame == d);
    REQUIRE(res.certificates.size() == 1);
    CHECK(res.certificates[0].system.paths == std::vector<Path>{path(d, {"r", "v"})});
    CHECK(res.certificates[0].separation.uses_root_edge);
    CHECK(res.certificates[0].separation.vertices.empty());
  }
  {
    const RootedDigraph d = g6();
    ConstructionResult res = construct_large_flame(d, default_order(d));
    CHECK(res.flame.edge_count() == 4);
    check_large_flame(d, res);
    for (const StepRecord& s : res.steps) CHECK(static_cast<int>(s.inherited.size()) <= s.step);
  }
  CHECK_THROWS_AS(construct_large_flame(g6(), std::vector<Vertex>{1, 2}), std::invalid_argument);
}

TEST_CASE("construction on random digraphs") {
  for (const RootedDigraph& d : random_corpus(200, 2, 30, 0.05, 0.4, 64)) {
    ConstructionResult res = construct_large_flame(d, default_order(d));
    check_large_flame(d, res);
    for (const MengerCertificate& c : res.certificates) {
      CHECK(last_edges(c.system) == res.flame.in_edges(c.target));
      CHECK_FALSE(check_certificate(res.flame, d, c));
    }
  }
}

TEST_CASE("construction does not depend on a lucky order") {
  Rng rng(65);
  for (const RootedDigraph& d : random_corpus(40, 4, 14, 0.1, 0.45, 66)) {
    std::vector<Vertex> order = default_order(d);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    check_large_flame(d, construct_large_flame(d, order));
  }
}

TEST_CASE("step-by-step construction keeps its invariants") {
  const RootedDigraph d = figure6(2);
  ConstructionState state = begin_construction(d, default_order(d));
  for (std::size_t n = 0; n < state.order.size(); ++n) {
    construction_step(state);
    CHECK(largeness_check(state.current, state.quasi_flame, false).large);
    CHECK(is_quasi_flame(state.current));
    CHECK(state.steps.size() == n + 1);
  }
  CHECK_THROWS_AS(construction_step(state), std::logic_error);
}

TEST_CASE("prefix construction") {
  {
    const RootedDigraph d = figure6(2);
    auto stream = stream_of(d, default_order(d));
    const int k = d.vertex_count() - 1;
    PrefixReport report = prefix_construct(*stream, k);
    CHECK(report.prefix_relative);
    CHECK(report.k == k);
    CHECK(is_flame(report.result.flame).is_flame());
    CHECK(largeness_check(report.result.flame, report.result.input, false).large);
    CHECK(report.survived.size() + report.changed.size() == static_cast<std::size_t>(k - 1));
  }
  {
    const RootedDigraph d = g2();
    auto stream = stream_of(d, order_of(d, {"a", "b", "v"}));
    PrefixReport one = prefix_construct(*stream, 1);
    CHECK(one.result.flame.edge_count() == 1);
    CHECK(one.result.flame.has_edge(one.result.flame.root(), one.result.flame.at("a")));
  }
  {
    ScriptedStream bad({{"a", {"r"}, {}}, {"b", {"ghost"}, {}}});
    CHECK_THROWS_AS(prefix_construct(bad, 2), DigraphError);
  }
  {
    auto stream = random_stream(7, 0.3, 0.2, 6);
    PrefixReport report = prefix_construct(*stream, 25);
    CHECK_NOTHROW(audit_result(report.result));
    CHECK_THROWS_AS(prefix_construct(*random_stream(7, 0.3, 0.2, 6), 0), std::invalid_argument);
  }
}

TEST_CASE("large subdigraphs of quasi-flames are quasi-flames") {
  CHECK(quasi_flame_transfer_check(g2(), g2()).verdict == TransferVerdict::Holds);
  const RootedDigraph d = g2();
  CHECK(quasi_flame_transfer_check(d, d.without_edge(edge(d, "a", "v"))).verdict == TransferVerdict::NotApplicable);
  CHECK(quasi_flame_transfer_check(g6(), g6()).verdict == TransferVerdict::NotApplicable);
  for (const RootedDigraph& g : random_corpus(60, 3, 12, 0.1, 0.5, 67)) {
    RootedDigraph f = maximal_quasi_flame(g);
    TransferReport report = quasi_flame_transfer_check(f, lovasz_trim(f, default_order(f)));
    CHECK(report.verdict == TransferVerdict::Holds);
  }
}
