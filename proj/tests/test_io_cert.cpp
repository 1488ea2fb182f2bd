#include <doctest.h>

#include "flame/certificate.hpp"
#include "flame/construction.hpp"
#include "flame/flame.hpp"
#include "flame/generators.hpp"
#include "flame/io.hpp"
#include "flame/menger.hpp"
#include "support.hpp"

using namespace flame;
using namespace flame::testing;

namespace {

nlohmann::json bundle_for(const RootedDigraph& d) {
  return make_bundle(construct_large_flame(d, default_order(d)));
}

}  // namespace

TEST_CASE("certificates round-trip through JSON") {
  for (const RootedDigraph& g : random_corpus(40, 3, 12, 0.1, 0.5, 71)) {
    for (Vertex v : non_root(g)) {
      MengerCertificate c = max_system(g, v);
      nlohmann::json doc = certificate_to_json(g, c);
      MengerCertificate back = certificate_from_json(g, doc);
      CHECK(certificate_to_json(g, back) == doc);
      CHECK_FALSE(check_certificate(g, back));
    }
  }
  const RootedDigraph g = g2();
  nlohmann::json doc = certificate_to_json(g, max_system(g, g.at("v")));
  doc["system"][0] = {"r", "zz", "v"};
  CHECK_THROWS(certificate_from_json(g, doc));
}

TEST_CASE("hashes are SHA-256 of the canonical digraph") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(input_hash(g6()) == input_hash(parse_digraph(digraph_to_json(g6())).graph));
  CHECK(input_hash(g6()) != input_hash(g2()));
}

TEST_CASE("construction bundles verify against their input") {
  const RootedDigraph d = g6();
  nlohmann::json bundle = bundle_for(d);
  CHECK(bundle["output_edges"].size() == 4);
  CHECK(bundle["per_vertex"].size() == 4);
  CHECK(bundle["prefix_relative"] == false);
  CHECK_FALSE(verify_bundle(d, bundle));
  CHECK(verify_bundle(g2(), bundle));

  for (const RootedDigraph& g : random_corpus(30, 3, 18, 0.1, 0.4, 72)) CHECK_FALSE(verify_bundle(g, bundle_for(g)));
  const RootedDigraph f = figure6(2);
  CHECK_FALSE(verify_bundle(f, bundle_for(f)));
}

TEST_CASE("tampered bundles are rejected") {
  const RootedDigraph d = g2();
  const nlohmann::json good = bundle_for(d);
  REQUIRE_FALSE(verify_bundle(d, good));

  // one separation vertex removed
  nlohmann::json t = good;
  bool done = false;
  for (auto& entry : t["per_vertex"]) {
    auto& sep = entry["separation"]["vertices"];
    if (!done && !sep.empty()) {
      sep.erase(sep.begin());
      done = true;
    }
  }
  REQUIRE(done);
  CHECK(verify_bundle(d, t));

  nlohmann::json extra_edge = good;
  extra_edge["output_edges"].push_back({"v", "a"});
  CHECK(verify_bundle(d, extra_edge));

  nlohmann::json missing = good;
  missing["per_vertex"].erase(missing["per_vertex"].begin());
  CHECK(verify_bundle(d, missing));

  nlohmann::json bad_hash = good;
  bad_hash["input_hash"] = std::string(64, '0');
  CHECK(verify_bundle(d, bad_hash));

  nlohmann::json bad_order = good;
  bad_order["order"] = {"a", "a", "v"};
  CHECK(verify_bundle(d, bad_order));

  nlohmann::json dropped_edge = good;
  dropped_edge["output_edges"].erase(dropped_edge["output_edges"].begin());
  CHECK(verify_bundle(d, dropped_edge));
}
