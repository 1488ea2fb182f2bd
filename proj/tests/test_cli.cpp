#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flame/cli.hpp"
#include "flame/io.hpp"
#include "support.hpp"

using namespace flame;
using namespace flame::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "flamectl_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_graph(const std::string& name, const RootedDigraph& g) {
  fs::path p = scratch() / name;
  write_text(p, digraph_to_json(g).dump());
  return p;
}

}  // namespace

TEST_CASE("construct and verify a bundle") {
  const fs::path in = write_graph("g6.json", g6());
  const fs::path bundle = scratch() / "g6.bundle.json";
  Run c = run({"construct", "--input", in.string(), "--out", bundle.string()});
  CHECK(c.code == cli::kOk);
  nlohmann::json doc = nlohmann::json::parse(slurp(bundle));
  CHECK(doc["output_edges"].size() == 4);

  Run v = run({"verify-cert", "--input", in.string(), "--cert", bundle.string()});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.find("certificate verified") != std::string::npos);

  for (auto& entry : doc["per_vertex"]) {
    if (!entry["separation"]["vertices"].empty()) {
      entry["separation"]["vertices"].erase(entry["separation"]["vertices"].begin());
      break;
    }
  }
  const fs::path tampered = scratch() / "g6.tampered.json";
  write_text(tampered, doc.dump());
  CHECK(run({"verify-cert", "--input", in.string(), "--cert", tampered.string()}).code == cli::kCertificateRejected);
}

TEST_CASE("input and usage errors") {
  const fs::path d = write_graph("g2.json", g2());
  const RootedDigraph g = g2();
  const fs::path not_sub = write_graph("not_sub.json", make({{"r", "a"}, {"v", "a"}}));
  CHECK(run({"check-large", "--input", d.string(), "--sub", not_sub.string()}).code == cli::kInputError);
  const fs::path sub = write_graph("sub.json", g.without_edge(edge(g, "a", "v")));
  CHECK(run({"check-large", "--input", d.string(), "--sub", sub.string()}).code == cli::kPropertyViolated);
  CHECK(run({"check-large", "--input", d.string(), "--sub", d.string()}).code == cli::kOk);

  const fs::path broken = scratch() / "broken.json";
  write_text(broken, "{\"root\": \"r\", \"edges\": [[\"a\", \"a\"]]}");
  CHECK(run({"analyze", "--input", broken.string()}).code == cli::kInputError);
  CHECK(run({"analyze", "--input", (scratch() / "absent.json").string()}).code == cli::kInputError);
  CHECK(run({"analyze"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"gen", "--gen", "random:n=5,m=4"}).code == cli::kInputError);
  CHECK(run({"bubble", "--input", d.string(), "--target", "nowhere"}).code == cli::kInputError);
}

TEST_CASE("property verdicts set the exit code") {
  const fs::path six = write_graph("g6b.json", g6());
  const fs::path two = write_graph("g2b.json", g2());
  CHECK(run({"check-flame", "--input", six.string()}).code == cli::kPropertyViolated);
  CHECK(run({"check-flame", "--input", two.string(), "--strict-quasi"}).code == cli::kOk);
  Run b = run({"bubble", "--input", six.string(), "--target", "v"});
  CHECK(b.code == cli::kOk);
  CHECK(b.out.find("{a}") != std::string::npos);
  Run s = run({"separation", "--input", two.string(), "--target", "v"});
  CHECK(s.out.find("kappa(r, v) = 2") != std::string::npos);
  Run l = run({"lovasz", "--input", six.string(), "--order", "a,b,c,v"});
  CHECK(l.code == cli::kOk);
}

TEST_CASE("infinite-object claims are labelled, prefix results are tagged") {
  Run a = run({"analyze", "--gen", "figure6:k=2"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out.find("out of scope:") != std::string::npos);
  CHECK(a.out.find("N^out(r) in S_D(v_f)") != std::string::npos);
  CHECK(a.out.find("every countable rooted digraph has a large flame") != std::string::npos);
  Run g = run({"gen", "--gen", "figure6:k=2", "--out", (scratch() / "f6.json").string()});
  CHECK(g.err.find("outside desk verification") != std::string::npos);

  const fs::path bundle = scratch() / "prefix.json";
  Run p = run({"construct", "--gen", "figure6:k=2", "--prefix", "6", "--out", bundle.string()});
  CHECK(p.code == cli::kOk);
  CHECK(p.out.find("prefix-relative") != std::string::npos);
  nlohmann::json doc = nlohmann::json::parse(slurp(bundle));
  CHECK(doc["prefix_relative"] == true);
  CHECK(doc["prefix"]["k"] == 6);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* spec : {"random:n=25,p=0.2,seed=3", "layered:widths=3-4-3,seed=8", "figure6:k=3"}) {
    std::string first;
    for (int i = 0; i < 2; ++i) {
      const fs::path out = scratch() / ("det" + std::to_string(i) + ".json");
      Run r = run({"construct", "--gen", spec, "--out", out.string()});
      REQUIRE(r.code == cli::kOk);
      if (i == 0) {
        first = slurp(out) + r.out;
      } else {
        CHECK(slurp(out) + r.out == first);
      }
    }
  }
}
