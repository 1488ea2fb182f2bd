#include "flame/construction.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "flame/bubbles.hpp"
#include "flame/flame.hpp"
#include "flame/menger.hpp"
#include "flame/random.hpp"

namespace flame {

namespace {

void require(bool ok, const char* lemma, const std::string& detail) {
  if (!ok) throw LemmaViolation(lemma, detail);
}

void require_valid(const std::optional<std::string>& err, const char* lemma, const std::string& where) {
  if (err) throw LemmaViolation(lemma, where + ": " + *err);
}

bool includes(const EdgeSet& super, const EdgeSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

ConstructionState begin_construction(const RootedDigraph& g, std::span<const Vertex> order) {
  check_order(g, order);
  ConstructionState state;
  state.quasi_flame = maximal_quasi_flame(g);
  require(is_quasi_flame(state.quasi_flame), "maximal quasi-flame", "greedy output is not a quasi-flame");
  state.order.assign(order.begin(), order.end());
  state.current = state.quasi_flame;
  return state;
}

void construction_step(ConstructionState& state) {
  const std::size_t n = state.steps.size();
  if (n >= state.order.size()) throw std::logic_error("construction_step: no vertices left");
  const RootedDigraph& big = state.quasi_flame;
  const RootedDigraph dn = state.current;
  const Vertex r = dn.root();
  const Vertex v = state.order[n];
  const std::string at = "step " + std::to_string(n) + " at " + dn.name(v);

  if (n > 0) {
    LargenessVerdict large = largeness_check(dn, big, false);
    require(large.large, "deletions keep largeness",
            at + ": edge " + (large.violation ? describe(dn, *large.violation) : std::string("?")) +
                " leaves the largest bubble");
    require(is_quasi_flame(dn), "large subdigraphs of quasi-flames are quasi-flames", at);
    for (std::size_t m = 0; m < n; ++m) {
      require_valid(check_certificate(dn, big, state.steps[m].certificate), "earlier systems survive the deletions",
                    at + ", system of " + dn.name(state.order[m]));
    }
  }

  StepRecord rec;
  rec.step = static_cast<int>(n);
  rec.vertex = v;
  EdgeSet used_before;
  for (const StepRecord& prev : state.steps) {
    used_before = edge_set_union(used_before, edges_into(prev.certificate.system.paths, v));
  }
  for (const Edge& e : used_before) {
    if (e.tail != r) rec.inherited.push_back(e);
  }
  require(rec.inherited.size() <= n, "earlier systems use at most one in-edge each", at);

  if (n == 0) {
    rec.certificate = max_system(dn, v);
  } else {
    MaxBubble mb = max_bubble(dn, v);
    require_valid(check_certificate(dn, big, mb.certificate), "largest-bubble entrance separates in both digraphs", at);
    CoveringResult cov = covering_system(dn, v, rec.inherited);
    require(cov.covered(), "inherited in-edges are coverable", at);
    try {
      rec.certificate = splice_through_separation(dn, mb.certificate, rec.inherited, *cov.system);
    } catch (const std::logic_error& e) {
      throw LemmaViolation("linkage through the separation", at + ": " + e.what());
    }
  }

  const EdgeSet ends = last_edges(rec.certificate.system);
  require_valid(check_certificate(dn, big, rec.certificate), "property 1", at);
  require(includes(ends, used_before), "property 2", at);
  for (std::size_t m = 0; m < n; ++m) {
    require(includes(last_edges(state.steps[m].certificate.system), edges_into(rec.certificate.system.paths, state.order[m])),
            "property 3", at + ", entering " + dn.name(state.order[m]));
  }

  rec.deleted = edge_set_difference(dn.in_edges(v), ends);
  state.current = dn.without_edges(rec.deleted);
  state.edges = edge_set_union(state.edges, system_edges(rec.certificate.system));
  state.steps.push_back(std::move(rec));
}

void audit_result(const ConstructionResult& res) {
  const RootedDigraph& e = res.flame;
  require(e.is_subdigraph_of(res.input), "output inside the input", "E has an edge outside D");
  if (auto bad = is_flame(e).first_violation()) {
    throw LemmaViolation("output is a flame", "violated at " + e.name(*bad));
  }
  LargenessVerdict large = largeness_check(e, res.input, false);
  require(large.large, "output is large",
          large.violation ? "edge " + describe(res.input, *large.violation) + " leaves the largest bubble" : "");
  require(res.certificates.size() == res.order.size(), "combined witnesses", "one certificate per vertex expected");
  for (std::size_t i = 0; i < res.order.size(); ++i) {
    const MengerCertificate& c = res.certificates[i];
    const Vertex v = res.order[i];
    require(c.target == v, "combined witnesses", "certificate order differs from vertex order");
    require_valid(check_certificate(e, res.input, c), "combined witnesses", "at " + e.name(v));
    require(last_edges(c.system) == e.in_edges(v),
            "combined witnesses", "last edges differ from in_E at " + e.name(v));
  }
}

ConstructionResult construct_large_flame(const RootedDigraph& g, std::span<const Vertex> order) {
  ConstructionState state = begin_construction(g, order);
  while (state.steps.size() < state.order.size()) construction_step(state);

  ConstructionResult res;
  res.input = g;
  res.quasi_flame = state.quasi_flame;
  res.flame = g.spanning(state.edges);
  res.order = state.order;

  const RootedDigraph& e = res.flame;
  LargenessVerdict large = largeness_check(e, g, true);
  require(large.large, "output is large",
          large.violation ? "edge " + describe(g, *large.violation) + " leaves the largest bubble" : "");
  std::map<Vertex, const MengerCertificate*> separating;
  for (const MengerCertificate& c : large.certificates) separating[c.target] = &c;
  for (const StepRecord& step : state.steps) {
    const Vertex v = step.vertex;
    require(last_edges(step.certificate.system) == e.in_edges(v), "fixed systems use all of in_E",
            "at " + e.name(v));
    EdgeSet required;
    for (const Edge& in : e.in_edges(v)) {
      if (in.tail != e.root()) required.push_back(in);
    }
    try {
      res.certificates.push_back(splice_through_separation(e, *separating.at(v), required, step.certificate.system));
    } catch (const std::logic_error& err) {
      throw LemmaViolation("combined witnesses", "at " + e.name(v) + ": " + err.what());
    }
  }
  res.steps = std::move(state.steps);
  audit_result(res);
  return res;
}

namespace {

class FiniteStream : public VertexStream {
 public:
  FiniteStream(RootedDigraph g, std::vector<Vertex> order) : g_(std::move(g)), order_(std::move(order)) {}

  std::string root() const override { return g_.name(g_.root()); }

  std::optional<StreamedVertex> next() override {
    if (pos_ >= order_.size()) return std::nullopt;
    const Vertex v = order_[pos_++];
    seen_.insert(v);
    StreamedVertex out;
    out.name = g_.name(v);
    for (Vertex u : g_.in(v)) {
      if (u == g_.root() || seen_.count(u)) out.in_from.push_back(g_.name(u));
    }
    for (Vertex w : g_.out(v)) {
      if (seen_.count(w)) out.out_to.push_back(g_.name(w));
    }
    return out;
  }

 private:
  RootedDigraph g_;
  std::vector<Vertex> order_;
  std::size_t pos_ = 0;
  std::set<Vertex> seen_;
};

class RandomStream : public VertexStream {
 public:
  RandomStream(std::uint64_t seed, double p, double q, int window) : rng_(seed), p_(p), q_(q), window_(window) {}

  std::string root() const override { return "r"; }

  std::optional<StreamedVertex> next() override {
    StreamedVertex out;
    out.name = label(count_);
    if (rng_.chance(q_)) out.in_from.push_back("r");
    for (int back = 1; back <= window_ && back <= count_; ++back) {
      const std::string other = label(count_ - back);
      if (rng_.chance(p_)) out.in_from.push_back(other);
      if (rng_.chance(p_)) out.out_to.push_back(other);
    }
    ++count_;
    return out;
  }

 private:
  static std::string label(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "x%06d", i);
    return buf;
  }

  Rng rng_;
  double p_;
  double q_;
  int window_;
  int count_ = 0;
};

struct Prefix {
  RootedDigraph g;
  std::vector<Vertex> order;
};

Prefix build_prefix(const std::string& root, const std::vector<StreamedVertex>& yielded, int k) {
  std::set<std::string> known{root};
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    const StreamedVertex& sv = yielded[static_cast<std::size_t>(i)];
    if (!known.insert(sv.name).second) {
      throw DigraphError(DigraphError::Kind::DuplicateVertex, "stream yielded " + sv.name + " twice");
    }
    names.push_back(sv.name);
    for (const std::string& u : sv.in_from) {
      if (!known.count(u) || u == sv.name) {
        throw DigraphError(DigraphError::Kind::UnknownVertex, "edge " + u + "->" + sv.name + " touches an unseen vertex");
      }
      edges.emplace_back(u, sv.name);
    }
    for (const std::string& w : sv.out_to) {
      if (!known.count(w) || w == sv.name) {
        throw DigraphError(DigraphError::Kind::UnknownVertex, "edge " + sv.name + "->" + w + " touches an unseen vertex");
      }
      edges.emplace_back(sv.name, w);
    }
  }
  Prefix out{RootedDigraph::from_names(root, edges, names), {}};
  for (const std::string& name : names) out.order.push_back(out.g.at(name));
  return out;
}

std::map<std::string, std::vector<std::vector<std::string>>> named_systems(const ConstructionResult& res) {
  std::map<std::string, std::vector<std::vector<std::string>>> out;
  for (const MengerCertificate& c : res.certificates) {
    auto& paths = out[res.flame.name(c.target)];
    for (const Path& p : c.system.paths) {
      std::vector<std::string> names;
      for (Vertex w : p) names.push_back(res.flame.name(w));
      paths.push_back(std::move(names));
    }
    std::sort(paths.begin(), paths.end());
  }
  return out;
}

}  // namespace

std::unique_ptr<VertexStream> stream_of(const RootedDigraph& g, std::vector<Vertex> order) {
  check_order(g, order);
  return std::make_unique<FiniteStream>(g, std::move(order));
}

std::unique_ptr<VertexStream> random_stream(std::uint64_t seed, double p, double q, int window) {
  if (!(p >= 0 && p <= 1 && q >= 0 && q <= 1) || window < 0) {
    throw std::invalid_argument("random_stream: probabilities must lie in [0,1] and the window be non-negative");
  }
  return std::make_unique<RandomStream>(seed, p, q, window);
}

PrefixReport prefix_construct(VertexStream& stream, int k) {
  if (k < 1) throw std::invalid_argument("prefix_construct: k must be positive");
  std::vector<StreamedVertex> yielded;
  while (static_cast<int>(yielded.size()) < k) {
    auto sv = stream.next();
    if (!sv) throw std::invalid_argument("prefix_construct: stream ended after " + std::to_string(yielded.size()) + " vertices");
    yielded.push_back(std::move(*sv));
  }
  const std::string root = stream.root();
  PrefixReport report;
  report.k = k;
  Prefix full = build_prefix(root, yielded, k);
  report.result = construct_large_flame(full.g, full.order);
  if (k == 1) return report;

  Prefix shorter = build_prefix(root, yielded, k - 1);
  ConstructionResult before = construct_large_flame(shorter.g, shorter.order);
  auto now = named_systems(report.result);
  for (const auto& [name, paths] : named_systems(before)) {
    (now.at(name) == paths ? report.survived : report.changed).push_back(name);
  }
  return report;
}

TransferReport quasi_flame_transfer_check(const RootedDigraph& big, const RootedDigraph& sub, std::uint64_t seed,
                                          int samples, int exhaustive_limit) {
  if (!sub.is_subdigraph_of(big) || sub.root() != big.root()) {
    throw std::invalid_argument("quasi_flame_transfer_check: not a spanning subdigraph with the same root");
  }
  TransferReport report;
  if (!is_quasi_flame(big)) {
    report.detail = "larger digraph is not a quasi-flame";
    return report;
  }
  if (!largeness_check(sub, big, false).large) {
    report.detail = "subdigraph is not large";
    return report;
  }
  if (auto bad = is_flame(sub).first_violation()) {
    report.verdict = TransferVerdict::Fails;
    report.detail = "subdigraph is not a quasi-flame at " + sub.name(*bad);
    return report;
  }

  const std::vector<Vertex> pool = default_order(big);
  auto probe = [&](const VertexSet& x) {
    if (!root_fan_to(big, x)) return true;
    ++report.fans_checked;
    return root_fan_to(sub, x).has_value();
  };
  auto fail = [&](const VertexSet& x) {
    report.verdict = TransferVerdict::Fails;
    report.detail = "no exact r-fan onto {" + describe_set(big, x) + "} in the subdigraph";
    return report;
  };
  if (static_cast<int>(pool.size()) <= exhaustive_limit) {
    for (std::uint32_t mask = 1; mask < (1U << pool.size()); ++mask) {
      VertexSet x;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (mask >> i & 1U) x.push_back(pool[i]);
      }
      if (!probe(x)) return fail(x);
    }
  } else {
    Rng rng(seed);
    const int most = std::min<int>(5, static_cast<int>(pool.size()));
    for (int s = 0; s < samples; ++s) {
      std::vector<Vertex> shuffled = pool;
      const auto size = static_cast<std::size_t>(rng.between(1, most));
      for (std::size_t i = 0; i < size; ++i) {
        std::swap(shuffled[i], shuffled[i + rng.below(shuffled.size() - i)]);
      }
      VertexSet x = make_vertex_set({shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(size)});
      if (!probe(x)) return fail(x);
    }
  }
  report.verdict = TransferVerdict::Holds;
  return report;
}

}  // namespace flame
