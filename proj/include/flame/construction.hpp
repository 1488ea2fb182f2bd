#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flame/digraph.hpp"
#include "flame/path_system.hpp"

namespace flame {

/// A fact the construction relies on failed to verify. Always a bug, never an
/// expected outcome; `lemma()` names the fact.
class LemmaViolation : public std::logic_error {
 public:
  LemmaViolation(std::string lemma, const std::string& detail)
      : std::logic_error(lemma + ": " + detail), lemma_(std::move(lemma)) {}
  const std::string& lemma() const noexcept { return lemma_; }

 private:
  std::string lemma_;
};

struct StepRecord {
  int step = 0;
  Vertex vertex = 0;
  /// P_n with its separation, valid in the working quasi-flame.
  MengerCertificate certificate;
  /// J: in-edges of v_n already used by earlier systems, rv_n excluded.
  EdgeSet inherited;
  /// In-edges of v_n deleted after this step (outside A_last(P_n)).
  EdgeSet deleted;
};

/// State of the recursion after some number of steps.
struct ConstructionState {
  RootedDigraph quasi_flame;      // D after the maximal quasi-flame replacement
  std::vector<Vertex> order;      // v_0, v_1, ...
  RootedDigraph current;          // D_n: quasi_flame minus the deletions so far
  std::vector<StepRecord> steps;  // P_0 ... P_{n-1}
  EdgeSet edges;                  // union of the edge sets of the P_m
};

struct ConstructionResult {
  RootedDigraph input;
  RootedDigraph quasi_flame;
  RootedDigraph flame;  // E
  std::vector<Vertex> order;
  std::vector<StepRecord> steps;
  /// Per non-root vertex of E in order of `order`: a system in E whose last
  /// edges are exactly in_E(v), with a separation valid in the input digraph.
  std::vector<MengerCertificate> certificates;
};

/// Runs the recursion for a finite digraph along `order` (every non-root
/// vertex once). Every intermediate fact is re-verified; a failure throws
/// LemmaViolation.
ConstructionResult construct_large_flame(const RootedDigraph& g, std::span<const Vertex> order);

/// Step-wise driver behind construct_large_flame, exposed for tests.
ConstructionState begin_construction(const RootedDigraph& g, std::span<const Vertex> order);
void construction_step(ConstructionState& state);

/// Audit of the finished construction against the input: flame, largeness
/// and the combined witnesses. Throws LemmaViolation.
void audit_result(const ConstructionResult& result);

/// A countable digraph presented vertex by vertex. Each yielded vertex comes
/// with its edges to and from the root and previously yielded vertices.
struct StreamedVertex {
  std::string name;
  std::vector<std::string> in_from;
  std::vector<std::string> out_to;
};

class VertexStream {
 public:
  virtual ~VertexStream() = default;
  virtual std::string root() const = 0;
  virtual std::optional<StreamedVertex> next() = 0;
};

/// Streams a finite digraph in the given order.
std::unique_ptr<VertexStream> stream_of(const RootedDigraph& g, std::vector<Vertex> order);

/// Infinite seeded stream: vertex i is joined to each of the previous
/// `window` vertices in each direction with probability p, and receives an
/// edge from the root with probability q.
std::unique_ptr<VertexStream> random_stream(std::uint64_t seed, double p, double q, int window);

struct PrefixReport {
  int k = 0;
  /// Always true: certificates speak about D[prefix] only, never the limit.
  bool prefix_relative = true;
  ConstructionResult result;
  /// Names of prefix vertices whose certificate systems are unchanged between
  /// the (k-1)- and k-prefix runs; empty for k = 1.
  std::vector<std::string> survived;
  std::vector<std::string> changed;
};

/// Pulls k vertices and constructs on the induced prefix in yield order.
/// Throws DigraphError(UnknownVertex) on an edge to an unseen vertex and
/// std::invalid_argument if the stream ends early.
PrefixReport prefix_construct(VertexStream& stream, int k);

enum class TransferVerdict { Holds, Fails, NotApplicable };

struct TransferReport {
  TransferVerdict verdict = TransferVerdict::NotApplicable;
  std::string detail;
  int fans_checked = 0;
};

/// If `big` is a quasi-flame and `sub` is big-large: sub must be a
/// quasi-flame, and every sampled X reachable by an exact r-fan in `big` must
/// be reachable by one in `sub`. X ranges over all subsets of V - r when
/// there are at most `exhaustive_limit` non-root vertices, else over
/// `samples` seeded random subsets.
TransferReport quasi_flame_transfer_check(const RootedDigraph& big, const RootedDigraph& sub,
                                          std::uint64_t seed = 1, int samples = 64,
                                          int exhaustive_limit = 8);

}  // namespace flame
