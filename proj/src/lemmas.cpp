#include "flame/lemmas.hpp"

#include <stdexcept>
#include <vector>

#include "flame/bubbles.hpp"
#include "flame/menger.hpp"

namespace flame {

namespace {

bool nested(const RootedDigraph& big, const RootedDigraph& small) {
  return small.is_subdigraph_of(big) && small.root() == big.root();
}

std::vector<EdgeSet> subsets(const EdgeSet& all, int degree_bound) {
  if (static_cast<int>(all.size()) > degree_bound) throw std::invalid_argument("lemma check: in-degree exceeds the bound");
  std::vector<EdgeSet> out;
  for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) s.push_back(all[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Whether I + e is realisable whenever I is, over all I in in_G(w).
bool every_extension_realisable(const RootedDigraph& g, Edge e, int degree_bound, LemmaCheck& check,
                                EdgeSet* counterexample) {
  const RootedDigraph grown = g.with_edge(e);
  for (EdgeSet& in : subsets(g.in_edges(e.head), degree_bound)) {
    if (!covering_system(g, e.head, in).covered()) continue;
    ++check.subsets_checked;
    EdgeSet plus = edge_set_union(in, EdgeSet{e});
    if (!covering_system(grown, e.head, plus).covered()) {
      if (counterexample) *counterexample = std::move(in);
      return false;
    }
  }
  return true;
}

}  // namespace

LemmaCheck coloop_extension_check(const RootedDigraph& d, const RootedDigraph& g, const RootedDigraph& h, Vertex v,
                                  Edge uw, int degree_bound) {
  if (!nested(d, g) || !nested(g, h)) throw std::invalid_argument("coloop_extension_check: digraphs are not nested");
  LemmaCheck check;
  if (v == d.root() || !d.has_edge(uw) || g.has_edge(uw)) {
    check.detail = "edge not in D - G";
    return check;
  }
  const MaxBubble mb = max_bubble(h, v);
  const VertexSet& b = mb.bubble.vertices;
  if (set_contains(b, uw.tail)) {
    check.detail = "tail inside the largest bubble";
    return check;
  }
  const VertexSet ent_h = entrance(h.without_root_edge(v), b);
  if (!set_contains(interior(h.without_root_edge(v), b), uw.head)) {
    check.detail = "head not interior";
    return check;
  }
  if (entrance(g.without_root_edge(v), b) != ent_h) {
    check.detail = "entrances differ";
    return check;
  }
  EdgeSet witness;
  if (every_extension_realisable(g, uw, degree_bound, check, &witness)) {
    check.verdict = LemmaVerdict::Holds;
  } else {
    check.verdict = LemmaVerdict::Fails;
    check.detail = "I = {" + std::to_string(witness.size()) + " edges} loses realisability after adding " + describe(g, uw);
  }
  return check;
}

LemmaCheck superlarge_check(const RootedDigraph& d, const RootedDigraph& g, const RootedDigraph& h,
                            int degree_bound) {
  if (!nested(d, g) || !nested(g, h)) throw std::invalid_argument("superlarge_check: digraphs are not nested");
  LemmaCheck check;
  for (const Edge& e : edge_set_difference(d.edges(), g.edges())) {
    LemmaCheck scratch;
    if (every_extension_realisable(g, e, degree_bound, scratch, nullptr)) {
      check.detail = "edge " + describe(d, e) + " is addable without loss";
      return check;
    }
  }
  if (!largeness_check(h, g, false).large) {
    check.detail = "H is not G-large";
    return check;
  }
  LargenessVerdict verdict = largeness_check(h, d, false);
  if (verdict.large) {
    check.verdict = LemmaVerdict::Holds;
  } else {
    check.verdict = LemmaVerdict::Fails;
    check.detail = "H is not D-large: " + describe(d, *verdict.violation);
  }
  return check;
}

}  // namespace flame
