#pragma once

#include <string>

#include "flame/digraph.hpp"

// Finite-scale harness checks for two transfer lemmas. Each returns
// NotApplicable when its hypotheses fail, so corpora can be fed blindly.
namespace flame {

enum class LemmaVerdict { Holds, Fails, NotApplicable };

struct LemmaCheck {
  LemmaVerdict verdict = LemmaVerdict::NotApplicable;
  std::string detail;
  int subsets_checked = 0;
};

/// D >= G >= H, v != r, uw in D - G with u outside B_{v,H}, w in the
/// interior of B_{v,H} in H - rv, and B_{v,H} with the same entrance in
/// H - rv and G - rv. Conclusion: for every I in G_G(w), I + uw is in
/// G_{G+uw}(w). Subsets of in_G(w) are enumerated up to `degree_bound`.
LemmaCheck coloop_extension_check(const RootedDigraph& d, const RootedDigraph& g, const RootedDigraph& h,
                                  Vertex v, Edge uw, int degree_bound = 12);

/// D >= G >= H where every uv in D - G has some I in G_G(v) with I + uv not
/// in G_{G+uv}(v), and H is G-large. Conclusion: H is D-large.
LemmaCheck superlarge_check(const RootedDigraph& d, const RootedDigraph& g, const RootedDigraph& h,
                            int degree_bound = 12);

}  // namespace flame
