#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flame/digraph.hpp"
#include "flame/path_system.hpp"

namespace flame::testing {

// Small digraphs used throughout: G1 = {rv}, G2 = {ra, rb, av, bv, ab},
// G6 = {ra, ab, ac, bv, cv}.
RootedDigraph g1();
RootedDigraph g2();
RootedDigraph g6();

RootedDigraph make(const std::vector<std::pair<std::string, std::string>>& edges,
                   const std::vector<std::string>& extra = {});

Edge edge(const Digraph& g, const std::string& tail, const std::string& head);
Path path(const Digraph& g, const std::vector<std::string>& names);
VertexSet vset(const Digraph& g, const std::vector<std::string>& names);
EdgeSet eset(const Digraph& g, const std::vector<std::pair<std::string, std::string>>& edges);

/// Every rooted digraph on r plus `others` further vertices (a, b, c, ...).
std::vector<RootedDigraph> exhaustive(int others);

/// Random rooted digraphs with vertex counts in [min_vertices, max_vertices]
/// and edge probability in [min_p, max_p].
std::vector<RootedDigraph> random_corpus(int count, int min_vertices, int max_vertices, double min_p, double max_p,
                                         std::uint64_t seed);

/// Exhaustive digraphs up to `max_exhaustive_others` plus random ones with
/// vertex counts in [min_random, max_random] up to `total` instances.
std::vector<RootedDigraph> small_corpus(int max_exhaustive_others, int min_random, int max_random, int total,
                                        std::uint64_t seed);

std::vector<Vertex> non_root(const RootedDigraph& g);

}  // namespace flame::testing
