#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "flame/bubbles.hpp"
#include "flame/construction.hpp"
#include "flame/digraph.hpp"
#include "flame/path_system.hpp"

namespace flame {

nlohmann::json path_to_json(const Digraph& g, const Path& path);
nlohmann::json system_to_json(const Digraph& g, const PathSystem& system);
/// {"vertices": [...], "uses_root_edge": bool}
nlohmann::json separation_to_json(const Digraph& g, const Separation& separation);
/// {"v", "system", "separation", "assignment"}; assignment[i] is the vertex
/// chosen on system[i], or null for the single-edge path (r, v).
nlohmann::json certificate_to_json(const Digraph& g, const MengerCertificate& certificate);
/// {"target", "vertices", "entrance", "witness"}
nlohmann::json bubble_to_json(const Digraph& g, const Bubble& bubble);

/// Throws DigraphError(Malformed or UnknownVertex) on structural problems.
/// The result is not validated against any digraph.
MengerCertificate certificate_from_json(const Digraph& g, const nlohmann::json& doc);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);
/// SHA-256 of the canonical JSON text of the digraph.
std::string input_hash(const RootedDigraph& g);

/// {"input_hash", "order", "per_vertex", "output_edges", "prefix_relative"}
nlohmann::json make_bundle(const ConstructionResult& result, bool prefix_relative = false);

/// Re-checks a bundle against its input without rerunning any construction:
/// hash, E inside D, and per vertex a system in E whose last edges are
/// exactly in_E(v) with a one-per-path separation valid in D. Returns the
/// first failure.
std::optional<std::string> verify_bundle(const RootedDigraph& input, const nlohmann::json& bundle);

}  // namespace flame
