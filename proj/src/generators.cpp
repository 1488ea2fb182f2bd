#include "flame/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>

#include "flame/random.hpp"

namespace flame {

std::string figure6_name_u(int i) { return "u" + std::to_string(i); }
std::string figure6_name_v(int i) { return "v" + std::to_string(i); }
std::string figure6_name_vij(int i, int j) { return "v" + std::to_string(i) + "." + std::to_string(j); }

std::string figure6_name_vf(std::uint32_t bits, int k) {
  std::string s = "vf:";
  for (int i = 0; i < k; ++i) s.push_back(bits >> i & 1U ? '1' : '0');
  return s;
}

RootedDigraph figure6(int k, bool omega_sources) {
  if (k < 1 || k > 12) throw std::invalid_argument("figure6: level must lie in 1..12");
  std::vector<std::pair<std::string, std::string>> edges;
  edges.emplace_back("r", figure6_name_omega());
  std::vector<std::string> sources;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back("r", figure6_name_u(i));
    for (int j = 0; j < 2; ++j) {
      edges.emplace_back(figure6_name_u(i), figure6_name_vij(i, j));
      edges.emplace_back(figure6_name_vij(i, j), figure6_name_v(i));
    }
    sources.push_back(figure6_name_v(i));
  }
  if (omega_sources) sources.emplace_back(figure6_name_omega());
  for (const std::string& s : sources) {
    for (int j = 0; j < k; ++j) {
      for (int b = 0; b < 2; ++b) edges.emplace_back(s, figure6_name_vij(j, b));
    }
  }
  for (std::uint32_t f = 0; f < (1U << k); ++f) {
    for (int i = 0; i < k; ++i) edges.emplace_back(figure6_name_vij(i, static_cast<int>(f >> i & 1U)), figure6_name_vf(f, k));
  }
  return RootedDigraph::from_names("r", edges, {figure6_name_omega()});
}

namespace {

std::vector<std::string> numbered(int n) {
  if (n < 1) throw std::invalid_argument("random digraph: need at least the root");
  const int width = static_cast<int>(std::to_string(std::max(n - 2, 0)).size());
  std::vector<std::string> names{"r"};
  for (int i = 0; i + 1 < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "x%0*d", width, i);
    names.emplace_back(buf);
  }
  return names;
}

// Admissible ordered pairs in lexicographic order of names.
std::vector<std::pair<std::string, std::string>> admissible(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& a : names) {
    for (const std::string& b : names) {
      if (a != b && b != "r") out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RootedDigraph random_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("random digraph: p must lie in [0,1]");
  auto names = numbered(n);
  Rng rng(seed);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto& e : admissible(names)) {
    if (rng.chance(p)) edges.push_back(std::move(e));
  }
  return RootedDigraph::from_names("r", edges, names);
}

RootedDigraph random_gnm(int n, int m, std::uint64_t seed) {
  auto names = numbered(n);
  auto pool = admissible(names);
  if (m < 0 || static_cast<std::size_t>(m) > pool.size()) {
    throw std::invalid_argument("random digraph: m exceeds the number of admissible edges");
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  }
  pool.resize(static_cast<std::size_t>(m));
  return RootedDigraph::from_names("r", pool, names);
}

RootedDigraph layered(const std::vector<int>& widths, std::uint64_t seed) {
  if (widths.empty()) throw std::invalid_argument("layered: need at least one layer");
  std::vector<std::vector<std::string>> layers;
  std::vector<std::string> all;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (widths[i] < 1) throw std::invalid_argument("layered: widths must be positive");
    layers.emplace_back();
    for (int j = 0; j < widths[i]; ++j) {
      layers.back().push_back("l" + std::to_string(i) + "_" + std::to_string(j));
      all.push_back(layers.back().back());
    }
  }
  Rng rng(seed);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const std::string& w : layers[0]) edges.emplace_back("r", w);
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const auto& prev = layers[i - 1];
    for (const std::string& w : layers[i]) {
      const std::size_t anchor = rng.below(prev.size());
      for (std::size_t a = 0; a < prev.size(); ++a) {
        if (a == anchor || rng.chance(0.5)) edges.emplace_back(prev[a], w);
      }
    }
  }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (const std::string& a : layers[i]) {
      for (const std::string& b : layers[i]) {
        if (a != b && rng.chance(0.1)) edges.emplace_back(a, b);
      }
      if (i == 0) continue;
      for (const std::string& b : layers[i - 1]) {
        if (rng.chance(0.1)) edges.emplace_back(a, b);
      }
    }
  }
  return RootedDigraph::from_names("r", edges, all);
}

namespace {

int to_int(const std::string& key, const std::string& value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("generator spec: " + key + " must be an integer, got '" + value + "'");
  }
  return out;
}

std::uint64_t to_seed(const std::string& value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("generator spec: seed must be a non-negative integer, got '" + value + "'");
  }
  return out;
}

double to_probability(const std::string& value) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || !(out >= 0 && out <= 1)) {
    throw std::invalid_argument("generator spec: p must be a number in [0,1], got '" + value + "'");
  }
  return out;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size() && !rest.empty()) {
      std::size_t comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw std::invalid_argument("generator spec: expected key=value, got '" + item + "'");
      if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
        throw std::invalid_argument("generator spec: repeated key " + item.substr(0, eq));
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    std::string v = it->second;
    params.erase(it);
    return v;
  };
  auto need = [&](const std::string& key) {
    auto v = take(key);
    if (!v) throw std::invalid_argument("generator spec: " + kind + " needs " + key);
    return *v;
  };

  GeneratorSpec spec;
  if (kind == "figure6") {
    spec.kind = Kind::Figure6;
    spec.k = to_int("k", need("k"));
    if (auto omega = take("omega")) spec.omega_sources = to_int("omega", *omega) != 0;
  } else if (kind == "random") {
    spec.n = to_int("n", need("n"));
    auto m = take("m");
    auto p = take("p");
    if (m.has_value() == p.has_value()) throw std::invalid_argument("generator spec: random needs exactly one of m, p");
    if (m) {
      spec.kind = Kind::RandomGnm;
      spec.m = to_int("m", *m);
    } else {
      spec.kind = Kind::RandomGnp;
      spec.p = to_probability(*p);
    }
    spec.seed = to_seed(need("seed"));
  } else if (kind == "layered") {
    spec.kind = Kind::Layered;
    std::string widths = need("widths");
    std::size_t pos = 0;
    while (true) {
      std::size_t dash = widths.find('-', pos);
      spec.widths.push_back(to_int("widths", widths.substr(pos, dash == std::string::npos ? std::string::npos : dash - pos)));
      if (dash == std::string::npos) break;
      pos = dash + 1;
    }
    spec.seed = to_seed(need("seed"));
  } else {
    throw std::invalid_argument("generator spec: unknown kind '" + kind + "'");
  }
  if (!params.empty()) throw std::invalid_argument("generator spec: unknown parameter " + params.begin()->first);
  return spec;
}

RootedDigraph GeneratorSpec::build() const {
  switch (kind) {
    case Kind::Figure6:
      return figure6(k, omega_sources);
    case Kind::RandomGnm:
      return random_gnm(n, m, seed);
    case Kind::RandomGnp:
      return random_gnp(n, p, seed);
    case Kind::Layered:
      return layered(widths, seed);
  }
  throw std::logic_error("unreachable generator kind");
}

}  // namespace flame
