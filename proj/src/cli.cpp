#include "flame/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "flame/bubbles.hpp"
#include "flame/certificate.hpp"
#include "flame/construction.hpp"
#include "flame/flame.hpp"
#include "flame/generators.hpp"
#include "flame/io.hpp"
#include "flame/menger.hpp"
#include "flame/oracle.hpp"

namespace flame::cli {

namespace {

constexpr const char* kFigure6Note =
    "figure6:k=K truncates a digraph on 2^aleph0 vertices at level K. Its headline facts concern the "
    "infinite digraph: N^out(r) in S_D(v_f) cannot hold at truncation (|N^out(r)| = K+1 exceeds the "
    "in-degree K of v_f) and is outside desk verification.";

constexpr const char* kCountableNote =
    "The existence of a large flame in every countable rooted digraph is a statement about infinite "
    "objects; this tool checks finite digraphs and finite prefixes only.";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string gen;
  std::string root;
  std::string order;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string dot_path;
  bool normalize_root = false;
  bool strict_quasi = false;
  int oracle_bound = 7;
  bool exclude_omega = false;
  std::string sub;
  std::string target;
  std::string cert;
  std::string set;
  int prefix = 0;
};

struct Loaded {
  RootedDigraph graph;
  std::optional<GeneratorSpec> spec;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

LoadResult load_file(const std::string& path, const Options& o) {
  nlohmann::json doc = read_json(path);
  if (!o.root.empty() && doc.is_object()) doc["root"] = o.root;
  return parse_digraph(doc, o.normalize_root);
}

Loaded load_input(const Options& o, std::ostream& err) {
  if (o.input.empty() == o.gen.empty()) throw UsageError("give exactly one of --input and --gen");
  Loaded l;
  if (!o.input.empty()) {
    LoadResult r = load_file(o.input, o);
    for (const std::string& w : r.warnings) err << "warning: " << w << "\n";
    l.graph = std::move(r.graph);
    return l;
  }
  std::string text = o.gen;
  if (o.seed && text.find("seed=") == std::string::npos && text.rfind("figure6", 0) != 0) {
    text += (text.find(':') == std::string::npos ? ":" : ",") + std::string("seed=") + std::to_string(*o.seed);
  }
  GeneratorSpec spec = GeneratorSpec::parse(text);
  if (o.exclude_omega) {
    if (spec.kind != GeneratorSpec::Kind::Figure6) throw UsageError("--exclude-omega-edges applies to figure6 only");
    spec.omega_sources = false;
  }
  l.graph = spec.build();
  l.spec = spec;
  return l;
}

std::vector<Vertex> parse_order(const RootedDigraph& g, const Options& o) {
  if (o.order.empty()) return default_order(g);
  std::vector<Vertex> order;
  for (const std::string& name : split_list(o.order)) order.push_back(g.at(name));
  check_order(g, order);
  return order;
}

Vertex parse_target(const RootedDigraph& g, const Options& o) {
  if (o.target.empty()) throw UsageError("--target is required");
  Vertex v = g.at(o.target);
  if (v == g.root()) throw UsageError("--target must differ from the root");
  return v;
}

void emit_json(const Options& o, const nlohmann::json& doc) {
  if (!o.out_path.empty()) write_text(o.out_path, doc.dump(2) + "\n");
}

void emit_dot(const Options& o, const RootedDigraph& g, const EdgeSet* highlight) {
  if (!o.dot_path.empty()) write_text(o.dot_path, to_dot(g, highlight));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- commands ---------------------------------------------------------------

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.gen.empty()) throw UsageError("gen needs --gen SPEC");
  Loaded l = load_input(o, err);
  const std::string text = digraph_to_json(l.graph).dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_text(o.out_path, text);
    out << "wrote " << l.graph.vertex_count() << " vertices, " << l.graph.edge_count() << " edges\n";
  }
  if (l.spec && l.spec->kind == GeneratorSpec::Kind::Figure6) err << "note: " << kFigure6Note << "\n";
  emit_dot(o, l.graph, nullptr);
  return kOk;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  if (o.out_path.empty() && o.dot_path.empty()) {
    out << to_dot(l.graph);
    return kOk;
  }
  emit_json(o, digraph_to_json(l.graph));
  emit_dot(o, l.graph, nullptr);
  out << "exported " << l.graph.vertex_count() << " vertices, " << l.graph.edge_count() << " edges\n";
  return kOk;
}

nlohmann::json figure6_report(const GeneratorSpec& spec, const Options& o, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  out << "figure6 level " << spec.k << ": G-membership of {v<i>.0->v<i>, v<i>.1->v<i>}\n";
  for (int interpretation = 0; interpretation < 2; ++interpretation) {
    const bool omega = interpretation == 0;
    RootedDigraph g = figure6(spec.k, omega);
    const bool oracle = g.vertex_count() <= o.oracle_bound;
    for (int i = 0; i < spec.k; ++i) {
      const Vertex vi = g.at(figure6_name_v(i));
      EdgeSet pair{{g.at(figure6_name_vij(i, 0)), vi}, {g.at(figure6_name_vij(i, 1)), vi}};
      pair = make_edge_set(pair);
      const bool member = covering_system(g, vi, pair).covered();
      nlohmann::json row = {{"i", i}, {"omega_sources", omega}, {"member", member}};
      out << "  i=" << i << (omega ? " with vw sources:    " : " without vw sources: ") << yes_no(member);
      if (oracle) {
        const bool brute = oracle::brute_in_g(oracle::enum_systems(g, vi, {o.oracle_bound}), pair);
        row["oracle_member"] = brute;
        out << " (oracle " << yes_no(brute) << ")";
      }
      out << "\n";
      rows.push_back(row);
    }
  }
  return rows;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  const RootedDigraph& g = l.graph;
  nlohmann::json doc;
  nlohmann::json vertices = nlohmann::json::array();
  FlameReport report = is_flame(g);
  int kappa_sum = 0;
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", root " << g.name(g.root()) << "\n";
  out << "vertex in-degree kappa flame |B_v| entrance\n";
  for (const FlameRecord& rec : report.records) {
    MaxBubble mb = max_bubble(g, rec.vertex);
    kappa_sum += rec.kappa;
    out << g.name(rec.vertex) << " " << rec.in_degree << " " << rec.kappa << " "
        << (rec.status == FlameStatus::Ok ? "ok" : "violated") << " " << mb.bubble.vertices.size() << " {"
        << describe_set(g, mb.certificate.separation.vertices) << "}\n";
    vertices.push_back({{"v", g.name(rec.vertex)},
                        {"in_degree", rec.in_degree},
                        {"kappa", rec.kappa},
                        {"flame", rec.status == FlameStatus::Ok},
                        {"bubble", bubble_to_json(g, mb.bubble)},
                        {"separation", separation_to_json(g, mb.certificate.separation)}});
  }
  const bool flame = report.is_flame();
  const bool quasi = o.strict_quasi ? is_quasi_flame(g, true) : flame;
  out << "flame: " << yes_no(flame) << "\n";
  out << "quasi-flame" << (o.strict_quasi ? " (all subsets)" : "") << ": " << yes_no(quasi) << "\n";
  out << "sum of kappa (edges of any trimmed flame): " << kappa_sum << "\n";
  doc["vertices"] = vertices;
  doc["is_flame"] = flame;
  doc["is_quasi_flame"] = quasi;
  doc["edge_count"] = g.edge_count();
  doc["kappa_sum"] = kappa_sum;

  nlohmann::json notes = nlohmann::json::array();
  notes.push_back({{"claim", "every countable rooted digraph has a large flame"},
                   {"status", "infinite-object claim, not desk-verifiable"},
                   {"note", kCountableNote}});
  if (l.spec && l.spec->kind == GeneratorSpec::Kind::Figure6) {
    notes.push_back({{"claim", "N^out(r) in S_D(v_f)"},
                     {"status", "infinite-object claim, not desk-verifiable"},
                     {"note", kFigure6Note}});
    doc["figure6"] = figure6_report(*l.spec, o, out);
  }
  out << "out of scope:\n";
  for (const auto& n : notes) out << "  [" << n["status"].get<std::string>() << "] " << n["claim"].get<std::string>() << "\n";
  doc["unverifiable_claims"] = notes;
  emit_json(o, doc);
  emit_dot(o, g, nullptr);
  return kOk;
}

int cmd_lovasz(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  const RootedDigraph& g = l.graph;
  RootedDigraph e = lovasz_trim(g, parse_order(g, o));
  int kappa_sum = 0;
  bool exact = true;
  for (Vertex v : default_order(g)) {
    const int k = local_connectivity(g, v);
    kappa_sum += k;
    exact = exact && k == local_connectivity(e, v) && k == static_cast<int>(e.in(v).size());
  }
  exact = exact && static_cast<int>(e.edge_count()) == kappa_sum;
  out << "trimmed " << g.edge_count() << " -> " << e.edge_count() << " edges; sum of kappa " << kappa_sum << "\n";
  out << "connectivities preserved and in-degrees tight: " << yes_no(exact) << "\n";
  emit_json(o, digraph_to_json(e));
  const EdgeSet kept = e.edges();
  emit_dot(o, g, &kept);
  return exact ? kOk : kPropertyViolated;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  const RootedDigraph& g = l.graph;
  std::vector<Vertex> order = parse_order(g, o);
  ConstructionResult result;
  nlohmann::json bundle;
  if (o.prefix > 0) {
    if (o.prefix > static_cast<int>(order.size())) throw UsageError("--prefix exceeds the number of non-root vertices");
    auto stream = stream_of(g, order);
    PrefixReport report = prefix_construct(*stream, o.prefix);
    result = std::move(report.result);
    bundle = make_bundle(result, true);
    bundle["prefix"] = {{"k", report.k}, {"survived", report.survived}, {"changed", report.changed}};
    out << "prefix of " << report.k << " vertices (certificates are prefix-relative: they hold for the "
        << "induced prefix only, not for any limit digraph)\n";
    out << "certificates unchanged from the previous prefix: " << report.survived.size() << ", changed: "
        << report.changed.size() << "\n";
  } else {
    result = construct_large_flame(g, order);
    bundle = make_bundle(result, false);
  }
  out << "input " << result.input.edge_count() << " edges, quasi-flame " << result.quasi_flame.edge_count()
      << " edges, flame " << result.flame.edge_count() << " edges\n";
  out << "flame: yes, large: yes, certificates: " << result.certificates.size() << "\n";
  emit_json(o, bundle);
  const EdgeSet kept = result.flame.edges();
  emit_dot(o, result.input, &kept);
  return kOk;
}

int cmd_check_flame(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  const RootedDigraph& g = l.graph;
  FlameReport report = is_flame(g);
  nlohmann::json rows = nlohmann::json::array();
  for (const FlameRecord& rec : report.records) {
    const bool ok = rec.status == FlameStatus::Ok;
    if (!ok) out << "violated at " << g.name(rec.vertex) << ": in-degree " << rec.in_degree << ", kappa " << rec.kappa << "\n";
    nlohmann::json row = {{"v", g.name(rec.vertex)}, {"in_degree", rec.in_degree}, {"kappa", rec.kappa}, {"flame", ok}};
    if (rec.witness) row["witness"] = system_to_json(g, *rec.witness);
    rows.push_back(row);
  }
  bool ok = report.is_flame();
  if (o.strict_quasi) {
    const bool quasi = is_quasi_flame(g, true);
    out << "quasi-flame (all subsets): " << yes_no(quasi) << "\n";
    ok = ok && quasi;
  }
  out << "flame: " << yes_no(report.is_flame()) << "\n";
  emit_json(o, {{"is_flame", report.is_flame()}, {"vertices", rows}});
  return ok ? kOk : kPropertyViolated;
}

int cmd_check_large(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  if (o.sub.empty()) throw UsageError("check-large needs --sub PATH");
  LoadResult sub_doc = load_file(o.sub, o);
  for (const std::string& w : sub_doc.warnings) err << "warning: " << w << "\n";
  const RootedDigraph& d = l.graph;
  // Re-index the subdigraph onto the larger vertex table.
  const RootedDigraph& raw = sub_doc.graph;
  if (raw.name(raw.root()) != d.name(d.root())) throw UsageError("subdigraph has a different root");
  std::vector<Edge> edges;
  for (const Edge& e : raw.edges()) {
    auto t = d.find(raw.name(e.tail));
    auto h = d.find(raw.name(e.head));
    if (!t || !h || !d.has_edge(*t, *h)) throw UsageError("subdigraph edge " + describe(raw, e) + " is not in the digraph");
    edges.push_back({*t, *h});
  }
  for (Vertex v = 0; v < raw.vertex_count(); ++v) {
    if (!d.find(raw.name(v))) throw UsageError("subdigraph vertex " + raw.name(v) + " is not in the digraph");
  }
  RootedDigraph sub = d.spanning(edges);
  LargenessVerdict verdict = largeness_check(sub, d, true);
  nlohmann::json doc = {{"large", verdict.large}};
  if (verdict.large) {
    nlohmann::json certs = nlohmann::json::array();
    for (const MengerCertificate& c : verdict.certificates) certs.push_back(certificate_to_json(d, c));
    doc["certificates"] = certs;
    out << "large: yes\n";
  } else {
    doc["violation"] = {d.name(verdict.violation->tail), d.name(verdict.violation->head)};
    out << "large: no; edge " << describe(d, *verdict.violation) << " leaves the largest bubble of its head\n";
  }
  emit_json(o, doc);
  return verdict.large ? kOk : kPropertyViolated;
}

int cmd_bubble(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  const RootedDigraph& g = l.graph;
  const Vertex v = parse_target(g, o);
  if (!o.set.empty()) {
    std::vector<Vertex> members;
    for (const std::string& name : split_list(o.set)) members.push_back(g.at(name));
    if (std::find(members.begin(), members.end(), g.root()) != members.end()) throw UsageError("--set must avoid the root");
    if (std::find(members.begin(), members.end(), v) == members.end()) throw UsageError("--set must contain the target");
    auto outcome = is_bubble(g, v, members);
    if (auto* b = std::get_if<Bubble>(&outcome)) {
      out << "bubble: yes; entrance {" << describe_set(g, b->entrance) << "}\n";
      emit_json(o, bubble_to_json(g, *b));
      return kOk;
    }
    const auto& refute = std::get<BubbleRefutation>(outcome);
    out << "bubble: no; entrance {" << describe_set(g, refute.entrance) << "} cut by {" << describe_set(g, refute.cut) << "}\n";
    emit_json(o, {{"bubble", false},
                  {"entrance", path_to_json(g, refute.entrance)},
                  {"cut", path_to_json(g, refute.cut)}});
    return kPropertyViolated;
  }
  MaxBubble mb = max_bubble(g, v);
  out << "largest bubble of " << g.name(v) << ": {" << describe_set(g, mb.bubble.vertices) << "}\n";
  out << "entrance in D-rv: {" << describe_set(g, mb.certificate.separation.vertices) << "}\n";
  emit_json(o, {{"bubble", bubble_to_json(g, mb.bubble)}, {"certificate", certificate_to_json(g, mb.certificate)}});
  return kOk;
}

int cmd_separation(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  const RootedDigraph& g = l.graph;
  const Vertex v = parse_target(g, o);
  MengerCertificate cert = max_system(g, v);
  out << "kappa(" << g.name(g.root()) << ", " << g.name(v) << ") = " << cert.system.size() << "\n";
  for (const Path& p : cert.system.paths) out << "  " << describe(g, p) << "\n";
  out << "separation {" << describe_set(g, cert.separation.vertices) << "}"
      << (cert.separation.uses_root_edge ? " + edge " + g.name(g.root()) + "->" + g.name(v) : "") << "\n";
  emit_json(o, certificate_to_json(g, cert));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_input(o, err);
  if (o.cert.empty()) throw UsageError("verify-cert needs --cert PATH");
  nlohmann::json bundle = read_json(o.cert);
  if (auto failure = verify_bundle(l.graph, bundle)) {
    out << "certificate rejected: " << *failure << "\n";
    return kCertificateRejected;
  }
  const bool prefix = bundle.value("prefix_relative", false);
  out << "certificate verified" << (prefix ? " (prefix-relative)" : "") << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flames, largeness and Menger certificates for finite rooted digraphs"};
  app.name("flamectl");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "digraph JSON file");
    sub->add_option("--gen", o.gen,
                    "generator spec: figure6:k=K | random:n=N,m=M,seed=S | random:n=N,p=P,seed=S | "
                    "layered:widths=A-B-C,seed=S");
    sub->add_option("--root", o.root, "root name, overriding the file's");
    sub->add_option("--seed", o.seed, "seed for generator specs that lack one");
    sub->add_option("--out", o.out_path, "write the machine-readable result here");
    sub->add_option("--dot", o.dot_path, "write a Graphviz rendering here");
    sub->add_flag("--normalize-root", o.normalize_root, "drop edges into the root with a warning");
    sub->add_flag("--exclude-omega-edges", o.exclude_omega, "figure6: no edges out of vw into the v<i>.<j>");
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* analyze = add("analyze", "per-vertex connectivity, flame status and largest bubbles", cmd_analyze);
  analyze->add_flag("--strict-quasi", o.strict_quasi, "check every subset of every in-edge set");
  analyze->add_option("--oracle-bound", o.oracle_bound, "cross-check figure6 memberships by enumeration up to this many vertices");
  analyze->footer(std::string(kFigure6Note) + "\n" + kCountableNote);
  add("lovasz", "trim to a flame keeping every kappa(r, v)", cmd_lovasz)
      ->add_option("--order", o.order, "vertex order v1,v2,...");
  auto* construct = add("construct", "build a large flame with per-vertex certificates", cmd_construct);
  construct->add_option("--order", o.order, "vertex order v1,v2,...");
  construct->add_option("--prefix", o.prefix, "stream the vertices in order and construct on the first K only");
  construct->footer(kCountableNote);
  add("check-flame", "is every in-edge set realisable", cmd_check_flame)
      ->add_flag("--strict-quasi", o.strict_quasi, "also enumerate every subset of every in-edge set");
  add("check-large", "is --sub large inside the input", cmd_check_large)->add_option("--sub", o.sub, "subdigraph JSON");
  auto* bubble = add("bubble", "largest bubble of --target, or test --set", cmd_bubble);
  bubble->add_option("--target", o.target, "target vertex");
  bubble->add_option("--set", o.set, "candidate bubble a,b,c");
  add("separation", "maximum system and nearest separation for --target", cmd_separation)
      ->add_option("--target", o.target, "target vertex");
  add("verify-cert", "re-check a construct bundle against its input", cmd_verify)->add_option("--cert", o.cert, "bundle JSON");
  add("gen", "write a generated digraph", cmd_gen)->footer(kFigure6Note);
  add("export", "write the digraph as JSON and/or DOT", cmd_export);

  std::vector<const char*> argv{"flamectl"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      return fn(o, out, err);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const DigraphError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const LemmaViolation& e) {
      err << "internal check failed (" << e.lemma() << "): " << e.what() << "\n";
      return kPropertyViolated;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kPropertyViolated;
    }
  }
  return kInputError;
}

}  // namespace flame::cli
