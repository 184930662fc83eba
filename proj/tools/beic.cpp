// beic: binomial edge ideals of clutters from the command line.
//
// Exit codes: 0 success, 1 internal disagreement (oracle cross-check),
// 2 input/parse error, 3 complexity guard, 4 glue vertex invalid,
// 5 apex collision, 6 random edge budget exhausted.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beic/clique.hpp"
#include "beic/clutter.hpp"
#include "beic/engine.hpp"
#include "beic/errors.hpp"
#include "beic/io.hpp"
#include "beic/oracle.hpp"
#include "beic/prime.hpp"
#include "beic/random.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitGlueVertex = 4;
constexpr int kExitApexCollision = 5;
constexpr int kExitEdgeBudget = 6;

constexpr std::size_t kDisplayCap = 64;

struct GlobalOpts {
  bool json = false;
  unsigned threads = 1;
  std::size_t max_enum_vertices = 24;
  bool oracle = false;
  std::uint64_t seed = 0;
};

struct CliError {
  int code;
  std::string message;
};

int map_error(const beic::Error& e) {
  switch (e.kind()) {
    case beic::ErrorKind::ComplexityGuard:
      return kExitGuard;
    case beic::ErrorKind::LabelCollision:
      return kExitApexCollision;
    case beic::ErrorKind::EdgeBudgetExhausted:
      return kExitEdgeBudget;
    default:
      return kExitParse;
  }
}

beic::Clutter load_clutter(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitParse, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return beic::clutter_from_json(buf.str());
}

beic::EnumOptions enum_options(const GlobalOpts& g) {
  return beic::EnumOptions{g.max_enum_vertices, g.threads};
}

std::string braces(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

void cross_check_with_oracle(const beic::Clutter& c,
                             const std::vector<beic::CutSetRecord>& records) {
  const auto truth = beic::oracle::minimal_primes(c);
  bool agree = truth.size() == records.size();
  for (std::size_t i = 0; agree && i < truth.size(); ++i) {
    agree = truth[i].t == records[i].t && truth[i].height == records[i].height;
  }
  if (!agree) {
    throw CliError{kExitDisagreement,
                   "oracle cross-check FAILED: criterion lists " +
                       std::to_string(records.size()) + " minimal primes, oracle " +
                       std::to_string(truth.size())};
  }
}

void print_certificate(std::ostream& os, const std::vector<beic::CertEntry>& entries,
                       int depth) {
  for (const auto& e : entries) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "- " << e.rule;
    if (!e.note.empty()) os << " (" << e.note << ")";
    os << "\n";
    print_certificate(os, e.children, depth + 1);
  }
}

struct Analysis {
  beic::Clutter clutter;
  std::vector<std::pair<beic::VertexId, beic::VertexId>> graph_edges;
  std::vector<beic::Facet> facets;
  beic::VertexSet free_verts;
  beic::VertexSet cut_pts;
  std::vector<beic::CutSetRecord> records;
  std::map<int, int> height_histogram;
  int dim = 0;
  bool unmixed = false;
  std::optional<beic::ConeApex> apex;
  bool literal_cone = false;
  beic::Verdict verdict;
};

Analysis analyze(const beic::Clutter& c, const GlobalOpts& g) {
  Analysis a;
  a.clutter = c;
  a.graph_edges = beic::associated_graph(c).edges();
  a.facets = beic::maximal_cliques(c);
  a.free_verts = beic::free_vertices(c);
  a.cut_pts = beic::cut_points(c);
  a.records = beic::cut_sets(c, enum_options(g));
  for (const auto& rec : a.records) ++a.height_histogram[rec.height];
  a.dim = 0;
  for (const auto& rec : a.records) a.dim = std::max(a.dim, rec.dim);
  a.unmixed = beic::is_unmixed(c, enum_options(g));
  a.apex = beic::graph_cone_apex(c);
  if (a.apex) {
    a.literal_cone = beic::is_literal_cone(c, c.require_vertex(a.apex->vertex));
  }
  a.verdict = beic::cm_verdict(c, {enum_options(g), std::nullopt});
  if (g.oracle) cross_check_with_oracle(c, a.records);
  return a;
}

ordered_json clutter_json(const beic::Clutter& c) {
  ordered_json j;
  j["vertices"] = c.labels();
  j["edges"] = c.edge_labels();
  return j;
}

ordered_json analysis_json(const Analysis& a) {
  const auto& c = a.clutter;
  ordered_json j;
  j["schema"] = 1;
  j["clutter"] = clutter_json(c);
  j["graph_edges"] = ordered_json::array();
  for (auto [u, v] : a.graph_edges) {
    j["graph_edges"].push_back({c.label(u), c.label(v)});
  }
  j["facets"] = ordered_json::array();
  for (const auto& f : a.facets) j["facets"].push_back(c.labels_of(f.members));
  j["free_vertices"] = c.labels_of(a.free_verts);
  j["cut_points"] = c.labels_of(a.cut_pts);
  j["cut_set_count"] = a.records.size();
  j["cut_sets"] = ordered_json::array();
  for (std::size_t i = 0; i < a.records.size() && i < kDisplayCap; ++i) {
    const auto& rec = a.records[i];
    ordered_json r;
    r["t"] = c.labels_of(rec.t);
    r["components"] = rec.component_count;
    r["height"] = rec.height;
    r["dim"] = rec.dim;
    j["cut_sets"].push_back(std::move(r));
  }
  j["cut_sets_truncated"] = a.records.size() > kDisplayCap;
  j["minimal_prime_count"] = a.records.size();
  j["height_histogram"] = ordered_json::object();
  for (const auto& [h, count] : a.height_histogram) {
    j["height_histogram"][std::to_string(h)] = count;
  }
  j["dim"] = a.dim;
  j["unmixed"] = a.unmixed;
  if (a.apex) {
    j["graph_cone"] = {{"apex", a.apex->vertex}, {"literal_cone", a.literal_cone}};
  } else {
    j["graph_cone"] = nullptr;
  }
  j["verdict"] = ordered_json::parse(beic::verdict_to_json(a.verdict));
  return j;
}

void print_analysis_text(std::ostream& os, const Analysis& a) {
  const auto& c = a.clutter;
  os << "vertices (" << c.vertex_count() << "):";
  for (const auto& name : c.labels()) os << " " << name;
  os << "\n";
  os << "edges (" << c.edge_count() << "):";
  for (const auto& e : c.edges()) os << " " << braces(c.labels_of(e));
  os << "\n";
  os << "graph edges (" << a.graph_edges.size() << "):";
  for (auto [u, v] : a.graph_edges) os << " {" << c.label(u) << "," << c.label(v) << "}";
  os << "\n";
  os << "facets (" << a.facets.size() << "):";
  for (const auto& f : a.facets) os << " " << braces(c.labels_of(f.members));
  os << "\n";
  os << "free vertices: " << braces(c.labels_of(a.free_verts)) << "\n";
  os << "cut points: " << braces(c.labels_of(a.cut_pts)) << "\n";
  if (a.apex) {
    os << "graph cone: apex " << a.apex->vertex << " (literal cone: "
       << (a.literal_cone ? "yes" : "no") << ")\n";
  } else {
    os << "graph cone: none\n";
  }
  os << "cut sets (" << a.records.size() << "):\n";
  for (std::size_t i = 0; i < a.records.size() && i < kDisplayCap; ++i) {
    const auto& rec = a.records[i];
    os << "  " << braces(c.labels_of(rec.t)) << " c=" << rec.component_count
       << " height=" << rec.height << " dim=" << rec.dim << "\n";
  }
  if (a.records.size() > kDisplayCap) {
    os << "  ... and " << (a.records.size() - kDisplayCap) << " more\n";
  }
  os << "minimal primes: " << a.records.size() << "\n";
  os << "height histogram:";
  for (const auto& [h, count] : a.height_histogram) os << " " << h << "x" << count;
  os << "\n";
  os << "dim: " << a.dim << "\n";
  os << "unmixed: " << (a.unmixed ? "true" : "false") << "\n";
  os << "status: " << beic::to_string(a.verdict.status) << "\n";
  if (a.verdict.depth) {
    os << "depth: " << *a.verdict.depth << "\n";
  } else {
    os << "depth: unknown\n";
  }
  os << "certificate:\n";
  print_certificate(os, a.verdict.certificate, 1);
}

int run_analyze(const std::string& path, const GlobalOpts& g) {
  const auto a = analyze(load_clutter(path), g);
  std::ostringstream out;
  if (g.json) {
    out << analysis_json(a).dump(2) << "\n";
  } else {
    print_analysis_text(out, a);
  }
  std::cout << out.str();
  return kExitOk;
}

int run_minimal_primes(const std::string& path, const GlobalOpts& g) {
  const auto c = load_clutter(path);
  const auto primes = beic::minimal_primes(c, enum_options(g));
  if (g.oracle) {
    std::vector<beic::CutSetRecord> records;
    for (const auto& p : primes) {
      records.push_back({p.t, 0, p.height, 0});
    }
    cross_check_with_oracle(c, records);
  }
  std::ostringstream out;
  if (g.json) {
    ordered_json j;
    j["schema"] = 1;
    j["minimal_primes"] = ordered_json::array();
    for (const auto& p : primes) {
      ordered_json r;
      r["t"] = c.labels_of(p.t);
      r["parts"] = ordered_json::array();
      for (const auto& part : p.parts) r["parts"].push_back(c.labels_of(part));
      r["height"] = p.height;
      j["minimal_primes"].push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : primes) {
      out << braces(c.labels_of(p.t)) << " height=" << p.height << " parts:";
      for (const auto& part : p.parts) out << " " << braces(c.labels_of(part));
      out << "\n";
    }
  }
  std::cout << out.str();
  return kExitOk;
}

int run_unmixed(const std::string& path, const GlobalOpts& g) {
  const auto c = load_clutter(path);
  const bool unmixed = beic::is_unmixed(c, enum_options(g));
  if (g.oracle) cross_check_with_oracle(c, beic::cut_sets(c, enum_options(g)));
  if (g.json) {
    ordered_json j;
    j["schema"] = 1;
    j["unmixed"] = unmixed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "unmixed: " << (unmixed ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_dimension(const std::string& path, const GlobalOpts& g) {
  const auto c = load_clutter(path);
  const int dim = beic::dim_quotient(c, enum_options(g));
  if (g.oracle) cross_check_with_oracle(c, beic::cut_sets(c, enum_options(g)));
  if (g.json) {
    ordered_json j;
    j["schema"] = 1;
    j["dim"] = dim;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dim: " << dim << "\n";
  }
  return kExitOk;
}

int run_cm(const std::string& path, const GlobalOpts& g) {
  const auto c = load_clutter(path);
  const auto verdict = beic::cm_verdict(c, {enum_options(g), std::nullopt});
  if (g.oracle) cross_check_with_oracle(c, beic::cut_sets(c, enum_options(g)));
  if (g.json) {
    ordered_json j;
    j["schema"] = 1;
    j["verdict"] = ordered_json::parse(beic::verdict_to_json(verdict));
    std::cout << j.dump(2) << "\n";
  } else {
    std::ostringstream out;
    out << "status: " << beic::to_string(verdict.status) << "\n";
    out << "unmixed: " << (verdict.unmixed ? "true" : "false") << "\n";
    out << "dim: " << verdict.dim << "\n";
    if (verdict.depth) {
      out << "depth: " << *verdict.depth << "\n";
    } else {
      out << "depth: unknown\n";
    }
    out << "certificate:\n";
    print_certificate(out, verdict.certificate, 1);
    std::cout << out.str();
  }
  return kExitOk;
}

int run_cone(const std::string& path, const std::string& apex) {
  const auto base = load_clutter(path);
  const auto result = beic::cone(apex, base);
  std::cout << beic::clutter_to_json(result);
  return kExitOk;
}

int run_glue(const std::string& path1, const std::string& path2,
             const std::string& at) {
  const auto a = load_clutter(path1);
  const auto b = load_clutter(path2);
  std::vector<std::string> shared;
  for (const auto& name : a.labels()) {
    if (b.vertex(name)) shared.push_back(name);
  }
  if (shared.size() != 1 || shared.front() != at) {
    throw CliError{kExitGlueVertex,
                   "the inputs must share exactly the glue vertex '" + at + "'"};
  }
  const auto va = a.vertex(at);
  const auto vb = b.vertex(at);
  if (!va || !vb) {
    throw CliError{kExitGlueVertex, "glue vertex '" + at + "' missing from an input"};
  }
  if (!beic::is_free(a, *va) || !beic::is_free(b, *vb)) {
    throw CliError{kExitGlueVertex,
                   "glue vertex '" + at + "' is not free on both sides"};
  }
  std::cout << beic::clutter_to_json(beic::clutter_union(a, b));
  return kExitOk;
}

int run_random(std::size_t n, std::size_t m, std::size_t arity,
               const GlobalOpts& g) {
  const auto c = beic::random_clutter(g.seed, n, m, arity);
  std::cout << beic::clutter_to_json(c);
  return kExitOk;
}

int run_export(const std::string& path) {
  std::cout << beic::generators_text(load_clutter(path));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideals of clutters: minimal primes, dimension, "
               "unmixedness, and Cohen-Macaulay verdicts"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_option("--threads", g.threads, "worker threads for subset enumeration")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--max-enum-vertices", g.max_enum_vertices,
                 "vertex budget for exhaustive enumeration (max 28)")
      ->check(CLI::Range(std::size_t{0}, std::size_t{28}));
  app.add_flag("--oracle", g.oracle,
               "cross-check minimal primes against the brute-force oracle");
  app.add_option("--seed", g.seed, "seed for the random subcommand");

  std::string path, path2, apex, at;
  std::size_t rnd_n = 0, rnd_m = 0, rnd_arity = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "full structural report");
  analyze_cmd->add_option("file", path)->required();
  auto* primes_cmd = app.add_subcommand("minimal-primes", "list minimal primes");
  primes_cmd->add_option("file", path)->required();
  auto* unmixed_cmd = app.add_subcommand("unmixed", "decide unmixedness");
  unmixed_cmd->add_option("file", path)->required();
  auto* dim_cmd = app.add_subcommand("dimension", "Krull dimension of the quotient");
  dim_cmd->add_option("file", path)->required();
  auto* cm_cmd = app.add_subcommand("cm", "Cohen-Macaulay verdict");
  cm_cmd->add_option("file", path)->required();
  auto* cone_cmd = app.add_subcommand("cone", "cone over a clutter");
  cone_cmd->add_option("file", path)->required();
  cone_cmd->add_option("--apex", apex, "fresh apex label")->required();
  auto* glue_cmd = app.add_subcommand("glue", "glue two clutters at a free vertex");
  glue_cmd->add_option("file1", path)->required();
  glue_cmd->add_option("file2", path2)->required();
  glue_cmd->add_option("--at", at, "shared glue vertex")->required();
  auto* random_cmd = app.add_subcommand("random", "seeded random clutter");
  random_cmd->add_option("--vertices", rnd_n)->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--edges", rnd_m)->required();
  random_cmd->add_option("--max-arity", rnd_arity)
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  auto* export_cmd =
      app.add_subcommand("export-generators", "binomial generators as text");
  export_cmd->add_option("file", path)->required();

  for (auto* sub : {analyze_cmd, primes_cmd, unmixed_cmd, dim_cmd, cm_cmd,
                    cone_cmd, glue_cmd, random_cmd, export_cmd}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(path, g);
    if (*primes_cmd) return run_minimal_primes(path, g);
    if (*unmixed_cmd) return run_unmixed(path, g);
    if (*dim_cmd) return run_dimension(path, g);
    if (*cm_cmd) return run_cm(path, g);
    if (*cone_cmd) return run_cone(path, apex);
    if (*glue_cmd) return run_glue(path, path2, at);
    if (*random_cmd) return run_random(rnd_n, rnd_m, rnd_arity, g);
    if (*export_cmd) return run_export(path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const beic::Error& e) {
    std::cerr << "error (" << beic::to_string(e.kind()) << "): " << e.what();
    if (e.kind() == beic::ErrorKind::ComplexityGuard) {
      std::cerr << "; raise --max-enum-vertices to extend the budget";
    }
    std::cerr << "\n";
    return map_error(e);
  }
  return kExitOk;
}
