// cylrig: rigidity verdicts, placements and construction scripts for graphs
// in cylindrical and conical normed spaces.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cylrig/characterize.hpp"
#include "cylrig/error.hpp"
#include "cylrig/graph_ops.hpp"
#include "cylrig/json_io.hpp"
#include "cylrig/placement_synth.hpp"

using namespace cylrig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConflict = 2;
constexpr int kExitPrecondition = 3;

struct Config {
  std::string space = "cyl-euclid";
  std::string q = "3/2";
  std::uint64_t seed = 0;
  int retries = 3;
  double tol = kRankTolerance;
  int jobs = 1;
  std::string catalog;
  std::string graph6;
  std::string input;
  std::string out;
  bool pretty = false;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> load_graphs(const Config& c) {
  int sources = !c.catalog.empty() + !c.graph6.empty() + !c.input.empty();
  if (sources != 1) throw CLI::ValidationError("input", "give exactly one of --catalog, --graph6 or an input argument");
  if (!c.catalog.empty()) return {named_graph(c.catalog)};
  if (!c.graph6.empty()) return parse_graph6_lines(read_file(c.graph6));
  auto names = catalog_names();
  if (std::find(names.begin(), names.end(), c.input) != names.end() || c.input.rfind("K", 0) == 0) {
    try {
      return {named_graph(c.input)};
    } catch (const CatalogError&) {
    }
  }
  return parse_graph6_lines(read_file(c.input));
}

class Output {
 public:
  explicit Output(const Config& c) : pretty_(c.pretty) {
    if (!c.out.empty()) {
      file_.open(c.out);
      if (!file_) throw IoError("cannot write " + c.out);
    }
  }
  void write(const Json& j) {
    std::ostream& os = file_.is_open() ? file_ : std::cout;
    os << (pretty_ ? j.dump(2) : j.dump()) << '\n';
  }

 private:
  bool pretty_;
  std::ofstream file_;
};

void add_common(CLI::App* app, Config& c) {
  app->add_option("input", c.input, "Catalog name or graph6 file");
  app->add_option("--catalog", c.catalog, "Named graph (K1..K8, K6_minus_e, K5_glue_K3_K5, K7_minus_K3, FIG2_OCTA_RING)");
  app->add_option("--graph6", c.graph6, "File with one graph6 line per graph ('-' for stdin)");
  app->add_option("--space", c.space, "cyl-euclid | cyl-lq | cone-euclid | cyl4")
      ->check(CLI::IsMember({"cyl-euclid", "cyl-lq", "cone-euclid", "cyl4"}));
  app->add_option("--q", c.q, "Exponent of the lq plane for cyl-lq");
  app->add_option("--seed", c.seed, "Seed for random placements");
  app->add_option("--retries", c.retries, "Reseeds before a rank deficiency is reported")->check(CLI::NonNegativeNumber);
  app->add_option("--tol", c.tol, "Relative singular-value threshold")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "Write output here instead of stdout");
  app->add_flag("--pretty", c.pretty, "Indented JSON");
}

Space config_space(const Config& c, SpaceKind kind) { return space_for(kind, parse_rational(c.q)); }

int cmd_analyze(const Config& c, bool cross_check) {
  const SpaceKind kind = parse_space_kind(c.space);
  const Space space = config_space(c, kind);
  std::vector<Graph> graphs = load_graphs(c);
  std::vector<Json> results(graphs.size());
  std::vector<char> conflict(graphs.size(), 0);
  auto work = [&](std::size_t i) {
    const Graph& g = graphs[i];
    RigidityReport rep = classify(g, kind);
    rep.space = space.str();
    if (cross_check) {
      RandomizedResult num = numeric_cross_check(g, kind, space, rep, c.seed, c.retries, c.tol);
      rep.notes.push_back("numeric rank " + std::to_string(num.rank) + " after " + std::to_string(num.attempts) +
                          " attempt(s)");
    }
    conflict[i] = !rep.conflicts.empty();
    results[i] = report_json(g, rep, compute_screens(g, kind), c.seed);
  };
  const int jobs = std::max(1, c.jobs);
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < graphs.size(); i = next++) work(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Output out(c);
  for (const auto& j : results) out.write(j);
  return std::any_of(conflict.begin(), conflict.end(), [](char x) { return x != 0; }) ? kExitConflict : kExitOk;
}

EdgeSet parse_edge_list(const std::string& text) {
  EdgeSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) s.push_back(std::stoi(item));
  std::sort(s.begin(), s.end());
  return s;
}

int cmd_placement(const Config& c, const std::string& forest_mode, const std::string& matrix_path, bool jitter) {
  const SpaceKind kind = parse_space_kind(c.space);
  if (kind != SpaceKind::CylEuclid && kind != SpaceKind::CylGeneric)
    throw PreconditionError("placement needs a cylinder over a plane (cyl-euclid or cyl-lq)");
  const Space space = config_space(c, kind);
  const Space& inner = space.inner();
  Output out(c);
  for (const Graph& g : load_graphs(c)) {
    EdgeSet forest;
    std::optional<Decomposition> cert;
    if (forest_mode == "certificate") {
      RigidityReport rep = classify(g, kind);
      if (kind == SpaceKind::CylEuclid && rep.decomposition) cert = rep.decomposition;
      if (kind == SpaceKind::CylGeneric && rep.decomposition) cert = rep.decomposition;
      if (!cert) throw PreconditionError("no certificate available");
      forest = cert->trees.at(0);
    } else if (forest_mode == "spanning") {
      forest = spanning_forest(g);
    } else {
      forest = parse_edge_list(forest_mode);
    }
    Placement p;
    std::optional<RigidityReport> rep;
    if (cert) {
      CertifiedPlacement cp = realise_decomposition(g, *cert, inner, c.seed);
      p = cp.placement;
      rep = cp.report;
    } else {
      p = key_lemma_placement(g, forest, inner);
      if (jitter) {
        std::mt19937_64 rng(c.seed);
        p = perturb_placement(g, p, forest, space, rng);
      }
      rep = infinitesimal_rigidity(g, p, space, c.tol);
    }
    EdgeColouring col = monochrome_labelling(g, p, space);
    Json j;
    j["graph6"] = emit_graph6(g);
    j["space"] = space.str();
    j["forest"] = forest;
    j["placement"] = to_json(p);
    j["colouring"] = {{"green", col.green()}, {"blue", col.blue()}};
    j["verified"] = verify_colouring(g, p, forest, space);
    j["rank"] = rep->rank;
    j["rank_target"] = rep->rank_target;
    j["independent"] = rep->independent;
    j["rigid"] = rep->rigid;
    j["method"] = to_string(rep->method);
    j["seed"] = c.seed;
    out.write(j);
    if (!matrix_path.empty()) {
      std::ofstream m(matrix_path);
      if (!m) throw IoError("cannot write " + matrix_path);
      m << rigidity_matrix(g, p, space).to_csv();
    }
  }
  return kExitOk;
}

int cmd_ops(const Config& c, const std::string& script_path) {
  const SpaceKind kind = parse_space_kind(c.space);
  std::vector<OpSpec> script = script_path.empty() ? std::vector<OpSpec>{} : parse_op_script(read_file(script_path));
  std::vector<Graph> graphs = load_graphs(c);
  if (graphs.size() != 1) throw PreconditionError("ops takes a single input graph");
  Graph g = graphs.front();
  Output out(c);
  auto emit = [&](std::size_t step, const std::optional<OpSpec>& op) {
    RigidityReport rep = classify(g, kind);
    Json j;
    j["step"] = step;
    j["op"] = op ? Json::parse(op_to_json(*op)) : Json(nullptr);
    j["graph6"] = emit_graph6(g);
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    j["independent"] = rep.independent;
    j["rigid"] = rep.rigid;
    j["minimally_rigid"] = rep.minimally_rigid;
    out.write(j);
  };
  emit(0, std::nullopt);
  for (std::size_t i = 0; i < script.size(); ++i) {
    OpSpec op = script[i];
    try {
      if (op.random) {
        std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        auto drawn = random_op(g, op.kind, op.d, rng);
        if (!drawn) throw PreconditionError("no valid parameters on the current graph");
        op = *drawn;
      }
      g = apply_op(g, op);
    } catch (const PreconditionError& e) {
      throw PreconditionError("step " + std::to_string(i + 1) + ": " + e.what());
    }
    emit(i + 1, op);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity of graphs in cylindrical and conical normed spaces"};
  app.require_subcommand(1);
  Config cfg;

  auto* analyze = app.add_subcommand("analyze", "Classify graphs and emit one JSON report per graph");
  add_common(analyze, cfg);
  analyze->add_option("--jobs", cfg.jobs, "Worker threads for batch input")->check(CLI::PositiveNumber);
  bool no_check = false;
  analyze->add_flag("--no-check", no_check, "Skip the randomized rank cross-check");

  auto* placement = app.add_subcommand("placement", "Build a placement with prescribed cone colouring");
  add_common(placement, cfg);
  std::string forest_mode = "certificate";
  std::string matrix_path;
  bool jitter = false;
  placement->add_option("--forest", forest_mode,
                        "'certificate' (tree of the decomposition), 'spanning', or a comma-separated edge id list");
  placement->add_option("--matrix", matrix_path, "Write the rigidity matrix as CSV");
  placement->add_flag("--jitter", jitter, "Perturb the placement inside its colouring");

  auto* ops = app.add_subcommand("ops", "Apply an operation script and report every step");
  add_common(ops, cfg);
  std::string script_path;
  ops->add_option("--script", script_path, "JSON list of operations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, !no_check);
    if (*placement) return cmd_placement(cfg, forest_mode, matrix_path, jitter);
    if (*ops) return cmd_ops(cfg, script_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "cylrig: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "cylrig: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "cylrig: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "cylrig: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CatalogError& e) {
    std::cerr << "cylrig: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "cylrig: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitUsage;
}
