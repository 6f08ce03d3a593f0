// rgbc: command-line driver for the random geometric betweenness toolkit.
// Every subcommand is deterministic given its flags and seed; numeric output
// is printed with 17 significant digits so CSV files round-trip exactly.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rgbc/analytic.hpp"
#include "rgbc/apps.hpp"
#include "rgbc/centrality.hpp"
#include "rgbc/error.hpp"
#include "rgbc/experiment.hpp"
#include "rgbc/geometry.hpp"
#include "rgbc/io.hpp"
#include "rgbc/quadrature.hpp"
#include "rgbc/rgg.hpp"
#include "rgbc/version.hpp"

namespace {

using nlohmann::json;
using namespace rgbc;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Point parse_point(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2)
    fail(Errc::ConfigError, "expected 'x,y', got '" + s + "'");
  return {parse_double(parts[0]), parse_double(parts[1])};
}

std::vector<CircleHole> parse_holes(const std::string& s) {
  std::vector<CircleHole> holes;
  if (s.empty()) return holes;
  for (const std::string& part : split(s, ';')) {
    const auto nums = split(part, ',');
    if (nums.size() != 3)
      fail(Errc::ConfigError, "expected 'cx,cy,r' hole triple, got '" + part + "'");
    holes.push_back({{parse_double(nums[0]), parse_double(nums[1])},
                     parse_double(nums[2])});
  }
  return holes;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> vals;
  for (const std::string& part : split(s, ',')) vals.push_back(parse_double(part));
  return vals;
}

struct DomainOptions {
  std::string domain = "disk";
  double radius = 1.0;
  double side = 1.0;
  std::string center = "0,0";
  std::string holes;  // "cx,cy,r;cx,cy,r"; empty = defaults for holed-square
};

void add_domain_options(CLI::App* cmd, DomainOptions& o) {
  cmd->add_option("--domain", o.domain,
                  "Domain shape: disk|square|triangle|holed-square")
      ->default_val("disk");
  cmd->add_option("--radius", o.radius, "Disk radius")->default_val(1.0);
  cmd->add_option("--side", o.side, "Square side / triangle leg length")
      ->default_val(1.0);
  cmd->add_option("--center", o.center, "Domain center as 'x,y'")
      ->default_val("0,0");
  cmd->add_option("--holes", o.holes,
                  "Holes as 'cx,cy,r;...' (holed-square only)");
}

Domain make_domain(const DomainOptions& o) {
  const Point c = parse_point(o.center);
  if (o.domain == "disk") return Domain::disk(c, o.radius);
  if (o.domain == "square") return Domain::square(c, o.side);
  if (o.domain == "triangle")
    return Domain::polygon(
        {c, {c.x + o.side, c.y}, {c.x, c.y + o.side}});
  if (o.domain == "holed-square") {
    std::vector<CircleHole> holes = parse_holes(o.holes);
    if (holes.empty()) {
      holes = {{{c.x - 0.25 * o.side, c.y}, 0.15 * o.side},
               {{c.x + 0.25 * o.side, c.y}, 0.15 * o.side}};
    }
    return Domain::square(c, o.side).with_holes(std::move(holes));
  }
  fail(Errc::ConfigError, "unknown domain '" + o.domain +
                              "' (expected disk|square|triangle|holed-square)");
}

json domain_json(const DomainOptions& o) {
  json j{{"domain", o.domain}, {"center", o.center}};
  if (o.domain == "disk") j["radius"] = o.radius;
  else j["side"] = o.side;
  if (o.domain == "holed-square") j["holes"] = o.holes;
  return j;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void write_manifest(const std::string& path, const std::string& command,
                    json config, json extras, double wall_seconds) {
  if (path.empty()) return;
  json j{{"command", command},
         {"version", kVersion},
         {"config", std::move(config)},
         {"wall_time_s", wall_seconds}};
  for (auto& [key, value] : extras.items()) j[key] = std::move(value);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ConfigError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

Graph load_graph(const std::string& points_path, const std::string& edges_path) {
  return Graph(read_points_csv(points_path), read_edges_csv(edges_path));
}

// ---------------------------------------------------------------------------
// subcommand option blocks

struct SampleOpts {
  DomainOptions dom;
  double rho = 50.0;
  std::int64_t count = -1;  // -1: use round(rho * area)
  std::uint64_t seed = 0;
  std::string out = "points.csv";
  std::string manifest;
};

struct GraphOpts {
  std::string points;
  std::string model = "soft";
  std::string beta_mode = "fixed";
  double beta = 1.0;
  bool beta_set = false;
  double eta = 2.0;
  double r0 = 0.1;
  bool r0_set = false;
  std::uint64_t seed = 0;
  std::string out = "edges.csv";
  std::string manifest = "run.json";
};

struct BcOpts {
  std::string points;
  std::string edges;
  int workers = 1;
  std::string out = "betweenness.csv";
  std::string manifest;
};

struct AnalyticOpts {
  double radius = 1.0;
  double eps = -1.0;
  bool eps_set = false;
  double eps_step = 0.001;
  std::string out = "analytic.csv";
  std::string manifest;
};

struct FieldOpts {
  DomainOptions dom;
  double grid_step = 0.05;
  int quad_points = 8192;
  int workers = 1;
  std::string out = "field.csv";
  std::string manifest;
};

struct ProfileOpts {
  DomainOptions dom;
  std::string config;
  double rho = 500.0;
  int realizations = 500;
  int bins = 50;
  double eta = 2.0;
  std::string beta_mode = "threshold";
  double beta = 1.0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::int64_t min_bin_count = 50;
  std::string out_dir = ".";
};

std::uint64_t parse_u64(const std::string& s) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::ConfigError, "not an unsigned integer: '" + s + "'");
  }
}

bool flag_given(const CLI::App* cmd, const std::string& flag) {
  try {
    return cmd->count(flag) > 0;
  } catch (const CLI::Error&) {
    return false;  // the command has no such flag
  }
}

// Applies `key = value` config entries to the experiment options. A value
// set on the command line always wins over the file. `densities` is null for
// commands that run a single density; the key is then accepted and ignored so
// one file can drive both profile and converge.
void apply_experiment_config(const CLI::App* cmd, ProfileOpts& o,
                             std::string* densities) {
  if (o.config.empty()) return;
  for (const auto& [key, value] : read_config_file(o.config)) {
    if (flag_given(cmd, "--" + key)) continue;  // flag overrides file
    if (key == "domain") o.dom.domain = value;
    else if (key == "radius") o.dom.radius = parse_double(value);
    else if (key == "side") o.dom.side = parse_double(value);
    else if (key == "center") o.dom.center = value;
    else if (key == "holes") o.dom.holes = value;
    else if (key == "rho") o.rho = parse_double(value);
    else if (key == "realizations") o.realizations = static_cast<int>(parse_long(value));
    else if (key == "bins") o.bins = static_cast<int>(parse_long(value));
    else if (key == "eta") o.eta = parse_double(value);
    else if (key == "beta-mode") o.beta_mode = value;
    else if (key == "beta") o.beta = parse_double(value);
    else if (key == "seed") o.seed = parse_u64(value);
    else if (key == "workers") o.workers = static_cast<int>(parse_long(value));
    else if (key == "min-bin-count") o.min_bin_count = parse_long(value);
    else if (key == "densities") { if (densities != nullptr) *densities = value; }
    else fail(Errc::ConfigError, o.config + ": unknown key '" + key + "'");
  }
}

struct ConvergeOpts {
  ProfileOpts base;
  std::string densities = "10,50,500";
};

struct BoundaryOpts {
  std::string points;
  std::string edges;
  double radius = 1.0;
  std::string center = "0,0";
  double threshold = 0.1;
  std::string out = "boundary.csv";
  std::string manifest;
};

struct HeadsOpts {
  std::string points;
  std::string edges;
  int k = 5;
  std::string mode = "max";
  std::string out = "heads.csv";
  std::string manifest;
};

// ---------------------------------------------------------------------------

ExperimentConfig make_experiment_config(const ProfileOpts& o) {
  ExperimentConfig cfg;
  cfg.domain = make_domain(o.dom);
  cfg.realizations = o.realizations;
  cfg.bins = o.bins;
  cfg.eta = o.eta;
  if (o.beta_mode == "threshold") {
    cfg.beta_mode = BetaMode::ConnectivityThreshold;
  } else if (o.beta_mode == "fixed") {
    cfg.beta_mode = BetaMode::Fixed;
    cfg.beta_fixed = o.beta;
  } else {
    fail(Errc::ConfigError, "beta-mode must be 'threshold' or 'fixed'");
  }
  cfg.master_seed = o.seed;
  cfg.workers = o.workers;
  cfg.min_bin_count = o.min_bin_count;
  return cfg;
}

json profile_config_json(const ProfileOpts& o) {
  json j = domain_json(o.dom);
  j["realizations"] = o.realizations;
  j["bins"] = o.bins;
  j["eta"] = o.eta;
  j["beta-mode"] = o.beta_mode;
  if (o.beta_mode == "fixed") j["beta"] = o.beta;
  j["seed"] = o.seed;
  j["workers"] = o.workers;
  j["min-bin-count"] = o.min_bin_count;
  return j;
}

void run_sample(const SampleOpts& o) {
  Timer timer;
  const Domain d = make_domain(o.dom);
  const std::int64_t n =
      o.count >= 0 ? o.count : std::llround(o.rho * d.area());
  RngStream rng(o.seed);
  RngStream placement = rng.substream(kPositionStreamKey);
  const auto pts = d.sample_uniform(n, placement);
  write_points_csv(o.out, pts);
  json cfg = domain_json(o.dom);
  cfg["rho"] = o.rho;
  cfg["count"] = n;
  cfg["seed"] = o.seed;
  write_manifest(o.manifest, "sample", cfg, {{"outputs", {{"points", o.out}}}},
                 timer.seconds());
  std::cout << "points: " << o.out << " (n=" << n << ")\n";
}

void run_graph(const GraphOpts& o) {
  Timer timer;
  auto pts = read_points_csv(o.points);
  RngStream rng(o.seed);
  Graph g;
  double beta_used = 0.0;
  if (o.beta_mode == "threshold") {
    if (o.model != "soft")
      fail(Errc::ConfigError, "threshold beta requires the soft model");
    auto tr = beta_connectivity_threshold(std::move(pts), o.eta, rng);
    beta_used = tr.beta;
    g = std::move(tr.graph);
  } else if (o.beta_mode == "fixed") {
    if (o.model == "soft") {
      if (!o.beta_set)
        fail(Errc::ConfigError, "soft model needs --beta or --beta-mode threshold");
      beta_used = o.beta;
      g = sample_graph_at(std::move(pts), SoftExponential{o.beta, o.eta}, rng);
    } else if (o.model == "hard") {
      if (!o.r0_set) fail(Errc::ConfigError, "hard model needs --r0");
      g = sample_graph_at(std::move(pts), HardDisk{o.r0}, rng);
    } else {
      fail(Errc::ConfigError, "model must be 'soft' or 'hard'");
    }
  } else {
    fail(Errc::ConfigError, "beta-mode must be 'threshold' or 'fixed'");
  }
  write_edges_csv(o.out, g.edges());
  json cfg{{"points", o.points}, {"model", o.model},
           {"beta-mode", o.beta_mode}, {"eta", o.eta}, {"seed", o.seed}};
  json extras{{"outputs", {{"edges", o.out}}},
              {"edge_count", g.edge_count()}};
  if (o.model == "soft") extras["beta"] = beta_used;
  if (o.model == "hard") cfg["r0"] = o.r0;
  write_manifest(o.manifest, "graph", cfg, extras, timer.seconds());
  std::cout << "edges: " << o.out << " (m=" << g.edge_count();
  if (o.model == "soft") std::cout << ", beta=" << format_double(beta_used);
  std::cout << ")\n";
}

void run_bc(const BcOpts& o) {
  Timer timer;
  const Graph g = load_graph(o.points, o.edges);
  const BetweennessVector raw = betweenness_brandes(g, o.workers);
  const BetweennessVector pair = normalize(raw, Normalization::PairNormalized);
  CsvTable t;
  t.header = {"id", "gamma_raw", "gamma_pair_normalized"};
  for (int v = 0; v < g.node_count(); ++v)
    t.rows.push_back({std::to_string(v), format_double(raw.values[v]),
                      format_double(pair.values[v])});
  write_csv(o.out, t);
  json cfg{{"points", o.points}, {"edges", o.edges}, {"workers", o.workers}};
  write_manifest(o.manifest, "bc", cfg,
                 {{"outputs", {{"betweenness", o.out}}}}, timer.seconds());
  std::cout << "betweenness: " << o.out << "\n";
}

void run_analytic(const AnalyticOpts& o) {
  Timer timer;
  const DiskContinuum dc{o.radius};
  std::vector<double> grid;
  if (o.eps_set) {
    grid.push_back(o.eps);
  } else {
    if (!(o.eps_step > 0.0 && o.eps_step <= 1.0))
      fail(Errc::ConfigError, "eps-step must lie in (0, 1]");
    for (std::size_t i = 0;; ++i) {
      double eps = static_cast<double>(i) * o.eps_step;
      if (eps > 1.0 + 1e-9 * o.eps_step) break;
      grid.push_back(std::min(eps, 1.0));
    }
  }
  CsvTable t;
  t.header = {"eps", "g_star", "g_disk"};
  for (double eps : grid)
    t.rows.push_back({format_double(eps), format_double(g_star(eps)),
                      format_double(g_disk(dc, eps * o.radius))});
  write_csv(o.out, t);
  json cfg{{"radius", o.radius}};
  if (o.eps_set) cfg["eps"] = o.eps;
  else cfg["eps-step"] = o.eps_step;
  write_manifest(o.manifest, "analytic", cfg,
                 {{"outputs", {{"analytic", o.out}}}}, timer.seconds());
  std::cout << "analytic: " << o.out << " (" << t.rows.size() << " rows)\n";
}

void run_field(const FieldOpts& o) {
  Timer timer;
  const Domain d = make_domain(o.dom);
  const auto pts = lattice_points(d, o.grid_step);
  const ContinuumField f = evaluate_field(d, pts, o.quad_points, o.workers);
  CsvTable t;
  t.header = {"x", "y", "g", "g_star"};
  for (std::size_t i = 0; i < f.points.size(); ++i)
    t.rows.push_back({format_double(f.points[i].x), format_double(f.points[i].y),
                      format_double(f.g[i]), format_double(f.g_star[i])});
  write_csv(o.out, t);
  json cfg = domain_json(o.dom);
  cfg["grid-step"] = o.grid_step;
  cfg["quadrature-points"] = o.quad_points;
  cfg["workers"] = o.workers;
  write_manifest(o.manifest, "field", cfg, {{"outputs", {{"field", o.out}}}},
                 timer.seconds());
  std::cout << "field: " << o.out << " (" << f.points.size() << " points)\n";
}

void write_profile_csv(const std::string& path, const RadialProfile& p) {
  CsvTable t;
  t.header = {"eps", "mean_gamma", "normalized", "count", "stderr"};
  for (std::size_t b = 0; b < p.bin_centers.size(); ++b)
    t.rows.push_back({format_double(p.bin_centers[b]),
                      format_double(p.mean_gamma[b]),
                      format_double(p.normalized[b]),
                      std::to_string(p.counts[b]),
                      format_double(p.std_error[b])});
  write_csv(path, t);
}

void run_profile(const ProfileOpts& o) {
  Timer timer;
  const ExperimentConfig cfg = make_experiment_config(o);
  const RadialProfile prof = run_density(cfg, o.rho, 0);
  std::filesystem::create_directories(o.out_dir);
  const std::string out = o.out_dir + "/profile.csv";
  write_profile_csv(out, prof);
  json jc = profile_config_json(o);
  jc["rho"] = o.rho;
  write_manifest(
      o.out_dir + "/run.json", "profile", jc,
      {{"outputs", {{"profile", out}}},
       {"beta_policy", o.beta_mode == "threshold"
                           ? "per-realization connectivity threshold"
                           : "fixed beta for all realizations"},
       {"mean_beta", prof.mean_beta},
       {"nodes_per_realization", prof.nodes_per_realization}},
      timer.seconds());
  std::cout << "profile: " << out << " (rho=" << o.rho
            << ", N=" << prof.nodes_per_realization << ")\n";
}

void run_converge(const ConvergeOpts& o) {
  Timer timer;
  ExperimentConfig cfg = make_experiment_config(o.base);
  cfg.densities = parse_double_list(o.densities);
  const ConvergenceTable table = convergence_study(cfg);
  std::filesystem::create_directories(o.base.out_dir);
  const std::string out = o.base.out_dir + "/convergence.csv";
  CsvTable t;
  t.header = {"rho", "realizations", "linf", "l2"};
  for (const ConvergenceRow& row : table.rows)
    t.rows.push_back({format_double(row.rho), std::to_string(row.realizations),
                      format_double(row.linf), format_double(row.l2)});
  write_csv(out, t);
  json jc = profile_config_json(o.base);
  jc["densities"] = o.densities;
  json rows = json::array();
  for (const ConvergenceRow& row : table.rows)
    rows.push_back({{"rho", row.rho},
                    {"linf", row.linf},
                    {"l2", row.l2},
                    {"mean_beta", row.mean_beta},
                    {"nodes_per_realization", row.nodes_per_realization}});
  write_manifest(
      o.base.out_dir + "/run.json", "converge", jc,
      {{"outputs", {{"convergence", out}}},
       {"beta_policy", o.base.beta_mode == "threshold"
                           ? "per-realization connectivity threshold"
                           : "fixed beta for all realizations"},
       {"linf_strictly_decreasing", table.linf_strictly_decreasing},
       {"rows", rows}},
      timer.seconds());
  std::cout << "convergence: " << out << " (linf decreasing: "
            << (table.linf_strictly_decreasing ? "yes" : "no") << ")\n";
}

void run_boundary(const BoundaryOpts& o) {
  Timer timer;
  const Graph g = load_graph(o.points, o.edges);
  const Domain disk = Domain::disk(parse_point(o.center), o.radius);
  const BoundaryClassification r = detect_boundary(g, disk, o.threshold);
  CsvTable t;
  t.header = {"id", "eps", "g_star_est", "gamma_norm",
              "is_boundary_pos", "is_boundary_meas"};
  for (int v = 0; v < g.node_count(); ++v)
    t.rows.push_back({std::to_string(v), format_double(r.eps[v]),
                      format_double(r.g_star_estimate[v]),
                      format_double(r.gamma_normalized[v]),
                      r.boundary_by_position[v] ? "1" : "0",
                      r.boundary_by_measurement[v] ? "1" : "0"});
  write_csv(o.out, t);
  json cfg{{"points", o.points}, {"edges", o.edges}, {"radius", o.radius},
           {"center", o.center}, {"threshold", o.threshold}};
  write_manifest(o.manifest, "boundary", cfg,
                 {{"outputs", {{"boundary", o.out}}}}, timer.seconds());
  std::cout << "boundary: " << o.out << "\n";
}

void run_heads(const HeadsOpts& o) {
  Timer timer;
  const Graph g = load_graph(o.points, o.edges);
  ElectionMode mode;
  if (o.mode == "max") mode = ElectionMode::MaxBetweenness;
  else if (o.mode == "min") mode = ElectionMode::MinBetweenness;
  else fail(Errc::ConfigError, "mode must be 'max' or 'min'");
  const BetweennessVector bc = betweenness_brandes(g);
  const std::vector<int> ids = elect_cluster_heads(bc.values, o.k, mode);
  CsvTable t;
  t.header = {"rank", "id", "gamma_raw"};
  for (std::size_t r = 0; r < ids.size(); ++r)
    t.rows.push_back({std::to_string(r), std::to_string(ids[r]),
                      format_double(bc.values[ids[r]])});
  write_csv(o.out, t);
  json cfg{{"points", o.points}, {"edges", o.edges}, {"k", o.k},
           {"mode", o.mode}};
  write_manifest(o.manifest, "heads", cfg, {{"outputs", {{"heads", o.out}}}},
                 timer.seconds());
  std::cout << "heads: " << o.out << "\n";
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betweenness centrality in random geometric networks: sampled "
               "graphs, exact Brandes, disk closed form and convex-domain "
               "quadrature"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SampleOpts sample_o;
  auto* sample = app.add_subcommand("sample", "Sample node positions");
  add_domain_options(sample, sample_o.dom);
  sample->add_option("--rho", sample_o.rho, "Node density (per unit area)");
  sample->add_option("--count", sample_o.count,
                     "Override node count (default round(rho*area))");
  sample->add_option("--seed", sample_o.seed, "Master seed");
  sample->add_option("--out", sample_o.out, "Output points CSV");
  sample->add_option("--manifest", sample_o.manifest, "Manifest JSON path");

  GraphOpts graph_o;
  auto* graph = app.add_subcommand("graph", "Link sampled positions");
  graph->add_option("--points", graph_o.points, "Input points CSV")->required();
  graph->add_option("--model", graph_o.model, "Link model: soft|hard");
  graph->add_option("--beta-mode", graph_o.beta_mode,
                    "Beta choice: fixed|threshold");
  graph->add_option("--beta", graph_o.beta, "Soft model beta")
      ->trigger_on_parse()
      ->each([&](const std::string&) { graph_o.beta_set = true; });
  graph->add_option("--eta", graph_o.eta, "Path-loss exponent");
  graph->add_option("--r0", graph_o.r0, "Hard model range")
      ->trigger_on_parse()
      ->each([&](const std::string&) { graph_o.r0_set = true; });
  graph->add_option("--seed", graph_o.seed, "Master seed");
  graph->add_option("--out", graph_o.out, "Output edges CSV");
  graph->add_option("--manifest", graph_o.manifest, "Manifest JSON path");

  BcOpts bc_o;
  auto* bc = app.add_subcommand("bc", "Exact betweenness of a stored graph");
  bc->add_option("--points", bc_o.points, "Input points CSV")->required();
  bc->add_option("--edges", bc_o.edges, "Input edges CSV")->required();
  bc->add_option("--workers", bc_o.workers, "Worker threads");
  bc->add_option("--out", bc_o.out, "Output betweenness CSV");
  bc->add_option("--manifest", bc_o.manifest, "Manifest JSON path");

  AnalyticOpts analytic_o;
  auto* analytic =
      app.add_subcommand("analytic", "Closed-form disk profile g* and g");
  analytic->add_option("--radius", analytic_o.radius, "Disk radius");
  analytic->add_option("--eps", analytic_o.eps,
                       "Single eps (units of R) instead of a grid")
      ->trigger_on_parse()
      ->each([&](const std::string&) { analytic_o.eps_set = true; });
  analytic->add_option("--eps-step", analytic_o.eps_step,
                       "Grid step over [0, 1]");
  analytic->add_option("--out", analytic_o.out, "Output CSV");
  analytic->add_option("--manifest", analytic_o.manifest, "Manifest JSON path");

  FieldOpts field_o;
  auto* field = app.add_subcommand(
      "field", "Continuum betweenness field on a convex domain");
  add_domain_options(field, field_o.dom);
  field->add_option("--grid-step", field_o.grid_step, "Evaluation lattice step");
  field->add_option("--quadrature-points,-M", field_o.quad_points,
                    "Angular quadrature points (even, >= 64)");
  field->add_option("--workers", field_o.workers, "Worker threads");
  field->add_option("--out", field_o.out, "Output CSV");
  field->add_option("--manifest", field_o.manifest, "Manifest JSON path");

  ProfileOpts profile_o;
  auto* profile = app.add_subcommand(
      "profile", "Monte Carlo radial betweenness profile on the disk");
  profile->add_option("--config", profile_o.config,
                      "Config file (key = value lines; flags override)");
  add_domain_options(profile, profile_o.dom);
  profile->add_option("--rho", profile_o.rho, "Node density");
  profile->add_option("--realizations", profile_o.realizations,
                      "Graph realizations");
  profile->add_option("--bins", profile_o.bins, "Radial bins over [0, R]");
  profile->add_option("--eta", profile_o.eta, "Path-loss exponent");
  profile->add_option("--beta-mode", profile_o.beta_mode,
                      "Beta choice: threshold|fixed");
  profile->add_option("--beta", profile_o.beta, "Beta when beta-mode=fixed");
  profile->add_option("--seed", profile_o.seed, "Master seed");
  profile->add_option("--workers", profile_o.workers, "Worker threads");
  profile->add_option("--min-bin-count", profile_o.min_bin_count,
                      "Minimum samples for a bin to enter error norms");
  profile->add_option("--out-dir", profile_o.out_dir, "Output directory");

  ConvergeOpts converge_o;
  auto* converge = app.add_subcommand(
      "converge", "Density ladder: profile error vs continuum per rho");
  converge->add_option("--config", converge_o.base.config,
                       "Config file (key = value lines; flags override)");
  add_domain_options(converge, converge_o.base.dom);
  converge->add_option("--densities", converge_o.densities,
                       "Comma-separated density ladder");
  converge->add_option("--realizations", converge_o.base.realizations,
                       "Graph realizations per density");
  converge->add_option("--bins", converge_o.base.bins, "Radial bins");
  converge->add_option("--eta", converge_o.base.eta, "Path-loss exponent");
  converge->add_option("--beta-mode", converge_o.base.beta_mode,
                       "Beta choice: threshold|fixed");
  converge->add_option("--beta", converge_o.base.beta,
                       "Beta when beta-mode=fixed");
  converge->add_option("--seed", converge_o.base.seed, "Master seed");
  converge->add_option("--workers", converge_o.base.workers, "Worker threads");
  converge->add_option("--min-bin-count", converge_o.base.min_bin_count,
                       "Minimum samples for a bin to enter error norms");
  converge->add_option("--out-dir", converge_o.base.out_dir,
                       "Output directory");

  BoundaryOpts boundary_o;
  auto* boundary = app.add_subcommand(
      "boundary", "Boundary detection from positions and betweenness");
  boundary->add_option("--points", boundary_o.points, "Input points CSV")
      ->required();
  boundary->add_option("--edges", boundary_o.edges, "Input edges CSV")
      ->required();
  boundary->add_option("--radius", boundary_o.radius, "Disk radius");
  boundary->add_option("--center", boundary_o.center, "Disk center 'x,y'");
  boundary->add_option("--threshold", boundary_o.threshold,
                       "Boundary threshold in (0, 1)");
  boundary->add_option("--out", boundary_o.out, "Output CSV");
  boundary->add_option("--manifest", boundary_o.manifest, "Manifest JSON path");

  HeadsOpts heads_o;
  auto* heads =
      app.add_subcommand("heads", "Cluster-head election by betweenness");
  heads->add_option("--points", heads_o.points, "Input points CSV")->required();
  heads->add_option("--edges", heads_o.edges, "Input edges CSV")->required();
  heads->add_option("-k,--count", heads_o.k, "Number of heads");
  heads->add_option("--mode", heads_o.mode, "max|min betweenness");
  heads->add_option("--out", heads_o.out, "Output CSV");
  heads->add_option("--manifest", heads_o.manifest, "Manifest JSON path");

  sample->callback([&] { run_sample(sample_o); });
  graph->callback([&] { run_graph(graph_o); });
  bc->callback([&] { run_bc(bc_o); });
  analytic->callback([&] { run_analytic(analytic_o); });
  field->callback([&] { run_field(field_o); });
  profile->callback([&] {
    apply_experiment_config(profile, profile_o, nullptr);
    run_profile(profile_o);
  });
  converge->callback([&] {
    apply_experiment_config(converge, converge_o.base, &converge_o.densities);
    run_converge(converge_o);
  });
  boundary->callback([&] { run_boundary(boundary_o); });
  heads->callback([&] { run_heads(heads_o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const rgbc::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << one_line(e.what()) << "\n";
    return e.code() == Errc::ConfigError ? 2 : 3;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: ConfigError: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << one_line(e.what()) << "\n";
    return 3;
  }
  return 0;
}
