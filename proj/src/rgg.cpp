#include "rgbc/rgg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rgbc/error.hpp"

namespace rgbc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_model(const ConnectionModel& m) {
  if (const auto* soft = std::get_if<SoftExponential>(&m)) {
    if (!(soft->beta > 0.0) || !std::isfinite(soft->beta))
      fail(Errc::ConfigError, "connection beta must be positive");
    if (!(soft->eta >= 1.0) || !std::isfinite(soft->eta))
      fail(Errc::ConfigError, "path-loss exponent eta must be >= 1");
  } else {
    const auto& hard = std::get<HardDisk>(m);
    if (!(hard.range > 0.0) || !std::isfinite(hard.range))
      fail(Errc::ConfigError, "hard-disk range must be positive");
  }
}

double pow_eta(double r, double eta) {
  return eta == 2.0 ? r * r : std::pow(r, eta);
}

inline std::size_t pair_index(int i, int j, int n) {
  // flat upper-triangular index for i < j
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

}  // namespace

double link_probability(const ConnectionModel& m, double r) {
  validate_model(m);
  if (!(r >= 0.0)) fail(Errc::ConfigError, "separation must be nonnegative");
  if (const auto* soft = std::get_if<SoftExponential>(&m))
    return std::exp(-soft->beta * pow_eta(r, soft->eta));
  return r <= std::get<HardDisk>(m).range ? 1.0 : 0.0;
}

Graph::Graph(std::vector<Point> positions,
             const std::vector<std::pair<int, int>>& edges)
    : pos_(std::move(positions)), adj_(pos_.size()) {
  const int n = node_count();
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      fail(Errc::ConfigError, "edge endpoint out of range");
    if (i == j) fail(Errc::ConfigError, "self-loops are not allowed");
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      fail(Errc::ConfigError, "duplicate edge");
  }
}

std::int64_t Graph::edge_count() const {
  std::int64_t deg = 0;
  for (const auto& nb : adj_) deg += static_cast<std::int64_t>(nb.size());
  return deg / 2;
}

bool Graph::has_edge(int i, int j) const {
  const auto& nb = adj_[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int i = 0; i < node_count(); ++i)
    for (int j : adj_[i])
      if (j > i) out.emplace_back(i, j);
  return out;
}

Graph sample_graph_at(std::vector<Point> positions, const ConnectionModel& m,
                      RngStream& rng) {
  validate_model(m);
  const int n = static_cast<int>(positions.size());
  RngStream pairs = rng.substream(kPairStreamKey);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = pairs.uniform01();
      bool linked;
      if (const auto* soft = std::get_if<SoftExponential>(&m)) {
        const double r = distance(positions[i], positions[j]);
        linked = u <= std::exp(-soft->beta * pow_eta(r, soft->eta));
      } else {
        linked = distance(positions[i], positions[j]) <=
                 std::get<HardDisk>(m).range;
      }
      if (linked) edges.emplace_back(i, j);
    }
  }
  Graph g(std::move(positions), edges);
  if (const auto* soft = std::get_if<SoftExponential>(&m)) {
    g.meta.model = "soft-exponential";
    g.meta.beta = soft->beta;
    g.meta.eta = soft->eta;
  } else {
    g.meta.model = "hard-disk";
    g.meta.beta = std::get<HardDisk>(m).range;
  }
  g.meta.seed = rng.seed();
  return g;
}

Graph sample_graph(const Domain& d, double rho, const ConnectionModel& m,
                   RngStream& rng) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    fail(Errc::ConfigError, "density rho must be positive");
  validate_model(m);
  const auto n = static_cast<std::int64_t>(std::llround(rho * d.area()));
  RngStream placement = rng.substream(kPositionStreamKey);
  auto positions = d.sample_uniform(n, placement);
  Graph g = sample_graph_at(std::move(positions), m, rng);
  g.meta.rho = rho;
  return g;
}

bool is_connected(const Graph& g) {
  const int n = g.node_count();
  if (n < 1) fail(Errc::ConfigError, "connectivity needs at least one node");
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        queue.push_back(w);
      }
    }
  }
  return visited == n;
}

std::vector<double> pair_beta_levels(const std::vector<Point>& positions,
                                     double eta, RngStream& pair_stream) {
  if (!(eta >= 1.0) || !std::isfinite(eta))
    fail(Errc::ConfigError, "path-loss exponent eta must be >= 1");
  const int n = static_cast<int>(positions.size());
  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = pair_stream.uniform01();
      const Point dxy = positions[j] - positions[i];
      const double r2 = dot(dxy, dxy);
      if (r2 == 0.0 || u == 0.0) {
        // coincident nodes are always linked; u == 0 is the -ln(u) = inf case
        levels.push_back(kInf);
        continue;
      }
      const double reta = eta == 2.0 ? r2 : std::pow(std::sqrt(r2), eta);
      levels.push_back(-std::log(u) / reta);
    }
  }
  return levels;
}

Graph realize_at_beta(const std::vector<Point>& positions,
                      const std::vector<double>& beta_levels, double beta) {
  const int n = static_cast<int>(positions.size());
  if (beta_levels.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    fail(Errc::ConfigError, "level count does not match node count");
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (beta_levels[k] >= beta) edges.emplace_back(i, j);
  return Graph(positions, edges);
}

ThresholdResult beta_connectivity_threshold(std::vector<Point> positions,
                                            double eta, RngStream& rng) {
  const int n = static_cast<int>(positions.size());
  if (n < 2) fail(Errc::ConfigError, "threshold needs at least two nodes");
  RngStream pairs = rng.substream(kPairStreamKey);
  const std::vector<double> levels = pair_beta_levels(positions, eta, pairs);

  // Bottleneck of the maximum spanning tree over the beta_ij levels:
  // Prim scan, dense O(N^2).
  std::vector<double> best(n, -kInf);
  std::vector<char> in_tree(n, 0);
  best[0] = kInf;
  double bottleneck = kInf;
  for (int round = 0; round < n; ++round) {
    int v = -1;
    for (int w = 0; w < n; ++w)
      if (!in_tree[w] && (v < 0 || best[w] > best[v])) v = w;
    in_tree[v] = 1;
    if (round > 0) bottleneck = std::min(bottleneck, best[v]);
    for (int w = 0; w < n; ++w) {
      if (in_tree[w]) continue;
      const double lvl = v < w ? levels[pair_index(v, w, n)]
                               : levels[pair_index(w, v, n)];
      if (lvl > best[w]) best[w] = lvl;
    }
  }

  Graph g = realize_at_beta(positions, levels, bottleneck);
  g.meta.model = "soft-exponential";
  g.meta.beta = bottleneck;
  g.meta.eta = eta;
  g.meta.seed = rng.seed();
  return {bottleneck, std::move(g)};
}

}  // namespace rgbc
