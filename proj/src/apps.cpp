#include "rgbc/apps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rgbc/centrality.hpp"
#include "rgbc/error.hpp"

namespace rgbc {

BoundaryClassification detect_boundary(const Graph& g, const Domain& disk,
                                       double threshold,
                                       const std::vector<double>& gamma_raw,
                                       int profile_bins) {
  if (disk.shape() != Domain::Shape::Disk || disk.has_holes())
    fail(Errc::ConfigError, "boundary detection expects a disk domain");
  if (!(threshold > 0.0 && threshold < 1.0))
    fail(Errc::ConfigError, "threshold must lie in (0, 1)");
  if (profile_bins < 2) fail(Errc::ConfigError, "need at least 2 bins");
  const int n = g.node_count();
  if (n < 3)
    fail(Errc::DegenerateN,
         "measurement-mode boundary detection needs at least 3 nodes");
  if (static_cast<int>(gamma_raw.size()) != n)
    fail(Errc::ConfigError, "betweenness size does not match the graph");

  const double radius = disk.disk_radius();
  const Point center = disk.anchor();

  BoundaryClassification out;
  out.eps.resize(n);
  out.g_star_estimate.resize(n);
  out.gamma_normalized.resize(n);
  out.boundary_by_position.resize(n);
  out.boundary_by_measurement.resize(n);

  // realization maximum as the peak of the binned radial means
  std::vector<double> bin_sum(profile_bins, 0.0);
  std::vector<int> bin_count(profile_bins, 0);
  for (int v = 0; v < n; ++v) {
    const double eps =
        std::min(distance(g.positions()[v], center) / radius, 1.0);
    out.eps[v] = eps;
    const int b = std::min(static_cast<int>(eps * profile_bins),
                           profile_bins - 1);
    bin_sum[b] += gamma_raw[v];
    bin_count[b] += 1;
  }
  double gamma_max = 0.0;
  for (int b = 0; b < profile_bins; ++b)
    if (bin_count[b] > 0)
      gamma_max = std::max(gamma_max, bin_sum[b] / bin_count[b]);

  for (int v = 0; v < n; ++v) {
    out.g_star_estimate[v] = g_star(out.eps[v]);
    out.gamma_normalized[v] =
        gamma_max > 0.0 ? gamma_raw[v] / gamma_max : 0.0;
    out.boundary_by_position[v] = out.g_star_estimate[v] < threshold;
    out.boundary_by_measurement[v] = out.gamma_normalized[v] < threshold;
  }
  return out;
}

BoundaryClassification detect_boundary(const Graph& g, const Domain& disk,
                                       double threshold, int profile_bins) {
  if (g.node_count() < 3)
    fail(Errc::DegenerateN,
         "measurement-mode boundary detection needs at least 3 nodes");
  return detect_boundary(g, disk, threshold, betweenness_brandes(g).values,
                         profile_bins);
}

std::vector<int> elect_cluster_heads(const std::vector<double>& gamma, int k,
                                     ElectionMode mode) {
  const int n = static_cast<int>(gamma.size());
  if (k < 1 || k > n)
    fail(Errc::ConfigError, "cluster head count must lie in [1, N]");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (gamma[a] != gamma[b]) {
      return mode == ElectionMode::MaxBetweenness ? gamma[a] > gamma[b]
                                                  : gamma[a] < gamma[b];
    }
    return a < b;
  });
  order.resize(k);
  return order;
}

std::vector<int> elect_cluster_heads(const Graph& g, int k,
                                     ElectionMode mode) {
  return elect_cluster_heads(betweenness_brandes(g).values, k, mode);
}

double adaptive_range(double eps, const std::function<double(double)>& f,
                      double beta0) {
  if (!(beta0 > 0.0)) fail(Errc::ConfigError, "beta0 must be positive");
  const double beta = beta0 * f(g_star(eps));  // g_star validates eps
  if (!(beta > 0.0) || !std::isfinite(beta))
    fail(Errc::OutOfDomain, "range map must produce a positive finite beta");
  return 1.0 / std::sqrt(beta);
}

double adaptive_range(double eps, double beta0) {
  return adaptive_range(
      eps, [](double x) { return std::max(x, 0.01); }, beta0);
}

}  // namespace rgbc
