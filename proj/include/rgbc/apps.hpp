#pragma once

#include <functional>
#include <vector>

#include "rgbc/analytic.hpp"
#include "rgbc/geometry.hpp"
#include "rgbc/rgg.hpp"

namespace rgbc {

/// Per-node boundary classification for a graph sampled on a disk.
/// Position mode thresholds the continuum estimate g*(eps); measurement mode
/// thresholds the node's empirical betweenness rescaled by the realization
/// maximum, where the maximum is taken over radial-bin means (the same
/// normalization the radial profiles use: a single-node maximum would be a
/// heavy-tailed statistic). gamma_normalized may therefore exceed 1 for
/// individual nodes. Both modes are returned for comparison.
struct BoundaryClassification {
  std::vector<double> eps;            // node distance from center, units of R
  std::vector<double> g_star_estimate;
  std::vector<double> gamma_normalized;
  std::vector<char> boundary_by_position;
  std::vector<char> boundary_by_measurement;
};

BoundaryClassification detect_boundary(const Graph& g, const Domain& disk,
                                       double threshold,
                                       int profile_bins = 20);

/// Same classification with the exact raw betweenness already computed.
BoundaryClassification detect_boundary(const Graph& g, const Domain& disk,
                                       double threshold,
                                       const std::vector<double>& gamma_raw,
                                       int profile_bins = 20);

enum class ElectionMode { MaxBetweenness, MinBetweenness };

/// Top-k (or bottom-k) nodes by exact betweenness; ties break toward the
/// lower node index.
std::vector<int> elect_cluster_heads(const Graph& g, int k, ElectionMode mode);

/// Same election on precomputed per-node values. Any positive rescaling of
/// the values (raw vs pair-normalized) elects the same nodes.
std::vector<int> elect_cluster_heads(const std::vector<double>& gamma, int k,
                                     ElectionMode mode);

/// Adaptive connection range r0 = 1 / sqrt(beta(eps)) with
/// beta(eps) = beta0 * f(g*(eps)). The default map f(x) = max(x, 0.01)
/// floors the idle boundary region so its range stays finite.
double adaptive_range(double eps, const std::function<double(double)>& f,
                      double beta0);
double adaptive_range(double eps, double beta0);

}  // namespace rgbc
