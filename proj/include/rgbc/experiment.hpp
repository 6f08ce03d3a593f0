#pragma once

#include <cstdint>
#include <vector>

#include "rgbc/geometry.hpp"

namespace rgbc {

enum class BetaMode { ConnectivityThreshold, Fixed };

struct ExperimentConfig {
  Domain domain = Domain::disk({0.0, 0.0}, 1.0);
  std::vector<double> densities;
  int realizations = 500;
  int bins = 50;
  double eta = 2.0;
  BetaMode beta_mode = BetaMode::ConnectivityThreshold;
  double beta_fixed = 1.0;
  std::uint64_t master_seed = 0;
  int workers = 1;
  std::int64_t min_bin_count = 50;  // bins below this are excluded from norms
};

/// Binned mean betweenness against distance from the disk center (bin
/// centers in units of R). `normalized` divides the bin means by their
/// maximum; empty bins carry zeros and count 0.
struct RadialProfile {
  std::vector<double> bin_centers;
  std::vector<double> mean_gamma;
  std::vector<double> normalized;
  std::vector<std::int64_t> counts;
  std::vector<double> std_error;  // standard error of the raw bin mean
  double rho = 0.0;
  int realizations = 0;
  int nodes_per_realization = 0;
  double mean_beta = 0.0;  // average beta actually used across realizations
};

/// Monte Carlo profile for one density: sample graphs on the disk, run exact
/// betweenness, bin by radial position and average. Realizations run on
/// derived substreams keyed by (density_index, realization) and partial sums
/// merge in realization order, so the result is bit-identical for any worker
/// count.
RadialProfile run_density(const ExperimentConfig& cfg, double rho,
                          int density_index = 0);

/// Residuals of the normalized profile against g*(eps) over bins with at
/// least `min_bin_count` samples. l2 is the root mean square residual.
struct ContinuumComparison {
  std::vector<int> bin_indices;
  std::vector<double> residuals;
  double linf = 0.0;
  double l2 = 0.0;
};

ContinuumComparison compare_to_continuum(const RadialProfile& p,
                                         std::int64_t min_bin_count = 50);

struct ConvergenceRow {
  double rho = 0.0;
  int realizations = 0;
  double linf = 0.0;
  double l2 = 0.0;
  double mean_beta = 0.0;
  int nodes_per_realization = 0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  /// Whether linf strictly decreases along the configured density ladder
  /// (vacuously true for a single density). Reported, not enforced.
  bool linf_strictly_decreasing = true;
};

/// Runs run_density for every configured density, in ladder order.
ConvergenceTable convergence_study(const ExperimentConfig& cfg);

}  // namespace rgbc
