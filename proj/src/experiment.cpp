#include "rgbc/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "rgbc/analytic.hpp"
#include "rgbc/centrality.hpp"
#include "rgbc/error.hpp"
#include "rgbc/parallel.hpp"
#include "rgbc/rgg.hpp"

namespace rgbc {

namespace {

void validate(const ExperimentConfig& cfg, double rho) {
  if (cfg.domain.shape() != Domain::Shape::Disk || cfg.domain.has_holes())
    fail(Errc::ConfigError, "radial profiles are defined on a disk domain");
  if (cfg.realizations < 1)
    fail(Errc::ConfigError, "need at least one realization");
  if (cfg.bins < 4) fail(Errc::ConfigError, "need at least 4 bins");
  if (!(rho > 0.0)) fail(Errc::ConfigError, "density must be positive");
  if (!(cfg.eta >= 1.0)) fail(Errc::ConfigError, "eta must be >= 1");
  if (cfg.beta_mode == BetaMode::Fixed && !(cfg.beta_fixed > 0.0))
    fail(Errc::ConfigError, "fixed beta must be positive");
}

struct Partial {
  std::vector<double> sum;
  std::vector<double> sumsq;
  std::vector<std::int64_t> count;
  double beta = 0.0;
};

}  // namespace

RadialProfile run_density(const ExperimentConfig& cfg, double rho,
                          int density_index) {
  validate(cfg, rho);
  const double radius = cfg.domain.disk_radius();
  const Point center = cfg.domain.anchor();
  const int n = static_cast<int>(std::llround(rho * cfg.domain.area()));
  if (n < 2) fail(Errc::ConfigError, "density too low: fewer than two nodes");
  const int bins = cfg.bins;
  const int reals = cfg.realizations;

  std::vector<Partial> parts(reals);
  const RngStream density_stream =
      RngStream(cfg.master_seed).substream(static_cast<std::uint64_t>(density_index));

  parallel_for(reals, cfg.workers, [&](int k) {
    RngStream rng = density_stream.substream(static_cast<std::uint64_t>(k));
    Graph g;
    double beta_used;
    if (cfg.beta_mode == BetaMode::ConnectivityThreshold) {
      RngStream placement = rng.substream(kPositionStreamKey);
      auto pos = cfg.domain.sample_uniform(n, placement);
      auto tr = beta_connectivity_threshold(std::move(pos), cfg.eta, rng);
      beta_used = tr.beta;
      g = std::move(tr.graph);
    } else {
      g = sample_graph(cfg.domain, rho, SoftExponential{cfg.beta_fixed, cfg.eta},
                       rng);
      beta_used = cfg.beta_fixed;
    }
    const BetweennessVector bc = betweenness_brandes(g);

    Partial p;
    p.sum.assign(bins, 0.0);
    p.sumsq.assign(bins, 0.0);
    p.count.assign(bins, 0);
    p.beta = beta_used;
    for (int v = 0; v < g.node_count(); ++v) {
      const double eps_units = distance(g.positions()[v], center) / radius;
      const int bin = std::min(static_cast<int>(eps_units * bins), bins - 1);
      const double gamma = bc.values[v];
      p.sum[bin] += gamma;
      p.sumsq[bin] += gamma * gamma;
      p.count[bin] += 1;
    }
    parts[k] = std::move(p);
  });

  // merge in realization order: fixed summation order for reproducibility
  std::vector<double> sum(bins, 0.0), sumsq(bins, 0.0);
  std::vector<std::int64_t> count(bins, 0);
  double beta_total = 0.0;
  for (const Partial& p : parts) {
    for (int b = 0; b < bins; ++b) {
      sum[b] += p.sum[b];
      sumsq[b] += p.sumsq[b];
      count[b] += p.count[b];
    }
    beta_total += p.beta;
  }

  RadialProfile prof;
  prof.rho = rho;
  prof.realizations = reals;
  prof.nodes_per_realization = n;
  prof.mean_beta = beta_total / reals;
  prof.bin_centers.resize(bins);
  prof.mean_gamma.assign(bins, 0.0);
  prof.normalized.assign(bins, 0.0);
  prof.counts = count;
  prof.std_error.assign(bins, 0.0);
  double max_mean = 0.0;
  for (int b = 0; b < bins; ++b) {
    prof.bin_centers[b] = (b + 0.5) / bins;
    if (count[b] > 0) {
      prof.mean_gamma[b] = sum[b] / static_cast<double>(count[b]);
      max_mean = std::max(max_mean, prof.mean_gamma[b]);
    }
    if (count[b] > 1) {
      const double nn = static_cast<double>(count[b]);
      const double var =
          std::max(0.0, (sumsq[b] - nn * prof.mean_gamma[b] * prof.mean_gamma[b]) /
                            (nn - 1.0));
      prof.std_error[b] = std::sqrt(var / nn);
    }
  }
  if (max_mean > 0.0)
    for (int b = 0; b < bins; ++b)
      prof.normalized[b] = prof.mean_gamma[b] / max_mean;
  return prof;
}

ContinuumComparison compare_to_continuum(const RadialProfile& p,
                                         std::int64_t min_bin_count) {
  ContinuumComparison c;
  double sq = 0.0;
  for (std::size_t b = 0; b < p.counts.size(); ++b) {
    if (p.counts[b] < min_bin_count) continue;
    const double res = p.normalized[b] - g_star(p.bin_centers[b]);
    c.bin_indices.push_back(static_cast<int>(b));
    c.residuals.push_back(res);
    c.linf = std::max(c.linf, std::abs(res));
    sq += res * res;
  }
  if (c.residuals.empty())
    fail(Errc::InsufficientData,
         "no radial bin reaches the minimum sample count");
  c.l2 = std::sqrt(sq / static_cast<double>(c.residuals.size()));
  return c;
}

ConvergenceTable convergence_study(const ExperimentConfig& cfg) {
  if (cfg.densities.empty())
    fail(Errc::ConfigError, "convergence study needs at least one density");
  ConvergenceTable table;
  for (std::size_t i = 0; i < cfg.densities.size(); ++i) {
    const double rho = cfg.densities[i];
    const RadialProfile prof = run_density(cfg, rho, static_cast<int>(i));
    const ContinuumComparison cmp =
        compare_to_continuum(prof, cfg.min_bin_count);
    table.rows.push_back({rho, prof.realizations, cmp.linf, cmp.l2,
                          prof.mean_beta, prof.nodes_per_realization});
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i)
    if (!(table.rows[i].linf < table.rows[i - 1].linf))
      table.linf_strictly_decreasing = false;
  return table;
}

}  // namespace rgbc
