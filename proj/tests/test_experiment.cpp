#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"

#include "rgbc/analytic.hpp"
#include "rgbc/error.hpp"
#include "rgbc/experiment.hpp"

using namespace rgbc;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.domain = Domain::disk({0, 0}, 1.0);
  cfg.realizations = 20;
  cfg.bins = 10;
  cfg.eta = 2.0;
  cfg.beta_mode = BetaMode::ConnectivityThreshold;
  cfg.master_seed = 99;
  cfg.min_bin_count = 10;
  return cfg;
}

bool profiles_equal(const RadialProfile& a, const RadialProfile& b) {
  return a.mean_gamma == b.mean_gamma && a.normalized == b.normalized &&
         a.counts == b.counts && a.std_error == b.std_error &&
         a.mean_beta == b.mean_beta;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("bin bookkeeping: every node lands in exactly one bin") {
  ExperimentConfig cfg = small_config();
  cfg.realizations = 1;
  // rho chosen so round(rho * pi) = 3
  const RadialProfile p = run_density(cfg, 3.0 / cfg.domain.area(), 0);
  CHECK(p.nodes_per_realization == 3);
  CHECK(std::accumulate(p.counts.begin(), p.counts.end(), std::int64_t{0}) == 3);

  ExperimentConfig cfg2 = small_config();
  cfg2.realizations = 7;
  const RadialProfile p2 = run_density(cfg2, 20.0, 0);
  CHECK(std::accumulate(p2.counts.begin(), p2.counts.end(), std::int64_t{0}) ==
        7 * p2.nodes_per_realization);
}

TEST_CASE("profile normalization peaks at exactly one") {
  const RadialProfile p = run_density(small_config(), 30.0, 0);
  double mx = 0.0;
  for (std::size_t b = 0; b < p.normalized.size(); ++b) {
    CHECK(p.mean_gamma[b] >= 0.0);
    mx = std::max(mx, p.normalized[b]);
  }
  CHECK(mx == 1.0);
  CHECK(p.mean_beta > 0.0);
}

TEST_CASE("determinism: same config, any worker count, same bits") {
  ExperimentConfig cfg = small_config();
  cfg.workers = 1;
  const RadialProfile a = run_density(cfg, 25.0, 0);
  cfg.workers = 3;
  const RadialProfile b = run_density(cfg, 25.0, 0);
  const RadialProfile c = run_density(cfg, 25.0, 0);
  CHECK(profiles_equal(a, b));
  CHECK(profiles_equal(b, c));
  // a different density index keys a different substream
  const RadialProfile d = run_density(cfg, 25.0, 1);
  CHECK_FALSE(profiles_equal(a, d));
}

TEST_CASE("compare_to_continuum: exact profile gives zero residuals") {
  RadialProfile p;
  p.rho = 1.0;
  p.realizations = 1;
  const int bins = 20;
  for (int b = 0; b < bins; ++b) {
    const double eps = (b + 0.5) / bins;
    p.bin_centers.push_back(eps);
    p.mean_gamma.push_back(g_star(eps));
    p.normalized.push_back(g_star(eps));
    p.counts.push_back(1000);
    p.std_error.push_back(0.0);
  }
  const ContinuumComparison c = compare_to_continuum(p, 50);
  CHECK(c.linf == 0.0);
  CHECK(c.l2 == 0.0);
  CHECK(static_cast<int>(c.residuals.size()) == bins);
}

TEST_CASE("compare_to_continuum: starving every bin raises InsufficientData") {
  RadialProfile p;
  p.bin_centers = {0.25, 0.75};
  p.mean_gamma = {1.0, 0.5};
  p.normalized = {1.0, 0.5};
  p.counts = {10, 10};
  p.std_error = {0.0, 0.0};
  CHECK_THROWS_AS(compare_to_continuum(p, 50), Error);
}

TEST_CASE("convergence study shapes") {
  ExperimentConfig cfg = small_config();
  cfg.densities = {25.0};
  const ConvergenceTable one = convergence_study(cfg);
  CHECK(one.rows.size() == 1);
  CHECK(one.linf_strictly_decreasing);  // vacuous for one row

  // same density twice: different substreams, same ensemble. The profiles
  // agree bin by bin within the measured standard errors (5 sigma plus a
  // margin for the shared max-bin normalizer, itself a noisy statistic).
  cfg.realizations = 100;
  cfg.min_bin_count = 25;
  const RadialProfile pa = run_density(cfg, 30.0, 0);
  const RadialProfile pb = run_density(cfg, 30.0, 1);
  const double mma =
      *std::max_element(pa.mean_gamma.begin(), pa.mean_gamma.end());
  const double mmb =
      *std::max_element(pb.mean_gamma.begin(), pb.mean_gamma.end());
  for (int b = 0; b < cfg.bins; ++b) {
    const double sea = pa.std_error[b] / mma;
    const double seb = pb.std_error[b] / mmb;
    const double tol = 5.0 * std::sqrt(sea * sea + seb * seb) + 0.03;
    CHECK(std::abs(pa.normalized[b] - pb.normalized[b]) <= tol);
  }
  cfg.densities = {30.0, 30.0};
  const ConvergenceTable twice = convergence_study(cfg);
  CHECK(twice.rows.size() == 2);
  CHECK(twice.rows[0].rho == twice.rows[1].rho);

  cfg.densities = {};
  CHECK_THROWS_AS(convergence_study(cfg), Error);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_config();
  cfg.domain = Domain::square({0, 0}, 1.0);
  CHECK_THROWS_AS(run_density(cfg, 30.0, 0), Error);

  cfg = small_config();
  cfg.bins = 3;
  CHECK_THROWS_AS(run_density(cfg, 30.0, 0), Error);

  cfg = small_config();
  CHECK_THROWS_AS(run_density(cfg, -1.0, 0), Error);

  cfg = small_config();
  cfg.realizations = 0;
  CHECK_THROWS_AS(run_density(cfg, 30.0, 0), Error);
}

}  // TEST_SUITE
