#pragma once

#include <vector>

#include "rgbc/geometry.hpp"

namespace rgbc {

/// Boundary distances r(theta) from one origin over an even, uniform grid on
/// [0, 2pi). Even size keeps theta and theta + pi on the grid so opposite
/// rays pair up without extra casts.
struct RayDistanceProfile {
  Point origin;
  std::vector<double> thetas;
  std::vector<double> distances;
};

RayDistanceProfile ray_profile(const Domain& d, Point origin, int count);

/// Continuum betweenness at an interior point of a convex domain:
///   g(kappa) = 1/(4 V^2) * int_0^{2pi} r(t) r(t+pi) (r(t) + r(t+pi)) dt
/// approximated by the composite trapezoidal rule on a uniform periodic grid
/// of `quad_points` angles (even, >= 64). Spectrally accurate on smooth
/// boundaries; O(M^-2) on polygons because of corner kinks.
double g_convex(const Domain& d, Point kappa, int quad_points);

/// g over a set of evaluation points, plus the field normalized by its
/// maximum (so max g_star is exactly 1).
struct ContinuumField {
  std::vector<Point> points;
  std::vector<double> g;
  std::vector<double> g_star;
};

ContinuumField evaluate_field(const Domain& d, std::vector<Point> points,
                              int quad_points, int workers = 1);

/// Grid refinement check: evaluates at M, 2M and 4M points and reports the
/// successive differences plus an order-2 Richardson extrapolation.
struct RichardsonReport {
  int base_points = 0;
  double g_m = 0.0;
  double g_2m = 0.0;
  double g_4m = 0.0;
  double diff_coarse = 0.0;  // |g_2m - g_m|
  double diff_fine = 0.0;    // |g_4m - g_2m|
  double extrapolated = 0.0;
};

RichardsonReport richardson_check(const Domain& d, Point kappa,
                                  int quad_points);

/// Axis-aligned lattice of strictly interior points with the given spacing,
/// centered on the domain anchor (row-major order, deterministic).
std::vector<Point> lattice_points(const Domain& d, double step);

}  // namespace rgbc
