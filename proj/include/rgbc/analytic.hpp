#pragma once

namespace rgbc {

/// Complete elliptic integral of the second kind,
/// E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt, for modulus k in [0, 1].
/// Computed by the arithmetic-geometric mean iteration; E(0) and E(1) are
/// returned exactly.
double elliptic_E(double k);

struct DiskContinuum {
  double radius = 1.0;
};

/// Continuum betweenness of a point at absolute distance eps from the disk
/// center: g(eps) = 2 (R^2 - eps^2) / (pi^2 R^3) * E(eps / R). Units 1/length.
double g_disk(const DiskContinuum& dc, double eps);

/// Center-normalized profile with eps in units of R:
/// g*(eps) = (2/pi) (1 - eps^2) E(eps), so g*(eps) * g(0) = g(eps).
double g_star(double eps);

/// Truncated series of g* about the center: 1 - (5/4) eps^2 + (13/64) eps^4.
/// Valid guard: eps in [0, 0.3]; the truncation error is O(eps^6).
double g_star_center_expansion(double eps);

/// Leading behavior of g* at the rim: 4 (1 - eps) / pi, eps in units of R.
/// Valid guard: eps in [0.9, 1].
double g_star_boundary_expansion(double eps);

}  // namespace rgbc
