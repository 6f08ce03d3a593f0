#include "rgbc/analytic.hpp"

#include <cmath>
#include <numbers>

#include "rgbc/error.hpp"

namespace rgbc {

double elliptic_E(double k) {
  if (!(k >= 0.0 && k <= 1.0))
    fail(Errc::OutOfDomain, "elliptic modulus must lie in [0, 1]");
  if (k == 0.0) return std::numbers::pi / 2.0;
  if (k == 1.0) return 1.0;

  // AGM with the classic correction sum: a0 = 1, b0 = k', c0 = k and
  // E = K * (1 - sum_n 2^{n-1} c_n^2), K = pi / (2 a_inf).
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  double sum = 0.5 * k * k;
  double two_pow = 0.5;
  for (int n = 0; n < 64; ++n) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    two_pow *= 2.0;
    sum += two_pow * c * c;
    if (std::abs(c) <= 1e-18 * a) break;
  }
  const double big_k = std::numbers::pi / (2.0 * a);
  return big_k * (1.0 - sum);
}

double g_disk(const DiskContinuum& dc, double eps) {
  const double r = dc.radius;
  if (!(r > 0.0)) fail(Errc::ConfigError, "disk radius must be positive");
  if (!(eps >= 0.0 && eps <= r))
    fail(Errc::OutOfDomain, "eps must lie in [0, R]");
  const double pi = std::numbers::pi;
  return 2.0 * (r * r - eps * eps) / (pi * pi * r * r * r) *
         elliptic_E(eps / r);
}

double g_star(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    fail(Errc::OutOfDomain, "eps must lie in [0, 1] (units of R)");
  return 2.0 / std::numbers::pi * (1.0 - eps * eps) * elliptic_E(eps);
}

double g_star_center_expansion(double eps) {
  if (!(eps >= 0.0 && eps <= 0.3))
    fail(Errc::OutOfDomain, "center expansion is guarded to eps in [0, 0.3]");
  const double e2 = eps * eps;
  return 1.0 - 1.25 * e2 + (13.0 / 64.0) * e2 * e2;
}

double g_star_boundary_expansion(double eps) {
  if (!(eps >= 0.9 && eps <= 1.0))
    fail(Errc::OutOfDomain, "boundary expansion is guarded to eps in [0.9, 1]");
  return 4.0 * (1.0 - eps) / std::numbers::pi;
}

}  // namespace rgbc
