#include "steiner/inertia_map.hpp"

#include <cmath>
#include <limits>

namespace steiner {

namespace {

void require_shift(double x) {
  if (std::isnan(x))
    throw error(errc::invalid_argument, "shift parameter must not be NaN");
  if (x < 0)
    throw error(errc::negative_parameter,
                "shift parameter must be nonnegative");
  if (!std::isfinite(x))
    throw error(errc::invalid_argument, "shift parameter must be finite");
}

double rel_residual(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0) return 0;
  return std::abs(lhs - rhs) / scale;
}

}  // namespace

InvariantScalars invariants(const InertiaTriple& t, double x) {
  if (!std::isfinite(x))
    throw error(errc::invalid_argument, "shift parameter must be finite");
  const ExtremumReport ex = delta_extremum(t);
  const double dx = x - ex.x_min;
  return {
      t.a + t.c + x,
      t.a * t.c * (1.0 + x / t.b),
      dx * dx + ex.delta_min,
  };
}

ExtremumReport delta_extremum(const InertiaTriple& t) {
  // The grouping is shared with the complex overload and is symmetric under
  // swapping a and c, so the two sheets see bitwise-identical invariants.
  const double x_min = 2.0 * t.a * t.c / t.b - (t.a + t.c);
  const double delta_min =
      4.0 * t.a * t.c * ((t.b - t.a) * (t.c - t.b)) / (t.b * t.b);
  return {x_min, delta_min};
}

InertiaTriple inertia_map(const InertiaTriple& t, double x,
                          const Tolerances& tol) {
  require_shift(x);
  const InvariantScalars s = invariants(t, x);
  const double root = std::sqrt(s.delta);
  const double hi = 0.5 * (s.tr + root);
  const double lo = s.det / hi;
  const double mid = t.b + x;

  const double eps = std::numeric_limits<double>::epsilon();
  if (lo - mid > 4 * eps * mid || mid - hi > 4 * eps * hi)
    throw error(errc::ordering_violation,
                "computed moments violate the analytic ordering");
  return validate_triple(lo, mid, hi, tol);
}

double jacobian_det(const InertiaTriple& t, double x) {
  require_shift(x);
  const InvariantScalars s = invariants(t, x);
  return (t.c - t.a) * (1.0 + x / t.b) / std::sqrt(s.delta);
}

IdentityReport identity_checks(const InertiaTriple& t, double x,
                               const Tolerances& tol) {
  require_shift(x);

  const long double a = t.a, b = t.b, c = t.c, lx = x;
  const long double tr = a + c + lx;
  const long double det = a * c * (1.0L + lx / b);
  const long double delta = tr * tr - 4.0L * det;
  const long double d = tr - 2.0L * (b + lx);

  IdentityReport report;
  report.scalars = invariants(t, x);
  report.d = static_cast<double>(d);
  report.delta_positive = report.scalars.delta > 0;

  const long double sep_lhs = d * d - delta;
  const long double sep_rhs = -4.0L * (b + lx) * (b - a) * (c - b) / b;
  report.separation.lhs = static_cast<double>(sep_lhs);
  report.separation.rhs = static_cast<double>(sep_rhs);
  report.separation.residual =
      rel_residual(report.separation.lhs, report.separation.rhs);
  report.separation.pass = report.separation.residual <= tol.eps_id;

  const InertiaTriple image = inertia_map(t, x, tol);
  report.ordered = 0 < image.a && image.a < image.b && image.b < image.c;

  report.eigen_sum.lhs = image.a + image.c;
  report.eigen_sum.rhs = report.scalars.tr;
  report.eigen_sum.residual =
      rel_residual(report.eigen_sum.lhs, report.eigen_sum.rhs);
  report.eigen_sum.pass = report.eigen_sum.residual <= tol.eps_id;

  report.eigen_product.lhs = image.a * image.c;
  report.eigen_product.rhs = report.scalars.det;
  report.eigen_product.residual =
      rel_residual(report.eigen_product.lhs, report.eigen_product.rhs);
  report.eigen_product.pass = report.eigen_product.residual <= tol.eps_id;

  return report;
}

}  // namespace steiner
