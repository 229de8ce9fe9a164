#pragma once

#include "steiner/moments.hpp"

namespace steiner {

// Trace, determinant and discriminant of the outer 2x2 block of the shifted
// tensor, as functions of the shift parameter x:
//
//   tr(x)    = a + c + x
//   det(x)   = a * c * (1 + x / b)
//   delta(x) = tr(x)^2 - 4 det(x)
//
// delta is evaluated in the minimum-centered form
//   delta(x) = (x - x_min)^2 + delta_min
// which equals tr^2 - 4 det algebraically but is a sum of nonnegative terms
// whenever 0 < a < b < c, so positivity and relative accuracy survive
// near-degenerate triples and large |x|.
struct InvariantScalars {
  double tr = 0;
  double det = 0;
  double delta = 0;
};

// Argmin of delta over all real x and the value attained there.
struct ExtremumReport {
  double x_min = 0;      // 2ac/b - (a + c)
  double delta_min = 0;  // 4ac(b - a)(c - b) / b^2
};

struct IdentityCheck {
  double lhs = 0;
  double rhs = 0;
  double residual = 0;  // |lhs - rhs| relative to max(|lhs|, |rhs|)
  bool pass = false;
};

// Closed-form consistency report for one (t, x); see identity_checks().
struct IdentityReport {
  InvariantScalars scalars;
  double d = 0;  // tr - 2(b + x) = a + c - 2b - x
  bool delta_positive = false;
  IdentityCheck separation;     // d^2 - delta == -4(b + x)(b - a)(c - b)/b
  IdentityCheck eigen_sum;      // lambda1 + lambda3 == tr
  IdentityCheck eigen_product;  // lambda1 * lambda3 == det
  bool ordered = false;         // 0 < lambda1 < lambda2 < lambda3

  bool all_pass() const {
    return delta_positive && ordered && separation.pass && eigen_sum.pass &&
           eigen_product.pass;
  }
};

// x may be any finite real here; the invariants are polynomials in x.
InvariantScalars invariants(const InertiaTriple& t, double x);

ExtremumReport delta_extremum(const InertiaTriple& t);

// Principal moments after shifting the rotation axis by squared distance
// x >= 0 along either axis of circular section:
//
//   (a, b, c) -> ((tr - sqrt(delta))/2, b + x, (tr + sqrt(delta))/2)
//
// The small root is obtained from det / lambda3 rather than the subtractive
// formula, so no catastrophic cancellation occurs for large x. The output
// ordering is asserted, not imposed: a violation beyond a few ulp raises
// ordering_violation, since the closed forms guarantee strict ordering.
InertiaTriple inertia_map(const InertiaTriple& t, double x,
                          const Tolerances& tol = {});

// Determinant of the differential of inertia_map(., x) at t, as a map on
// ordered triples: (c - a)(1 + x/b) / sqrt(delta). Equals exactly 1 at x = 0.
double jacobian_det(const InertiaTriple& t, double x);

// Evaluates the closed-form identities tying d, delta, the eigenvalue sum
// and product together at (t, x). The two sides of each identity are formed
// in extended precision from the exact double inputs; the comparisons would
// otherwise be dominated by cancellation noise near degeneracy rather than
// by any property of the formulas.
IdentityReport identity_checks(const InertiaTriple& t, double x,
                               const Tolerances& tol = {});

}  // namespace steiner
