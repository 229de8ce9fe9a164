#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "steiner/moments.hpp"

namespace steiner {

// Unit direction in the principal frame at the center of mass. Operations
// that consume an axis check the normalization and throw non_unit_axis if
// the squared length strays from 1 by more than 1e-12.
struct AxisVector {
  double n1 = 0;
  double n2 = 0;
  double n3 = 0;
};

// Normalizes (n1, n2, n3); throws non_unit_axis for the zero vector and
// invalid_argument for non-finite input.
AxisVector make_unit_axis(double n1, double n2, double n3);

// Symmetric 3x3 tensor, symmetric by storage.
struct InertiaTensor {
  double xx = 0, xy = 0, xz = 0;
  double yy = 0, yz = 0;
  double zz = 0;
};

struct EigenSystem3 {
  std::array<double, 3> values;                  // ascending
  std::array<std::array<double, 3>, 3> vectors;  // vectors[k] pairs values[k]
};

// The two axes of circular section of the momental ellipsoid, lying in the
// 1-3 principal plane:
//
//   n = (cos t, 0, +-sin t),  sin^2 t = a(c - b) / (b(c - a)),
//                             cos^2 t = c(b - a) / (b(c - a)).
//
// Returned with n1 > 0; first the n3 > 0 sheet, then its mirror image.
std::pair<AxisVector, AxisVector> galois_axes(const InertiaTriple& t);

// Parallel-axis shift of the diagonal tensor: diag(a, b, c) + x(I - n n^T)
// for a unit mass moved to squared distance x along n.
InertiaTensor steiner_tensor(const InertiaTriple& t, const AxisVector& n,
                             double x);

// Eigen decomposition by cyclic Jacobi rotations. Deterministic, no
// external dependencies; residual ||M v - lambda v|| stays within a small
// multiple of machine epsilon times ||M||.
EigenSystem3 sym3_eigensystem(const InertiaTensor& m);
std::array<double, 3> sym3_eigenvalues(const InertiaTensor& m);

// Relative spread (r_max^2 - r_min^2) / r_max^2 of the central section of
// the momental ellipsoid x^2/a + y^2/b + z^2/c = 1 cut by the plane normal
// to n, probed on a 360-point great-circle grid. Zero exactly on the axes
// of circular section.
double maccullagh_residual(const InertiaTriple& t, const AxisVector& n);

// Closed-form (r_min^2, r_max^2) of the same section, from the 2x2
// restriction of the quadratic form; independent cross-check for the
// sampled residual.
std::pair<double, double> section_radius_extrema(const InertiaTriple& t,
                                                 const AxisVector& n);

// Axis selection rules for the shift-additivity search.
struct GaloisRule {
  int sheet = +1;  // +1 for the n3 > 0 axis, -1 for its mirror
};
struct PrincipalRule {
  int index = 1;  // 1, 2 or 3
};
struct FixedDirectionRule {
  AxisVector axis;
};
using AxisRule = std::variant<GaloisRule, PrincipalRule, FixedDirectionRule>;

std::string rule_name(const AxisRule& rule);
AxisVector resolve_axis(const AxisRule& rule, const InertiaTriple& t);

// Sorted spectrum of steiner_tensor(t, resolve_axis(rule, t), x).
std::array<double, 3> axis_rule_map(const AxisRule& rule,
                                    const InertiaTriple& t, double x);

// Relative gap between shifting by y then x under the rule and shifting by
// x + y in one step: max-norm difference over max-norm of the one-step
// spectrum. The intermediate spectrum must be a valid ordered triple for
// the rule to be re-applied; otherwise intermediate_degenerate is thrown.
double additivity_residual(const AxisRule& rule, const InertiaTriple& t,
                           double x, double y, const Tolerances& tol = {});

struct FalsifySample {
  double a = 0, b = 0, c = 0, x = 0, y = 0;
};

struct RuleReport {
  std::string rule;
  std::size_t samples = 0;
  std::size_t failures = 0;  // draws where the rule could not be re-applied
  double max_residual = 0;
  double median_residual = 0;  // lower median over the evaluated draws
  FalsifySample worst;         // draw attaining max_residual
};

struct FalsifyReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<RuleReport> rules;
};

// Random search for additivity violations. Triples are drawn log-uniformly
// from [1e-2, 1e2] per component and reordered; x and y uniformly from
// [0, 10]. All draws come from one sequential stream keyed by seed and the
// per-rule aggregation is order-independent, so the report is byte-stable
// for a given (rules, samples, seed) regardless of thread count. threads
// == 0 picks the hardware concurrency.
FalsifyReport falsify_search(std::span<const AxisRule> rules,
                             std::size_t samples, std::uint64_t seed,
                             const Tolerances& tol = {},
                             std::size_t threads = 0);

}  // namespace steiner
