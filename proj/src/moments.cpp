#include "steiner/moments.hpp"

#include <algorithm>
#include <cmath>

namespace steiner {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_positive: return "NONPOSITIVE";
    case errc::degenerate: return "DEGENERATE";
    case errc::disordered: return "DISORDERED";
    case errc::negative_parameter: return "NEGATIVE_PARAMETER";
    case errc::pole_at_zero_b: return "POLE_AT_ZERO_B";
    case errc::zero_scale: return "ZERO_SCALE";
    case errc::no_inverse_in_semigroup: return "NO_INVERSE_IN_SEMIGROUP";
    case errc::non_unit_axis: return "NON_UNIT_AXIS";
    case errc::intermediate_degenerate: return "INTERMEDIATE_DEGENERATE";
    case errc::ordering_violation: return "ORDERING_VIOLATION";
    case errc::invalid_argument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

InertiaTriple validate_triple(double a, double b, double c,
                              const Tolerances& tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw error(errc::invalid_argument, "moments must be finite");
  if (!(a > 0) || !(b > 0) || !(c > 0))
    throw error(errc::non_positive, "moments must be strictly positive");
  if (b < a || c < b)
    throw error(errc::disordered, "moments must be ordered a < b < c");
  if (b - a < tol.eps_deg * b)
    throw error(errc::degenerate, "moments a and b are too close");
  if (c - b < tol.eps_deg * c)
    throw error(errc::degenerate, "moments b and c are too close");
  return {a, b, c};
}

ComplexTriple involution(const ComplexTriple& t) {
  return {t.c, t.b, t.a};
}

double involution_distance(const ComplexTriple& t1, const ComplexTriple& t2) {
  const cplx sum1 = t1.a + t1.c;
  const cplx sum2 = t2.a + t2.c;
  const cplx prod1 = t1.a * t1.c;
  const cplx prod2 = t2.a * t2.c;

  // Scale each comparison by the operands as well as the results so that a
  // cancellation in a + c (or a near-zero product) does not turn roundoff
  // into a spurious mismatch.
  const double outer = std::max({std::abs(t1.a), std::abs(t1.c),
                                 std::abs(t2.a), std::abs(t2.c), 1.0});
  const double sum_scale = std::max({std::abs(sum1), std::abs(sum2), outer});
  const double prod_scale =
      std::max({std::abs(prod1), std::abs(prod2), outer * outer});
  const double mid_scale =
      std::max({std::abs(t1.b), std::abs(t2.b), 1.0});

  const double d_sum = std::abs(sum1 - sum2) / sum_scale;
  const double d_prod = std::abs(prod1 - prod2) / prod_scale;
  const double d_mid = std::abs(t1.b - t2.b) / mid_scale;
  return std::max({d_sum, d_prod, d_mid});
}

bool eq_mod_involution(const ComplexTriple& t1, const ComplexTriple& t2,
                       double tol) {
  return involution_distance(t1, t2) <= tol;
}

}  // namespace steiner
