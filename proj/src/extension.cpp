#include "steiner/extension.hpp"

#include <cmath>

#include "steiner/inertia_map.hpp"
#include "steiner/inertia_map_complex.hpp"

namespace steiner {

InertiaTriple scale(const InertiaTriple& t, double a, const Tolerances& tol) {
  if (a == 0) throw error(errc::zero_scale, "scale factor must be nonzero");
  if (!(a > 0) || !std::isfinite(a))
    throw error(errc::invalid_argument,
                "real scale factor must be positive and finite");
  return validate_triple(a * t.a, a * t.b, a * t.c, tol);
}

ComplexTriple scale(const ComplexTriple& t, cplx a) {
  if (a == 0.0) throw error(errc::zero_scale, "scale factor must be nonzero");
  return {a * t.a, a * t.b, a * t.c};
}

ScaledShift make_scaled_shift(cplx a, cplx b, ScalingContext context) {
  if (a == 0.0) throw error(errc::zero_scale, "scale factor must be nonzero");
  if (context == ScalingContext::real_semigroup) {
    if (a.imag() != 0 || b.imag() != 0)
      throw error(errc::invalid_argument,
                  "real-context parameters must be real");
    if (!(a.real() > 0))
      throw error(errc::invalid_argument,
                  "real-context scale must be positive");
    if (!(b.real() >= 0))
      throw error(errc::invalid_argument,
                  "real-context shift must be nonnegative");
  }
  return {a, b, context};
}

ScaledShift compose(const ScaledShift& e1, const ScaledShift& e2) {
  if (e1.context != e2.context)
    throw error(errc::invalid_argument,
                "cannot compose elements from different contexts");
  return make_scaled_shift(e1.a * e2.a, e1.b + e1.a * e2.b, e1.context);
}

ScaledShift inverse(const ScaledShift& e) {
  if (e.context == ScalingContext::real_semigroup && e.b != 0.0)
    throw error(errc::no_inverse_in_semigroup,
                "a nonzero shift cannot be undone in the real context");
  const cplx nb = e.b == 0.0 ? cplx(0.0) : -e.b / e.a;
  return make_scaled_shift(1.0 / e.a, nb, e.context);
}

InertiaTriple apply(const ScaledShift& e, const InertiaTriple& t,
                    const Tolerances& tol) {
  if (e.context != ScalingContext::real_semigroup)
    throw error(errc::invalid_argument,
                "complex-context element applied to an ordered triple");
  return inertia_map(scale(t, e.a.real(), tol), e.b.real(), tol);
}

ComplexTriple apply(const ScaledShift& e, const ComplexTriple& t,
                    const Tolerances& tol) {
  return inertia_map(scale(t, e.a), e.b, tol);
}

AffineMap to_affine(const ScaledShift& e) {
  return {e.a, e.b};
}

AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
  return {f.a * g.a, f.b + f.a * g.b};
}

cplx affine_apply(const AffineMap& f, cplx x) {
  return f.a * x + f.b;
}

}  // namespace steiner
