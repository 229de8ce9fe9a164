#pragma once

#include "steiner/moments.hpp"

namespace steiner {

// Componentwise scaling s(a). The real overload keeps the triple in the
// ordered cone, so it requires a > 0; the complex overload only rejects
// a == 0.
InertiaTriple scale(const InertiaTriple& t, double a,
                    const Tolerances& tol = {});
ComplexTriple scale(const ComplexTriple& t, cplx a);

// Real parameters form a semigroup (a > 0, shift >= 0, no inverses unless
// the shift is zero); complex parameters form a group.
enum class ScalingContext { real_semigroup, complex_group };

// Element (a, b) of the two-parameter extension of the shift maps by
// scalings. It acts scale-first: the triple is multiplied by a and then
// shifted by b, so the middle moment transforms as m -> a m + b. In
// products the right factor acts first.
struct ScaledShift {
  cplx a;  // scale, nonzero
  cplx b;  // shift
  ScalingContext context = ScalingContext::complex_group;
};

// Validates the parameters for the given context. Throws zero_scale when
// a == 0 and invalid_argument when a real-context parameter is complex,
// the scale is not positive or the shift is negative.
ScaledShift make_scaled_shift(cplx a, cplx b, ScalingContext context);

// (a1, b1)(a2, b2) = (a1 a2, b1 + a1 b2). Contexts must match.
ScaledShift compose(const ScaledShift& e1, const ScaledShift& e2);

// (a, b)^-1 = (1/a, -b/a). In the real context only shift-free elements
// are invertible; anything else throws no_inverse_in_semigroup.
ScaledShift inverse(const ScaledShift& e);

InertiaTriple apply(const ScaledShift& e, const InertiaTriple& t,
                    const Tolerances& tol = {});
ComplexTriple apply(const ScaledShift& e, const ComplexTriple& t,
                    const Tolerances& tol = {});

// The extension parameters compose exactly like affine maps x -> a x + b
// of the shift parameter line; to_affine realizes that correspondence.
struct AffineMap {
  cplx a;
  cplx b;
};

AffineMap to_affine(const ScaledShift& e);
AffineMap affine_compose(const AffineMap& f, const AffineMap& g);  // g first
cplx affine_apply(const AffineMap& f, cplx x);

}  // namespace steiner
