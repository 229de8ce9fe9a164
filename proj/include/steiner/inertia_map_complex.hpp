#pragma once

#include "steiner/moments.hpp"

namespace steiner {

// One representative of the two-valued complex shift map
//
//   (a, b, c) -> ((tr - sqrt(delta))/2, b + x, (tr + sqrt(delta))/2)
//
// with tr = a + c + x, det = a c (1 + x/b), delta = tr^2 - 4 det, using the
// principal square root. The other representative is involution(result).
// On the branch cut (delta a negative real) the root is taken on the +i
// side regardless of the sign of a zero imaginary part, so the returned
// sheet is a deterministic function of the values alone. Branch points
// (delta == 0) are legal inputs. Throws pole_at_zero_b when |b| vanishes
// relative to the magnitude of the triple.
ComplexTriple inertia_map(const ComplexTriple& t, cplx x,
                          const Tolerances& tol = {});

// The same map with parameter -x; inverts inertia_map(., x) up to
// involution.
ComplexTriple inertia_map_inverse(const ComplexTriple& t, cplx x,
                                  const Tolerances& tol = {});

}  // namespace steiner
