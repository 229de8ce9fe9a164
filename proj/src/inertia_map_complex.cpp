#include "steiner/inertia_map_complex.hpp"

#include <algorithm>
#include <cmath>

namespace steiner {

namespace {

// Principal square root with the cut normalized: a -0.0 imaginary part is
// collapsed to +0.0 first, so negative reals map to +i sqrt(|z|) no matter
// how the zero was produced upstream.
cplx principal_sqrt(cplx z) {
  if (z.imag() == 0.0) z = cplx(z.real(), +0.0);
  return std::sqrt(z);
}

}  // namespace

ComplexTriple inertia_map(const ComplexTriple& t, cplx x,
                          const Tolerances& tol) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw error(errc::invalid_argument, "shift parameter must be finite");
  const double scale =
      std::max({std::abs(t.a), std::abs(t.b), std::abs(t.c)});
  if (t.b == 0.0 || std::abs(t.b) < tol.eps_deg * scale)
    throw error(errc::pole_at_zero_b,
                "middle moment vanishes; the shifted determinant has a pole");

  const cplx tr = t.a + t.c + x;
  const cplx det = t.a * t.c * (1.0 + x / t.b);
  // Minimum-centered discriminant, the same evaluation the real path uses;
  // on real input every operation below specializes to the real code bit
  // for bit.
  const cplx x_min = 2.0 * t.a * t.c / t.b - (t.a + t.c);
  const cplx delta_min =
      4.0 * t.a * t.c * ((t.b - t.a) * (t.c - t.b)) / (t.b * t.b);
  const cplx dx = x - x_min;
  const cplx delta = dx * dx + delta_min;
  const cplx root = principal_sqrt(delta);

  // Form the larger root from the non-cancelling combination and recover
  // the other from the product; this mirrors the real-triple code path
  // bit for bit when all imaginary parts vanish.
  const cplx sum_hi = tr + root;
  const cplx sum_lo = tr - root;
  cplx lo, hi;
  if (std::norm(sum_hi) >= std::norm(sum_lo)) {
    hi = 0.5 * sum_hi;
    lo = hi == 0.0 ? 0.5 * sum_lo : det / hi;
  } else {
    lo = 0.5 * sum_lo;
    hi = lo == 0.0 ? 0.5 * sum_hi : det / lo;
  }
  return {lo, t.b + x, hi};
}

ComplexTriple inertia_map_inverse(const ComplexTriple& t, cplx x,
                                  const Tolerances& tol) {
  return inertia_map(t, -x, tol);
}

}  // namespace steiner
