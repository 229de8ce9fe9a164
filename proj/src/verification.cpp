#include "steiner/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "steiner/extension.hpp"
#include "steiner/geometry.hpp"
#include "steiner/inertia_map.hpp"
#include "steiner/inertia_map_complex.hpp"
#include "steiner/sampling.hpp"

namespace steiner {

namespace {

double rel_diff(double u, double v) {
  const double scale = std::max(std::abs(u), std::abs(v));
  return scale == 0 ? 0.0 : std::abs(u - v) / scale;
}

double rel3(const InertiaTriple& u, const InertiaTriple& v) {
  return std::max(
      {rel_diff(u.a, v.a), rel_diff(u.b, v.b), rel_diff(u.c, v.c)});
}

double max_norm_rel(const std::array<double, 3>& u,
                    const std::array<double, 3>& v) {
  double num = 0;
  double den = 0;
  for (int i = 0; i < 3; ++i) {
    num = std::max(num, std::abs(u[i] - v[i]));
    den = std::max(den, std::abs(v[i]));
  }
  return den == 0 ? 0.0 : num / den;
}

InertiaTriple draw_triple(SampleRng& rng) {
  return rng.triple_log_uniform(1e-2, 1e2, 1e-6);
}

// Determinant of the central-difference derivative of the shift map in the
// moment arguments, relative step h_rel per component.
double fd_jacobian_det(const InertiaTriple& t, double x, double h_rel,
                       const Tolerances& tol) {
  const std::array<double, 3> base{t.a, t.b, t.c};
  double m[3][3];
  for (int j = 0; j < 3; ++j) {
    const double h = h_rel * base[j];
    std::array<double, 3> up = base;
    std::array<double, 3> dn = base;
    up[j] += h;
    dn[j] -= h;
    const InertiaTriple fu =
        inertia_map(validate_triple(up[0], up[1], up[2], tol), x, tol);
    const InertiaTriple fd =
        inertia_map(validate_triple(dn[0], dn[1], dn[2], tol), x, tol);
    m[0][j] = (fu.a - fd.a) / (2 * h);
    m[1][j] = (fu.b - fd.b) / (2 * h);
    m[2][j] = (fu.c - fd.c) / (2 * h);
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::size_t samples,
                                               std::uint64_t seed,
                                               const Tolerances& tol) {
  if (samples == 0)
    throw error(errc::invalid_argument, "sample count must be positive");

  std::vector<PropertyResult> out;
  std::uint64_t stream = 0;
  const auto run = [&](const std::string& name, double threshold,
                       std::size_t count, auto&& body) {
    SampleRng rng(seed ^ (0x9e3779b97f4a7c15ULL * ++stream));
    const double worst = body(rng);
    out.push_back({name, count, worst, threshold, worst <= threshold});
  };

  run("shift_additivity", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 10);
      const double y = rng.uniform(0, 10);
      worst = std::max(worst,
                       rel3(inertia_map(inertia_map(t, y, tol), x, tol),
                            inertia_map(t, x + y, tol)));
    }
    return worst;
  });

  run("shift_commutativity", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 10);
      const double y = rng.uniform(0, 10);
      worst = std::max(worst,
                       rel3(inertia_map(inertia_map(t, y, tol), x, tol),
                            inertia_map(inertia_map(t, x, tol), y, tol)));
    }
    return worst;
  });

  run("neutral_shift", 1e-15, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      worst = std::max(worst, rel3(inertia_map(t, 0.0, tol), t));
    }
    return worst;
  });

  run("orbit_closure", 0.0, samples, [&](SampleRng& rng) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 1e3);
      const double y = rng.uniform(0, 1e3);
      try {
        const InertiaTriple u = inertia_map(t, y, tol);
        validate_triple(u.a, u.b, u.c, tol);
        const InertiaTriple v = inertia_map(u, x, tol);
        validate_triple(v.a, v.b, v.c, tol);
      } catch (const error&) {
        ++bad;
      }
    }
    return static_cast<double>(bad) / static_cast<double>(samples);
  });

  run("vieta_consistency", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 100);
      const InvariantScalars s = invariants(t, x);
      const InertiaTriple u = inertia_map(t, x, tol);
      worst = std::max({worst, rel_diff(u.a + u.c, s.tr),
                        rel_diff(u.a * u.c, s.det)});
    }
    return worst;
  });

  run("closed_form_identities", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 100);
      const IdentityReport rep = identity_checks(t, x, tol);
      if (!rep.delta_positive || !rep.ordered) return 1.0;
      worst = std::max({worst, rep.separation.residual,
                        rep.eigen_sum.residual, rep.eigen_product.residual});
    }
    return worst;
  });

  run("discriminant_shift", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 10);
      const double y = rng.uniform(0, 10);
      const double lhs = invariants(inertia_map(t, y, tol), x).delta;
      const double rhs = invariants(t, x + y).delta;
      worst = std::max(worst, rel_diff(lhs, rhs));
    }
    return worst;
  });

  run("discriminant_extremum", 1e-12, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const ExtremumReport ex = delta_extremum(t);
      const long double a = t.a, b = t.b, c = t.c, x = ex.x_min;
      const long double tr = a + c + x;
      const long double det = a * c * (1.0L + x / b);
      const double direct = static_cast<double>(tr * tr - 4.0L * det);
      worst = std::max(worst, rel_diff(direct, ex.delta_min));
    }
    return worst;
  });

  run("jacobian_at_zero", 1e-12, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i)
      worst = std::max(worst,
                       std::abs(jacobian_det(draw_triple(rng), 0.0) - 1.0));
    return worst;
  });

  run("jacobian_finite_difference", tol.eps_fd, samples,
      [&](SampleRng& rng) {
        double worst = 0;
        for (std::size_t i = 0; i < samples; ++i) {
          const InertiaTriple t = rng.triple_log_uniform(1e-2, 1e2, 1e-2);
          const double x = rng.uniform(0, 10);
          worst = std::max(worst, rel_diff(jacobian_det(t, x),
                                           fd_jacobian_det(t, x, 1e-6, tol)));
        }
        return worst;
      });

  run("complex_group_law", 1e-10, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      ComplexTriple t{0, 0, 0};
      cplx x, y;
      do {
        t = {rng.box(3.0), rng.box(3.0), rng.box(3.0)};
        x = rng.box(7.0);
        y = rng.box(7.0);
      } while (std::abs(t.b) < 1e-6 || std::abs(t.b + y) < 1e-6);
      const ComplexTriple two = inertia_map(inertia_map(t, y, tol), x, tol);
      const ComplexTriple one = inertia_map(t, x + y, tol);
      worst = std::max(worst, involution_distance(two, one));
    }
    return worst;
  });

  run("complex_inverse", 1e-10, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      ComplexTriple t{0, 0, 0};
      cplx x;
      do {
        t = {rng.box(3.0), rng.box(3.0), rng.box(3.0)};
        x = rng.box(7.0);
      } while (std::abs(t.b) < 1e-6 || std::abs(t.b + x) < 1e-6);
      const ComplexTriple back =
          inertia_map_inverse(inertia_map(t, x, tol), x, tol);
      worst = std::max(worst, involution_distance(back, t));
    }
    return worst;
  });

  run("complex_sheet_symmetry", 1e-12, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      ComplexTriple t{0, 0, 0};
      cplx x;
      do {
        t = {rng.box(3.0), rng.box(3.0), rng.box(3.0)};
        x = rng.box(7.0);
      } while (std::abs(t.b) < 1e-6);
      const ComplexTriple image = inertia_map(t, x, tol);
      worst = std::max({worst,
                        involution_distance(inertia_map(involution(t), x, tol),
                                            image),
                        involution_distance(involution(image), image)});
    }
    return worst;
  });

  run("complex_real_agreement", 4.5e-16, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 10);
      const InertiaTriple re = inertia_map(t, x, tol);
      const ComplexTriple cp = inertia_map(to_complex(t), cplx(x), tol);
      worst = std::max({worst, rel_diff(cp.a.real(), re.a),
                        rel_diff(cp.b.real(), re.b),
                        rel_diff(cp.c.real(), re.c), std::abs(cp.a.imag()),
                        std::abs(cp.b.imag()), std::abs(cp.c.imag())});
    }
    return worst;
  });

  run("scaling_conjugation", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x1 = rng.log_uniform(1e-2, 1e2);
      const double x2 = rng.uniform(0, 10);
      const InertiaTriple lhs =
          scale(inertia_map(scale(t, x1, tol), x2, tol), 1.0 / x1, tol);
      const InertiaTriple rhs = inertia_map(t, x2 / x1, tol);
      worst = std::max(worst, rel3(lhs, rhs));
    }
    return worst;
  });

  run("extension_action_real", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const ScaledShift e1 =
          make_scaled_shift(rng.log_uniform(0.1, 10), rng.uniform(0, 5),
                            ScalingContext::real_semigroup);
      const ScaledShift e2 =
          make_scaled_shift(rng.log_uniform(0.1, 10), rng.uniform(0, 5),
                            ScalingContext::real_semigroup);
      worst = std::max(worst, rel3(apply(compose(e1, e2), t, tol),
                                   apply(e1, apply(e2, t, tol), tol)));
    }
    return worst;
  });

  run("extension_action_complex", 1e-10, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      ComplexTriple t{0, 0, 0};
      cplx a1, b1, a2, b2;
      do {
        t = {rng.box(3.0), rng.box(3.0), rng.box(3.0)};
        a1 = rng.box(2.0);
        b1 = rng.box(2.0);
        a2 = rng.box(2.0);
        b2 = rng.box(2.0);
      } while (std::abs(t.b) < 1e-3 || std::abs(a1) < 0.1 ||
               std::abs(a2) < 0.1 || std::abs(a2 * t.b + b2) < 1e-3);
      const ScaledShift e1 =
          make_scaled_shift(a1, b1, ScalingContext::complex_group);
      const ScaledShift e2 =
          make_scaled_shift(a2, b2, ScalingContext::complex_group);
      worst = std::max(worst,
                       involution_distance(apply(compose(e1, e2), t, tol),
                                           apply(e1, apply(e2, t, tol), tol)));
    }
    return worst;
  });

  run("affine_homomorphism", 1e-12, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      cplx a1, a2;
      do {
        a1 = rng.box(2.0);
        a2 = rng.box(2.0);
      } while (a1 == 0.0 || a2 == 0.0);
      const ScaledShift e1 =
          make_scaled_shift(a1, rng.box(2.0), ScalingContext::complex_group);
      const ScaledShift e2 =
          make_scaled_shift(a2, rng.box(2.0), ScalingContext::complex_group);
      const AffineMap lhs = to_affine(compose(e1, e2));
      const AffineMap rhs = affine_compose(to_affine(e1), to_affine(e2));
      const double sa = std::max({std::abs(lhs.a), std::abs(rhs.a), 1.0});
      const double sb = std::max({std::abs(lhs.b), std::abs(rhs.b), 1.0});
      worst = std::max({worst, std::abs(lhs.a - rhs.a) / sa,
                        std::abs(lhs.b - rhs.b) / sb});
    }
    return worst;
  });

  run("nonabelian_witness", 0.0, 1, [&](SampleRng&) {
    const auto mk = [](double a, double b) {
      return make_scaled_shift(a, b, ScalingContext::complex_group);
    };
    const ScaledShift lhs = compose(mk(2, 0), mk(1, 1));
    const ScaledShift rhs = compose(mk(1, 1), mk(2, 0));
    const bool lhs_ok = lhs.a == 2.0 && lhs.b == 2.0;
    const bool rhs_ok = rhs.a == 2.0 && rhs.b == 1.0;
    return lhs_ok && rhs_ok && lhs.b != rhs.b ? 0.0 : 1.0;
  });

  run("geometry_oracle", tol.eps_oracle, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 100);
      const AxisVector n = galois_axes(t).first;
      const std::array<double, 3> ev =
          sym3_eigenvalues(steiner_tensor(t, n, x));
      const InertiaTriple im = inertia_map(t, x, tol);
      worst = std::max({worst, rel_diff(ev[0], im.a), rel_diff(ev[1], im.b),
                        rel_diff(ev[2], im.c)});
    }
    return worst;
  });

  run("sheet_agreement", 1e-12, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 100);
      const auto [plus, minus] = galois_axes(t);
      worst = std::max(
          worst, max_norm_rel(sym3_eigenvalues(steiner_tensor(t, plus, x)),
                              sym3_eigenvalues(steiner_tensor(t, minus, x))));
    }
    return worst;
  });

  run("block_invariants", tol.eps_id, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 100);
      const InertiaTensor m = steiner_tensor(t, galois_axes(t).first, x);
      const long double tr_block =
          static_cast<long double>(m.xx) + static_cast<long double>(m.zz);
      const long double det_block =
          static_cast<long double>(m.xx) * static_cast<long double>(m.zz) -
          static_cast<long double>(m.xz) * static_cast<long double>(m.xz);
      const long double a = t.a, b = t.b, c = t.c, lx = x;
      const double tr_rel = static_cast<double>(
          std::abs(tr_block - (a + c + lx)) / (a + c + lx));
      const long double det_ref = a * c * (1.0L + lx / b);
      const double det_rel =
          static_cast<double>(std::abs(det_block - det_ref) / det_ref);
      worst = std::max({worst, tr_rel, det_rel});
    }
    return worst;
  });

  run("eigen_residual", 1e-10, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      InertiaTensor m;
      if (i % 2 == 0) {
        const InertiaTriple t = draw_triple(rng);
        const AxisVector n = make_unit_axis(rng.uniform(-1, 1),
                                            rng.uniform(-1, 1),
                                            rng.uniform(-1, 1));
        m = steiner_tensor(t, n, rng.uniform(0, 100));
      } else {
        m = {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10),
             rng.uniform(-10, 10), rng.uniform(-10, 10),
             rng.uniform(-10, 10)};
      }
      const EigenSystem3 es = sym3_eigensystem(m);
      const double mat[3][3] = {{m.xx, m.xy, m.xz},
                                {m.xy, m.yy, m.yz},
                                {m.xz, m.yz, m.zz}};
      double fro = 0;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) fro += mat[r][c] * mat[r][c];
      fro = std::sqrt(fro);
      for (int k = 0; k < 3; ++k) {
        double err2 = 0;
        for (int r = 0; r < 3; ++r) {
          double mv = 0;
          for (int c = 0; c < 3; ++c) mv += mat[r][c] * es.vectors[k][c];
          const double diff = mv - es.values[k] * es.vectors[k][r];
          err2 += diff * diff;
        }
        worst = std::max(worst, std::sqrt(err2) / fro);
      }
    }
    return worst;
  });

  run("circular_section", 1e-10, samples, [&](SampleRng& rng) {
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const auto [plus, minus] = galois_axes(t);
      for (const AxisVector& n : {plus, minus}) {
        worst = std::max(worst, maccullagh_residual(t, n));
        const auto [r2min, r2max] = section_radius_extrema(t, n);
        worst = std::max(worst, (r2max - r2min) / r2max);
      }
    }
    return worst;
  });

  run("galois_additivity", 1e-10, samples, [&](SampleRng& rng) {
    const AxisRule rule = GaloisRule{+1};
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 10);
      const double y = rng.uniform(0, 10);
      try {
        worst = std::max(worst, additivity_residual(rule, t, x, y, tol));
      } catch (const error&) {
        return 1.0;
      }
    }
    return worst;
  });

  run("principal_additivity", 1e-12, samples, [&](SampleRng& rng) {
    const AxisRule rule = PrincipalRule{1};
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const InertiaTriple t = draw_triple(rng);
      const double x = rng.uniform(0, 10);
      const double y = rng.uniform(0, 10);
      try {
        worst = std::max(worst, additivity_residual(rule, t, x, y, tol));
      } catch (const error&) {
        return 1.0;
      }
    }
    return worst;
  });

  run("skew_axis_violation", 0.0, 1, [&](SampleRng&) {
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const AxisRule rule =
        FixedDirectionRule{make_unit_axis(inv_sqrt3, inv_sqrt3, inv_sqrt3)};
    const double r =
        additivity_residual(rule, InertiaTriple{1, 2, 4}, 1.0, 1.0, tol);
    return r > 1e-6 ? 0.0 : 1.0;
  });

  return out;
}

}  // namespace steiner
