#include "steiner/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "steiner/format.hpp"
#include "steiner/sampling.hpp"

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

void require_unit(const AxisVector& n) {
  if (!std::isfinite(n.n1) || !std::isfinite(n.n2) || !std::isfinite(n.n3))
    throw error(errc::invalid_argument, "axis components must be finite");
  const double len2 = n.n1 * n.n1 + n.n2 * n.n2 + n.n3 * n.n3;
  if (std::abs(len2 - 1.0) > 1e-12)
    throw error(errc::non_unit_axis, "axis direction must have unit length");
}

AxisVector cross(const AxisVector& p, const AxisVector& q) {
  return {p.n2 * q.n3 - p.n3 * q.n2, p.n3 * q.n1 - p.n1 * q.n3,
          p.n1 * q.n2 - p.n2 * q.n1};
}

// Orthonormal basis of the plane normal to the unit vector n. The
// coordinate axis least aligned with n seeds the cross product.
std::pair<AxisVector, AxisVector> plane_basis(const AxisVector& n) {
  int k = 0;
  double smallest = std::abs(n.n1);
  if (std::abs(n.n2) < smallest) {
    k = 1;
    smallest = std::abs(n.n2);
  }
  if (std::abs(n.n3) < smallest) k = 2;
  const AxisVector seed{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0,
                        k == 2 ? 1.0 : 0.0};
  const AxisVector raw = cross(n, seed);
  const double len = std::sqrt(raw.n1 * raw.n1 + raw.n2 * raw.n2 +
                               raw.n3 * raw.n3);
  const AxisVector u{raw.n1 / len, raw.n2 / len, raw.n3 / len};
  return {u, cross(n, u)};
}

// Inverse squared radius of the momental ellipsoid along the unit
// direction d.
double inverse_sq_radius(const InertiaTriple& t, const AxisVector& d) {
  return d.n1 * d.n1 / t.a + d.n2 * d.n2 / t.b + d.n3 * d.n3 / t.c;
}

}  // namespace

AxisVector make_unit_axis(double n1, double n2, double n3) {
  if (!std::isfinite(n1) || !std::isfinite(n2) || !std::isfinite(n3))
    throw error(errc::invalid_argument, "axis components must be finite");
  const double len = std::sqrt(n1 * n1 + n2 * n2 + n3 * n3);
  if (len == 0)
    throw error(errc::non_unit_axis, "axis direction must be nonzero");
  return {n1 / len, n2 / len, n3 / len};
}

std::pair<AxisVector, AxisVector> galois_axes(const InertiaTriple& t) {
  // sin^2 and cos^2 are both quotients of positive well-separated factors
  // on the ordered cone, and they sum to 1 identically.
  const double denom = t.b * (t.c - t.a);
  const double s = std::sqrt(t.a * (t.c - t.b) / denom);
  const double c = std::sqrt(t.c * (t.b - t.a) / denom);
  const double len = std::hypot(c, s);
  const double n1 = c / len;
  const double n3 = s / len;
  return {AxisVector{n1, 0.0, n3}, AxisVector{n1, 0.0, -n3}};
}

InertiaTensor steiner_tensor(const InertiaTriple& t, const AxisVector& n,
                             double x) {
  require_shift(x);
  require_unit(n);
  // 1 - n_i^2 is written as the sum of the other two squares, keeping every
  // diagonal entry a sum of nonnegative terms.
  return {
      t.a + x * (n.n2 * n.n2 + n.n3 * n.n3),
      -x * n.n1 * n.n2,
      -x * n.n1 * n.n3,
      t.b + x * (n.n1 * n.n1 + n.n3 * n.n3),
      -x * n.n2 * n.n3,
      t.c + x * (n.n1 * n.n1 + n.n2 * n.n2),
  };
}

EigenSystem3 sym3_eigensystem(const InertiaTensor& m) {
  double a[3][3] = {{m.xx, m.xy, m.xz},
                    {m.xy, m.yy, m.yz},
                    {m.xz, m.yz, m.zz}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!std::isfinite(a[i][j]))
        throw error(errc::invalid_argument, "tensor entries must be finite");

  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const double eps = std::numeric_limits<double>::epsilon();

  // Cyclic Jacobi. Each sweep visits the three off-diagonal entries once;
  // entries negligible against their diagonal neighbours are flushed to
  // zero, which guarantees termination.
  for (int sweep = 0; sweep < 50; ++sweep) {
    const double off =
        std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a[p][q];
        const double app = a[p][p];
        const double aqq = a[q][q];
        if (std::abs(apq) <= 0.5 * eps * (std::abs(app) + std::abs(aqq))) {
          a[p][q] = a[q][p] = 0.0;
          continue;
        }
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const int r = 3 - p - q;
        const double apr = a[p][r];
        const double aqr = a[q][r];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        a[p][r] = a[r][p] = apr - s * (aqr + tau * apr);
        a[q][r] = a[r][q] = aqr + s * (apr - tau * aqr);
        for (int i = 0; i < 3; ++i) {
          const double vip = v[i][p];
          const double viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
    }
  }

  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return a[i][i] < a[j][j]; });

  EigenSystem3 out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = a[idx[k]][idx[k]];
    for (int i = 0; i < 3; ++i) out.vectors[k][i] = v[i][idx[k]];
  }
  return out;
}

std::array<double, 3> sym3_eigenvalues(const InertiaTensor& m) {
  return sym3_eigensystem(m).values;
}

double maccullagh_residual(const InertiaTriple& t, const AxisVector& n) {
  require_unit(n);
  const auto [u, w] = plane_basis(n);
  double q_min = std::numeric_limits<double>::infinity();
  double q_max = 0;
  for (int j = 0; j < 360; ++j) {
    const double phi = j * (2.0 * std::numbers::pi / 360.0);
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const AxisVector d{cp * u.n1 + sp * w.n1, cp * u.n2 + sp * w.n2,
                       cp * u.n3 + sp * w.n3};
    const double q = inverse_sq_radius(t, d);
    q_min = std::min(q_min, q);
    q_max = std::max(q_max, q);
  }
  return 1.0 - q_min / q_max;
}

std::pair<double, double> section_radius_extrema(const InertiaTriple& t,
                                                 const AxisVector& n) {
  require_unit(n);
  const auto [u, w] = plane_basis(n);
  // Restriction of the ellipsoid form to the section plane in the (u, w)
  // basis, then the closed-form 2x2 spectrum.
  const double q11 = inverse_sq_radius(t, u);
  const double q22 = inverse_sq_radius(t, w);
  const double q12 =
      u.n1 * w.n1 / t.a + u.n2 * w.n2 / t.b + u.n3 * w.n3 / t.c;
  const double mean = 0.5 * (q11 + q22);
  const double rad = std::hypot(0.5 * (q11 - q22), q12);
  const double q_hi = mean + rad;
  const double q_lo = mean - rad;
  return {1.0 / q_hi, 1.0 / q_lo};
}

std::string rule_name(const AxisRule& rule) {
  if (const auto* g = std::get_if<GaloisRule>(&rule))
    return g->sheet >= 0 ? "galois+" : "galois-";
  if (const auto* p = std::get_if<PrincipalRule>(&rule))
    return "principal" + std::to_string(p->index);
  const auto& f = std::get<FixedDirectionRule>(rule);
  return "fixed(" + format_double(f.axis.n1) + "," +
         format_double(f.axis.n2) + "," + format_double(f.axis.n3) + ")";
}

AxisVector resolve_axis(const AxisRule& rule, const InertiaTriple& t) {
  if (const auto* g = std::get_if<GaloisRule>(&rule)) {
    const auto [plus, minus] = galois_axes(t);
    return g->sheet >= 0 ? plus : minus;
  }
  if (const auto* p = std::get_if<PrincipalRule>(&rule)) {
    if (p->index < 1 || p->index > 3)
      throw error(errc::invalid_argument, "principal axis index must be 1-3");
    return {p->index == 1 ? 1.0 : 0.0, p->index == 2 ? 1.0 : 0.0,
            p->index == 3 ? 1.0 : 0.0};
  }
  const auto& f = std::get<FixedDirectionRule>(rule);
  require_unit(f.axis);
  return f.axis;
}

std::array<double, 3> axis_rule_map(const AxisRule& rule,
                                    const InertiaTriple& t, double x) {
  return sym3_eigenvalues(steiner_tensor(t, resolve_axis(rule, t), x));
}

double additivity_residual(const AxisRule& rule, const InertiaTriple& t,
                           double x, double y, const Tolerances& tol) {
  const std::array<double, 3> first = axis_rule_map(rule, t, y);
  InertiaTriple mid;
  try {
    mid = validate_triple(first[0], first[1], first[2], tol);
  } catch (const error& e) {
    throw error(errc::intermediate_degenerate,
                std::string("rule cannot be re-applied: ") + e.what());
  }
  const std::array<double, 3> two_step = axis_rule_map(rule, mid, x);
  const std::array<double, 3> one_step = axis_rule_map(rule, t, x + y);
  double num = 0;
  double den = 0;
  for (int i = 0; i < 3; ++i) {
    num = std::max(num, std::abs(two_step[i] - one_step[i]));
    den = std::max(den, std::abs(one_step[i]));
  }
  return num / den;
}

FalsifyReport falsify_search(std::span<const AxisRule> rules,
                             std::size_t samples, std::uint64_t seed,
                             const Tolerances& tol, std::size_t threads) {
  if (rules.empty())
    throw error(errc::invalid_argument, "at least one axis rule is required");
  if (samples == 0)
    throw error(errc::invalid_argument, "sample count must be positive");

  // All draws come from one sequential stream before any evaluation starts,
  // so the work split cannot influence the sample set.
  std::vector<FalsifySample> draws;
  draws.reserve(samples);
  SampleRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const InertiaTriple t = rng.triple_log_uniform(1e-2, 1e2);
    const double x = rng.uniform(0.0, 10.0);
    const double y = rng.uniform(0.0, 10.0);
    draws.push_back({t.a, t.b, t.c, x, y});
  }

  std::size_t n_threads =
      threads ? threads
              : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  n_threads = std::min(n_threads, samples);

  FalsifyReport report;
  report.seed = seed;
  report.samples = samples;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const AxisRule& rule : rules) {
    std::vector<double> residuals(samples, nan);
    auto worker = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const FalsifySample& s = draws[i];
        try {
          residuals[i] =
              additivity_residual(rule, {s.a, s.b, s.c}, s.x, s.y, tol);
        } catch (const error&) {
          // A draw the rule cannot handle stays NaN and is counted below.
        }
      }
    };
    if (n_threads <= 1) {
      worker(0, samples);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(n_threads);
      const std::size_t chunk = (samples + n_threads - 1) / n_threads;
      for (std::size_t k = 0; k < n_threads; ++k) {
        const std::size_t lo = k * chunk;
        const std::size_t hi = std::min(samples, lo + chunk);
        if (lo < hi) pool.emplace_back(worker, lo, hi);
      }
      for (std::thread& th : pool) th.join();
    }

    RuleReport rr;
    rr.rule = rule_name(rule);
    rr.samples = samples;
    std::vector<double> evaluated;
    evaluated.reserve(samples);
    double max_res = -1;
    std::size_t worst_idx = samples;
    for (std::size_t i = 0; i < samples; ++i) {
      if (std::isnan(residuals[i])) {
        ++rr.failures;
        continue;
      }
      evaluated.push_back(residuals[i]);
      if (residuals[i] > max_res) {
        max_res = residuals[i];
        worst_idx = i;
      }
    }
    if (!evaluated.empty()) {
      rr.max_residual = max_res;
      rr.worst = draws[worst_idx];
      const std::size_t mid = (evaluated.size() - 1) / 2;
      std::nth_element(evaluated.begin(), evaluated.begin() + mid,
                       evaluated.end());
      rr.median_residual = evaluated[mid];
    }
    report.rules.push_back(std::move(rr));
  }
  return report;
}

}  // namespace steiner
