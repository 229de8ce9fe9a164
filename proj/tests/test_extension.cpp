#include <doctest.h>

#include <cmath>

#include "steiner/extension.hpp"
#include "steiner/inertia_map.hpp"
#include "steiner/sampling.hpp"
#include "test_support.hpp"

using namespace steiner;
using steiner::test::rel3;
using steiner::test::thrown_code;

namespace {

ScaledShift real_elem(double a, double b) {
  return make_scaled_shift(a, b, ScalingContext::real_semigroup);
}

ScaledShift group_elem(cplx a, cplx b) {
  return make_scaled_shift(a, b, ScalingContext::complex_group);
}

}  // namespace

TEST_CASE("componentwise scaling") {
  const InertiaTriple t = scale(InertiaTriple{1, 2, 4}, 2.5);
  CHECK(t.a == 2.5);
  CHECK(t.b == 5.0);
  CHECK(t.c == 10.0);

  CHECK(thrown_code([] { scale(InertiaTriple{1, 2, 4}, 0.0); }) ==
        errc::zero_scale);
  CHECK(thrown_code([] { scale(InertiaTriple{1, 2, 4}, -1.0); }) ==
        errc::invalid_argument);

  const ComplexTriple u = scale(ComplexTriple{1, 2, 4}, cplx(0, 1));
  CHECK(u.a == cplx(0, 1));
  CHECK(u.b == cplx(0, 2));
  CHECK(u.c == cplx(0, 4));
  CHECK(thrown_code([] { scale(ComplexTriple{1, 2, 4}, cplx(0, 0)); }) ==
        errc::zero_scale);
}

TEST_CASE("parameter validation per context") {
  CHECK_NOTHROW(real_elem(2, 3));
  CHECK_NOTHROW(real_elem(2, 0));
  CHECK(thrown_code([] { real_elem(-1, 3); }) == errc::invalid_argument);
  CHECK(thrown_code([] { real_elem(2, -1); }) == errc::invalid_argument);
  CHECK(thrown_code([] {
          make_scaled_shift(cplx(2, 1), 0, ScalingContext::real_semigroup);
        }) == errc::invalid_argument);
  CHECK(thrown_code([] {
          make_scaled_shift(0, 1, ScalingContext::complex_group);
        }) == errc::zero_scale);
  CHECK_NOTHROW(group_elem(cplx(0, 1), cplx(3, -2)));
}

TEST_CASE("composition law (a1, b1)(a2, b2) = (a1 a2, b1 + a1 b2)") {
  const ScaledShift p = compose(group_elem(2, 3), group_elem(5, 7));
  CHECK(p.a == cplx(10));
  CHECK(p.b == cplx(17));

  const ScaledShift neutral = group_elem(1, 0);
  const ScaledShift e = group_elem(cplx(2, -1), cplx(0, 3));
  const ScaledShift left = compose(neutral, e);
  const ScaledShift right = compose(e, neutral);
  CHECK(left.a == e.a);
  CHECK(left.b == e.b);
  CHECK(right.a == e.a);
  CHECK(right.b == e.b);

  CHECK(thrown_code([] {
          compose(make_scaled_shift(2, 3, ScalingContext::real_semigroup),
                  make_scaled_shift(2, 3, ScalingContext::complex_group));
        }) == errc::invalid_argument);
}

TEST_CASE("the extension is not abelian") {
  const ScaledShift lhs = compose(group_elem(2, 0), group_elem(1, 1));
  const ScaledShift rhs = compose(group_elem(1, 1), group_elem(2, 0));
  CHECK(lhs.a == cplx(2));
  CHECK(lhs.b == cplx(2));
  CHECK(rhs.a == cplx(2));
  CHECK(rhs.b == cplx(1));
  CHECK(lhs.b != rhs.b);
}

TEST_CASE("inverses exist in the group, only shift-free ones in the cone") {
  const ScaledShift inv = inverse(group_elem(2, 3));
  CHECK(inv.a == cplx(0.5));
  CHECK(inv.b == cplx(-1.5));
  const ScaledShift round = compose(group_elem(2, 3), inv);
  CHECK(round.a == cplx(1));
  CHECK(round.b == cplx(0));

  const ScaledShift scale_only = inverse(real_elem(2, 0));
  CHECK(scale_only.a == cplx(0.5));
  CHECK(scale_only.b == cplx(0));
  CHECK(!std::signbit(scale_only.b.real()));

  CHECK(thrown_code([] { inverse(real_elem(2, 3)); }) ==
        errc::no_inverse_in_semigroup);
}

TEST_CASE("apply scales first and then shifts") {
  // (2, 3) on (1, 2, 4): scale to (2, 4, 8), then shift by 3.
  const InertiaTriple im = apply(real_elem(2, 3), InertiaTriple{1, 2, 4});
  CHECK(im.b == 7.0);
  const long double root57 = sqrtl(57.0L);
  CHECK(im.a == doctest::Approx(static_cast<double>((13.0L - root57) / 2.0L))
                    .epsilon(1e-15));
  CHECK(im.c == doctest::Approx(static_cast<double>((13.0L + root57) / 2.0L))
                    .epsilon(1e-15));

  // Neutral element and pure scaling.
  const InertiaTriple same = apply(real_elem(1, 0), InertiaTriple{1, 2, 4});
  CHECK(rel3(same, InertiaTriple{1, 2, 4}) < 4.5e-16);
  const InertiaTriple doubled = apply(real_elem(2, 0), InertiaTriple{1, 2, 4});
  CHECK(rel3(doubled, InertiaTriple{2, 4, 8}) < 4.5e-16);
}

TEST_CASE("product acts as composition of actions") {
  SampleRng rng(31);
  double worst_real = 0;
  for (int i = 0; i < 500; ++i) {
    const InertiaTriple t = rng.triple_log_uniform(1e-2, 1e2, 1e-6);
    const ScaledShift e1 = real_elem(rng.log_uniform(0.1, 10),
                                     rng.uniform(0, 5));
    const ScaledShift e2 = real_elem(rng.log_uniform(0.1, 10),
                                     rng.uniform(0, 5));
    worst_real = std::max(worst_real, rel3(apply(compose(e1, e2), t),
                                           apply(e1, apply(e2, t))));
  }
  CHECK(worst_real < 1e-11);

  double worst_cplx = 0;
  for (int i = 0; i < 500; ++i) {
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
    const ScaledShift e1 = group_elem(a1, b1);
    const ScaledShift e2 = group_elem(a2, b2);
    worst_cplx = std::max(worst_cplx,
                          involution_distance(apply(compose(e1, e2), t),
                                              apply(e1, apply(e2, t))));
  }
  CHECK(worst_cplx < 1e-10);
}

TEST_CASE("scaling conjugation moves the shift parameter") {
  SampleRng rng(32);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const InertiaTriple t = rng.triple_log_uniform(1e-2, 1e2, 1e-6);
    const double x1 = rng.log_uniform(1e-2, 1e2);
    const double x2 = rng.uniform(0, 10);
    const InertiaTriple lhs =
        scale(inertia_map(scale(t, x1), x2), 1.0 / x1);
    const InertiaTriple rhs = inertia_map(t, x2 / x1);
    worst = std::max(worst, rel3(lhs, rhs));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("parameters compose exactly like affine maps of the shift line") {
  const AffineMap al = to_affine(group_elem(2, 3));
  CHECK(affine_apply(al, 5.0) == cplx(13));
  CHECK(affine_apply(al, cplx(0, 1)) == cplx(3, 2));

  // Dyadic-rational parameters compose without any rounding at all.
  const ScaledShift e1 = group_elem(cplx(2, 0.5), cplx(3.5, -1));
  const ScaledShift e2 = group_elem(cplx(0.25, 0), cplx(-1.5, 2));
  const ScaledShift prod = compose(e1, e2);
  const AffineMap via_affine = affine_compose(to_affine(e1), to_affine(e2));
  CHECK(prod.a == via_affine.a);
  CHECK(prod.b == via_affine.b);

  SampleRng rng(33);
  for (int i = 0; i < 500; ++i) {
    cplx a1, a2;
    do {
      a1 = rng.box(2.0);
      a2 = rng.box(2.0);
    } while (a1 == 0.0 || a2 == 0.0);
    const ScaledShift f1 = group_elem(a1, rng.box(2.0));
    const ScaledShift f2 = group_elem(a2, rng.box(2.0));
    const ScaledShift p = compose(f1, f2);
    const AffineMap q = affine_compose(to_affine(f1), to_affine(f2));
    CHECK(p.a == q.a);
    CHECK(p.b == q.b);
  }
}
