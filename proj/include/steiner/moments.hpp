#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace steiner {

using cplx = std::complex<double>;

// Error codes surfaced by the library. errc_name() yields the stable
// machine-readable token the CLI prints on stderr.
enum class errc {
  non_positive,
  degenerate,
  disordered,
  negative_parameter,
  pole_at_zero_b,
  zero_scale,
  no_inverse_in_semigroup,
  non_unit_axis,
  intermediate_degenerate,
  ordering_violation,
  invalid_argument,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Principal moments at the center of mass, strictly ordered 0 < a < b < c.
// Construct through validate_triple(); every map in the library assumes the
// ordering invariant already holds.
struct InertiaTriple {
  double a = 0;
  double b = 0;
  double c = 0;
};

// Unordered complex moments for the two-valued maps. No constraints are
// imposed here; operations that divide by b report the pole themselves.
struct ComplexTriple {
  cplx a;
  cplx b;
  cplx c;
};

struct Tolerances {
  double eps_deg = 1e-12;     // relative separation below which moments count as equal
  double eps_id = 1e-11;      // closed-form identity tolerance
  double eps_oracle = 1e-9;   // map vs. eigensolver agreement
  double eps_fd = 1e-5;       // finite-difference Jacobian agreement
};

// Checks 0 < a < b < c with relative separation at least tol.eps_deg and
// returns the validated triple. Throws error with code non_positive,
// disordered, degenerate or invalid_argument.
InertiaTriple validate_triple(double a, double b, double c,
                              const Tolerances& tol = {});

inline ComplexTriple to_complex(const InertiaTriple& t) {
  return {t.a, t.b, t.c};
}

// (a, b, c) -> (c, b, a). Exact and self-inverse; swaps the two sheets of
// the two-valued maps.
ComplexTriple involution(const ComplexTriple& t);

// Distance between two triples up to involution, measured through the
// symmetric functions a + c and a * c together with the middle component,
// each scaled by the magnitude of the values entering it. Zero ordering
// information about a and c is needed.
double involution_distance(const ComplexTriple& t1, const ComplexTriple& t2);

// involution_distance(t1, t2) <= tol.
bool eq_mod_involution(const ComplexTriple& t1, const ComplexTriple& t2,
                       double tol);

}  // namespace steiner
