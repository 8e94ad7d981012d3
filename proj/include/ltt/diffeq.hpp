#pragma once

#include <complex>
#include <vector>

#include "ltt/algnum.hpp"
#include "ltt/exact.hpp"
#include "ltt/jsonio.hpp"
#include "ltt/polynomial.hpp"

namespace ltt {

// Linear constant-coefficient recurrence
//   a_0 f_n + a_1 f_{n-1} + ... + a_p f_{n-p} = g_n   for n >= p,
// with f_0 .. f_{p-1} given.  a_p must be nonzero; a_0 may vanish (the
// recurrence then only constrains later terms and is solved in reduced form).
struct DifferenceEquation {
  enum class Rhs { Zero, Array, Constant };

  std::vector<Rational> a;     // a_0 .. a_p
  std::vector<Rational> init;  // f_0 .. f_{p-1}
  Rhs rhs = Rhs::Zero;
  std::vector<Rational> rhs_values;  // used when rhs == Array
  Rational rhs_constant;             // used when rhs == Constant

  int order() const { return static_cast<int>(a.size()) - 1; }
  Rational rhs_at(int n) const;
  void validate() const;
};

// Generating polynomial Q(z) = sum_k a_k z^k of the coefficient row.
Poly<Rational> build_Q(const DifferenceEquation& eq);

// Image-side companion ODE: the recurrence is the backward-difference image of
// sum_k b_k y^{(k)} with b_k = (-1)^k Q^{(k)}(1) / k!.  Exact.
struct OdeSpec {
  Poly<Rational> Q;
  std::vector<Rational> b;
  // Characteristic polynomial sum_k b_k x^k; equals Q(1 - x) identically.
  Poly<Rational> characteristic() const;
};
OdeSpec ode_coefficients(const Poly<Rational>& Q);

// One closed-form summand P(n) * base^n.  Exact mirrors are kept whenever the
// base lives in Q or a single quadratic extension.
struct SolutionTerm {
  std::vector<std::complex<double>> poly;  // P coefficients, ascending in n
  std::complex<double> base;
  bool exact = false;
  std::vector<QuadExt> poly_exact;
  QuadExt base_exact;
};

struct ClosedFormSolution {
  std::vector<SolutionTerm> terms;
  bool exact = false;             // every term carries an exact mirror
  bool degenerate_bypass = false; // a_0 = 0: solved as a shifted lower-order equation
  int shift = 0;                  // index offset applied by the bypass
  std::vector<Rational> particular;  // convolution part, values at n = 0..n_check
  bool has_particular = false;
  double residual = 0.0;  // max |sum_k a_k f_{n-k} - g_n| over checked n, plus
                          // any mismatch against the supplied initial values
  double eval(int n) const;
  Json to_json() const;
};

// Solve by the image route: Q -> companion ODE -> characteristic roots ->
// geometric basis -> constants fitted to the initial data.  The residual is
// re-checked against the original recurrence for n <= n_check.
ClosedFormSolution solve(const DifferenceEquation& eq, int n_check = 50);

// Impulse response: a_0 Y_0 = 1 and sum_k a_k Y_{n-k} = 0 for n >= 1.
// Requires a_0 != 0.
std::vector<Rational> fundamental_sequence(const std::vector<Rational>& a, int n_max);

// f_n = sum_{k<=n} Y_{n-k} g_k; both inputs must have equal length.
std::vector<Rational> particular_via_convolution(const std::vector<Rational>& y,
                                                 const std::vector<Rational>& g);

// Residual reports for the three worked image-side problems (cases 4, 5, 6).
// Each report carries exact-arithmetic residuals of the stated solution in the
// stated equation plus a quadrature cross-check of the underlying functions.
Json verify_mapped_equation(int case_id);

}  // namespace ltt
