#pragma once

#include <string>
#include <vector>

#include "ltt/exact.hpp"
#include "ltt/jsonio.hpp"
#include "ltt/polynomial.hpp"
#include "ltt/quadrature.hpp"

namespace ltt {

// Gamma on the positive axis; domain-checked wrapper.
double gamma_fn(double x);

// 1/Gamma as an entire function: exactly zero at 0, -1, -2, ...
double recip_gamma(double x);

// Rising factorial x (x+1) ... (x+m-1), m >= 0, computed as a plain product
// so it stays finite across the poles of the Gamma-ratio form.
double pochhammer(double x, int m);

struct ZetaResult {
  double value = 0.0;
  std::string method;
  double error_estimate = 0.0;         // absolute
  std::vector<double> partial_sums;    // filled by the asymptotic representation
  Json to_json() const;
};

// Direct series sum_{k>=0} (a+k)^{-s}; s > 1, a > 0.  The tail is bounded by
// the integral comparison (a+K)^{1-s}/(s-1).
ZetaResult hurwitz_series(double s, double a, double tol = 1e-12, long max_terms = 2000000);

// Euler-Maclaurin continuation; any real s except 1, a > 0.  Reference
// implementation the other routes are checked against.
ZetaResult hurwitz_em(double s, double a);

// The two geometric source kernels behind the integral routes.  Exposed so
// callers can feed them through the general transform machinery directly;
// both have a simple pole at the origin, so the n = 0 image entry diverges.
SourceFunction geometric_kernel();
SourceFunction shifted_geometric_kernel();

// Integral representation: the (s-1)-weighted transform of 1/(1 - e^{-t})
// read at abscissa a.  Needs s > 1 (origin behavior) and a > 0.
ZetaResult hurwitz_integral(double s, double a, double tol = 1e-10);

// Same route with 1/(e^t - 1): evaluates zeta(s, a+1).
ZetaResult hurwitz_integral_shifted(double s, double a, double tol = 1e-10);

// Exact Bernoulli numbers B_0..B_k (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_numbers(int k_max);

// Exact Bernoulli polynomial B_k(a) as a polynomial in a; satisfies
// B_k'(a) = k B_{k-1}(a).
Poly<Rational> bernoulli_poly(int k);

// zeta(1-k, a) = -B_k(a)/k, exact, k >= 1.
Rational zeta_negative_integer(int k, const Rational& a);

// Asymptotic Bernoulli representation of zeta(s, a+1):
//   1/((2a)^{s-1}(s-1)) - sum_{k>=1} zeta(1-k, a) (s)_{k-1} / ((2a)^{s+k-1} k!).
// The series does not converge; partial sums are reported as-is and the last
// term's size is the quoted error estimate.
ZetaResult hurwitz_bernoulli_representation(double s, double a, int k_terms);

}  // namespace ltt
