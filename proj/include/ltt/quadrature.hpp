#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ltt {

// A function on (0, inf) packaged with the growth metadata the integration
// engine needs.  `damped(t, sigma)` must return f(t) * exp(-sigma t); the
// engine only ever evaluates f through this, with sigma equal to the current
// abscissa, so exponentially growing sources never overflow on the way in.
//
// Tail bound: |f(t)| <= bound * t^poly_degree * exp(exp_order * t) for t >= 1.
// Origin: f(t) ~ c * t^origin_exponent as t -> 0+, origin_exponent > -1.
struct SourceFunction {
  std::function<double(double t, double sigma)> damped;
  double exp_order = 0.0;
  double poly_degree = 0.0;
  double bound = 1.0;
  double origin_exponent = 0.0;
  std::vector<double> breakpoints;  // known kinks or jumps, split points
  std::string label;

  double operator()(double t) const { return damped(t, 0.0); }

  static SourceFunction from_plain(std::function<double(double)> f, double exp_order,
                                   double poly_degree, double bound, double origin_exponent,
                                   std::string label = {});
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  long evaluations = 0;
};

struct QuadratureOptions {
  long max_panels = 30000;
  double tail_split_factor = 1.0;  // scales the automatic head/tail split point
};

// integral over (0, inf) of f(t) * exp(-s t + nu ln t - lgamma(nu + 1)) dt.
// With nu = n this is the n-th transform entry; with nu = s_z - 1 and f the
// geometric-tail kernel it is the Hurwitz-zeta integral representation.
// Requires s > f.exp_order and nu + f.origin_exponent > -1.
QuadratureResult laplace_weighted_integral(const SourceFunction& f, double s, double nu,
                                           double tol_abs, const QuadratureOptions& opt = {});

// Adaptive Gauss-Kronrod on a finite interval.  endpoint exponents a_lo/a_hi
// describe algebraic behavior g ~ (t-lo)^{a_lo} resp. (hi-t)^{a_hi} and
// trigger a variable change that removes the singular factor.
QuadratureResult integrate_finite(const std::function<double(double)>& g, double lo, double hi,
                                  double tol_abs, const std::vector<double>& breakpoints = {},
                                  double a_lo = 0.0, double a_hi = 0.0,
                                  const QuadratureOptions& opt = {});

}  // namespace ltt
