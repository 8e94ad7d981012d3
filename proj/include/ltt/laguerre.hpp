#pragma once

#include <vector>

#include "ltt/exact.hpp"
#include "ltt/transform.hpp"

namespace ltt {

// Standard Laguerre polynomial L_n(x) by the three-term recurrence.
double laguerre_eval(int n, double x);

// Scaled orthonormal family for the weight e^{-sx} on (0, inf):
// Lstar_n(x, s) = (-1)^n sqrt(s) L_n(s x).
double laguerre_star_eval(int n, double x, double s);

// Expansion coefficients of f in the Lstar family, straight from the image:
// a_n = sum_{k<=n} (-1)^{n-k} C(n,k) s^{k+1/2} phi_k.
std::vector<double> coefficients_from_image(const std::vector<double>& phi, double s);
std::vector<double> coefficients_from_image(const ImageSeq& phi);

// Inverse direction: phi_n = s^{-n-1/2} sum_{k<=n} C(n,k) a_k.
std::vector<double> image_from_coefficients(const std::vector<double>& a, double s);

// Same bridge with the sqrt(s) factored out (A_n = a_n / sqrt(s)), exact over
// the rationals; forward and backward compose to the identity exactly.
std::vector<Rational> bridge_forward_exact(const std::vector<Rational>& phi, const Rational& s);
std::vector<Rational> bridge_backward_exact(const std::vector<Rational>& a_reduced,
                                            const Rational& s);

// Energy of the first K+1 forward differences of n -> s^n phi_n at n = 0;
// equals (1/s) sum_{k<=K} a_k^2 when phi is a genuine image.
double sc_energy(const std::vector<double>& phi, double s, int k_max);

// Partial sum sum_{k<=N} a_k Lstar_k(x, s).
double reconstruct(const std::vector<double>& a, double s, double x);

// Weighted L2 distance between f and its N-term reconstruction:
// sqrt( integral e^{-sx} (f(x) - S_N(x))^2 dx ).
double weighted_l2_error(const SourceFunction& f, const std::vector<double>& a, double s, int n_terms,
                         double tol = 1e-10);

// sum_{k<=K} a_k^2 vs integral e^{-sx} f(x)^2 dx (Bessel bound); returns both.
struct BesselCheck {
  double coefficient_energy;
  double function_energy;
};
BesselCheck bessel_check(const SourceFunction& f, const std::vector<double>& a, double s,
                         double tol = 1e-10);

}  // namespace ltt
