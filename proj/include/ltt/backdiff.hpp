#pragma once

#include <cmath>
#include <vector>

#include "ltt/errors.hpp"
#include "ltt/exact.hpp"

namespace ltt {

// The s-scaled backward difference on image sequences,
//   (D phi)_n = s phi_n - phi_{n-1},
// and its powers, expansions, and the derivative/monomial/fractional image
// formulas built from it.  Everything is templated on the scalar so the same
// code runs in doubles and in exact rationals; `phi` is any callable n ->
// scalar defined for 0 <= n; indices below zero are treated as zero entries
// (their weights carry a vanishing reciprocal factorial).

namespace detail {
template <class T>
T pow_of(const T& base, long e);

template <>
inline double pow_of<double>(const double& base, long e) {
  return std::pow(base, static_cast<double>(e));
}
template <>
inline Rational pow_of<Rational>(const Rational& base, long e) {
  return rat_pow(base, e);
}

template <class T>
T binom_of(int n, int k);
template <>
inline double binom_of<double>(int n, int k) {
  return binom_double(n, k);
}
template <>
inline Rational binom_of<Rational>(int n, int k) {
  return Rational(binom_big(n, k));
}
}  // namespace detail

// p-th power by the binomial expansion:
//   D^p phi_n = sum_{k=0}^{p} (-1)^k C(p,k) s^{p-k} phi_{n-k}.
// Entries below index zero drop out.
template <class T, class Phi>
T backdiff_power(Phi&& phi, int p, const T& s, int n) {
  if (p < 0 || n < 0) throw DomainError("backdiff_power: negative order or index");
  T acc = T(0);
  const int k_hi = std::min(p, n);
  for (int k = 0; k <= k_hi; ++k) {
    T term = detail::binom_of<T>(p, k) * detail::pow_of<T>(s, p - k) * phi(n - k);
    acc = acc + (k % 2 == 0 ? term : -term);
  }
  return acc;
}

// Single application, iterated p times; the expansion above must agree with
// this exactly.  Needs n >= p so no sub-zero entry is touched.
template <class T, class Phi>
T backdiff_iterated(Phi&& phi, int p, const T& s, int n) {
  if (n < p) throw DomainError("backdiff_iterated: index below order");
  std::vector<T> row;
  row.reserve(static_cast<std::size_t>(p) + 1);
  for (int m = n - p; m <= n; ++m) row.push_back(phi(m));
  for (int round = 0; round < p; ++round)
    for (std::size_t i = row.size() - 1; i > 0; --i) row[i] = s * row[i] - row[i - 1];
  return row.back();
}

// Inverse direction: the entry p steps back, rebuilt from difference powers:
//   phi_{n-p} = sum_{j=0}^{p} (-1)^j C(p,j) s^{p-j} D^j phi_n.
template <class T, class Phi>
T backdiff_unshift(Phi&& phi, int p, const T& s, int n) {
  if (p < 0 || n < p) throw DomainError("backdiff_unshift: need 0 <= p <= n");
  T acc = T(0);
  for (int j = 0; j <= p; ++j) {
    T term = detail::binom_of<T>(p, j) * detail::pow_of<T>(s, p - j) * backdiff_power(phi, j, s, n);
    acc = acc + (j % 2 == 0 ? term : -term);
  }
  return acc;
}

// Image of the p-th derivative.  For n >= p it is D^p phi_n alone; for
// n <= p-1 the initial values f(0), f'(0), ..., f^{(p-n-1)}(0) enter:
//   D^p phi_n - (-1)^n sum_{j=1}^{p-n} C(p-j, n) s^{p-j-n} f^{(j-1)}(0).
template <class T, class Phi>
T derivative_image(Phi&& phi, int p, const T& s, int n, const std::vector<T>& init) {
  if (p < 0 || n < 0) throw DomainError("derivative_image: negative order or index");
  T value = backdiff_power(phi, p, s, n);
  if (n >= p) return value;
  if (static_cast<int>(init.size()) < p - n)
    throw DomainError("derivative_image: needs f^(j)(0) for j < p - n");
  T corr = T(0);
  for (int j = 1; j <= p - n; ++j)
    corr = corr + detail::binom_of<T>(p - j, n) * detail::pow_of<T>(s, p - j - n) *
                      init[static_cast<std::size_t>(j - 1)];
  return n % 2 == 0 ? T(value - corr) : T(value + corr);
}

// Image of t^r f^{(p)}(t): the rising factorial (n+1)_r times the derivative
// image read at index n + r.
template <class T, class Phi>
T monomial_multiply_image(Phi&& phi, int r, int p, const T& s, int n, const std::vector<T>& init) {
  if (r < 0) throw DomainError("monomial_multiply_image: negative power");
  T rising = T(1);
  for (int i = 1; i <= r; ++i) rising = rising * T(n + i);
  return rising * derivative_image(phi, p, s, n + r, init);
}

// Image of the fractional derivative of order alpha in [0, 1):
//   sum_{k=0}^{n} (-1)^k C(alpha,k) s^{alpha-k} phi_{n-k},
// for f whose fractional integral vanishes at 0+.
template <class Phi>
double fractional_derivative_image(Phi&& phi, double alpha, double s, int n) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw DomainError("fractional_derivative_image: order must lie in [0, 1)");
  if (!(s > 0)) throw DomainError("fractional_derivative_image: abscissa must be positive");
  double acc = 0.0;
  double binom = 1.0;  // C(alpha, k), updated multiplicatively
  for (int k = 0; k <= n; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    acc += sign * binom * std::pow(s, alpha - k) * phi(n - k);
    binom *= (alpha - k) / (k + 1.0);
  }
  return acc;
}

}  // namespace ltt
