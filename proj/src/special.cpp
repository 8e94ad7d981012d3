#include "ltt/special.hpp"

#include <cmath>
#include <cstddef>

#include "ltt/errors.hpp"
#include "ltt/quadrature.hpp"

namespace ltt {

double gamma_fn(double x) {
  if (!(x > 0)) throw DomainError("gamma_fn: needs x > 0");
  return std::tgamma(x);
}

double recip_gamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double pochhammer(double x, int m) {
  if (m < 0) throw DomainError("pochhammer: negative length");
  double acc = 1.0;
  for (int i = 0; i < m; ++i) acc *= x + i;
  return acc;
}

Json ZetaResult::to_json() const {
  Json j = Json::object();
  j.set("schema", 1);
  j.set("kind", "zeta");
  j.set("value", value);
  j.set("method", method);
  j.set("error_estimate", error_estimate);
  if (!partial_sums.empty()) j.set("partial_sums", Json::numbers(partial_sums));
  return j;
}

ZetaResult hurwitz_series(double s, double a, double tol, long max_terms) {
  if (!(a > 0)) throw DomainError("hurwitz_series: needs a > 0");
  if (!(s > 1)) throw DomainError("hurwitz_series: direct series diverges for s <= 1");
  double acc = 0.0;
  double err = 0.0;
  long k = 0;
  for (; k < max_terms; ++k) {
    acc += std::pow(a + static_cast<double>(k), -s);
    // after the integral + half-term tail corrections below, what remains is
    // the first derivative correction, of size s x^{-s-1} / 12
    err = s * std::pow(a + static_cast<double>(k + 1), -s - 1.0);
    if (err <= tol) break;
  }
  if (err > tol)
    throw QuadratureFailure("hurwitz_series: term budget exhausted", tol, err);
  const double x = a + static_cast<double>(k + 1);
  ZetaResult r;
  r.value = acc + std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  r.method = "series";
  r.error_estimate = err;
  return r;
}

ZetaResult hurwitz_em(double s, double a) {
  if (!(a > 0)) throw DomainError("hurwitz_em: needs a > 0");
  if (s == 1.0) throw DomainError("hurwitz_em: pole at s = 1");
  // For s < 0 the head terms grow and cancel against the corrections, while
  // the correction series terminates early (high derivatives of a low power
  // vanish), so a short head is both valid and better conditioned there.
  const int n_head = s >= 0 ? 24 + static_cast<int>(std::ceil(s)) : 4;
  const int j_max = 8;
  double head = 0.0;
  for (int k = 0; k < n_head; ++k) head += std::pow(a + k, -s);
  const double x = a + n_head;
  double value = head + std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  const auto bern = bernoulli_numbers(2 * j_max);
  double rising = s;  // (s)_{2j-1}, updated in place
  double fact = 2.0;  // (2j)!
  double last = 0.0;
  for (int j = 1; j <= j_max; ++j) {
    if (j > 1) {
      rising *= (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
      fact *= (2.0 * j - 1.0) * (2.0 * j);
    }
    last = to_double(bern[static_cast<std::size_t>(2 * j)]) / fact * rising *
           std::pow(x, -s - 2.0 * j + 1.0);
    value += last;
  }
  ZetaResult r;
  r.value = value;
  r.method = "euler_maclaurin";
  r.error_estimate = std::fabs(last) + 4e-16 * (std::fabs(value) + std::fabs(head));
  return r;
}

SourceFunction geometric_kernel() {
  SourceFunction f;
  f.damped = [](double t, double sigma) { return std::exp(-sigma * t) / -std::expm1(-t); };
  f.exp_order = 0.0;
  f.poly_degree = 0.0;
  f.bound = 1.6;
  f.origin_exponent = -1.0;
  f.label = "1/(1-e^{-t})";
  return f;
}

SourceFunction shifted_geometric_kernel() {
  SourceFunction f;
  f.damped = [](double t, double sigma) { return std::exp(-sigma * t) / std::expm1(t); };
  f.exp_order = -1.0;
  f.poly_degree = 0.0;
  f.bound = 2.0;
  f.origin_exponent = -1.0;
  f.label = "1/(e^t-1)";
  return f;
}

ZetaResult hurwitz_integral(double s, double a, double tol) {
  if (!(a > 0)) throw DomainError("hurwitz_integral: needs a > 0");
  if (!(s > 1)) throw DomainError("hurwitz_integral: representation needs s > 1");
  const QuadratureResult q = laplace_weighted_integral(geometric_kernel(), a, s - 1.0, tol);
  ZetaResult r;
  r.value = q.value;
  r.method = "integral";
  r.error_estimate = q.error;
  return r;
}

ZetaResult hurwitz_integral_shifted(double s, double a, double tol) {
  if (!(a > 0)) throw DomainError("hurwitz_integral_shifted: needs a > 0");
  if (!(s > 1)) throw DomainError("hurwitz_integral_shifted: representation needs s > 1");
  const QuadratureResult q =
      laplace_weighted_integral(shifted_geometric_kernel(), a, s - 1.0, tol);
  ZetaResult r;
  r.value = q.value;
  r.method = "integral_shifted";
  r.error_estimate = q.error;
  return r;
}

std::vector<Rational> bernoulli_numbers(int k_max) {
  if (k_max < 0) throw DomainError("bernoulli_numbers: negative index");
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(k_max) + 1);
  b.push_back(Rational(1));
  for (int m = 1; m <= k_max; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binom_big(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

Poly<Rational> bernoulli_poly(int k) {
  if (k < 0) throw DomainError("bernoulli_poly: negative index");
  const auto b = bernoulli_numbers(k);
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  // coefficient of a^{k-j} is C(k,j) B_j
  for (int j = 0; j <= k; ++j)
    c[static_cast<std::size_t>(k - j)] = Rational(binom_big(k, j)) * b[static_cast<std::size_t>(j)];
  return Poly<Rational>(std::move(c));
}

Rational zeta_negative_integer(int k, const Rational& a) {
  if (k < 1) throw DomainError("zeta_negative_integer: needs k >= 1");
  return -bernoulli_poly(k).eval(a) / Rational(k);
}

ZetaResult hurwitz_bernoulli_representation(double s, double a, int k_terms) {
  if (!(a > 0)) throw DomainError("hurwitz_bernoulli_representation: needs a > 0");
  if (s == 1.0) throw DomainError("hurwitz_bernoulli_representation: pole at s = 1");
  if (k_terms < 1) throw DomainError("hurwitz_bernoulli_representation: needs k_terms >= 1");
  ZetaResult r;
  r.method = "bernoulli_asymptotic";
  const double w = 2.0 * a;
  double acc = std::pow(w, 1.0 - s) / (s - 1.0);
  r.partial_sums.push_back(acc);
  double rising = 1.0;  // (s)_{k-1}
  double fact = 1.0;    // k!
  double last = 0.0;
  for (int k = 1; k <= k_terms; ++k) {
    if (k > 1) rising *= s + (k - 2);
    fact *= k;
    // zeta(1-k, a) through the exact Bernoulli polynomial, then to doubles;
    // the report is numeric either way.
    const Poly<Rational> bp = bernoulli_poly(k);
    double bka = 0.0;
    for (std::size_t i = bp.c.size(); i-- > 0;) bka = bka * a + to_double(bp.c[i]);
    const double zneg = -bka / static_cast<double>(k);
    last = -zneg * rising / (std::pow(w, s + k - 1) * fact);
    acc += last;
    r.partial_sums.push_back(acc);
  }
  r.value = acc;
  r.error_estimate = std::fabs(last);
  return r;
}

}  // namespace ltt
