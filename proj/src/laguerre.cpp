#include "ltt/laguerre.hpp"

#include <cmath>

#include "ltt/errors.hpp"

namespace ltt {
namespace {

// Running compensated sum; the bridge sums alternate in sign and cancel, so
// plain accumulation would shed digits.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double binom_double(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  static std::vector<std::vector<double>> rows = {{1.0}};
  if (n >= static_cast<int>(rows.size())) {
    rows.reserve(static_cast<std::size_t>(n) + 1);
    while (static_cast<int>(rows.size()) <= n) {
      const auto& prev = rows.back();
      std::vector<double> row(prev.size() + 1, 1.0);
      for (std::size_t j = 1; j < prev.size(); ++j) row[j] = prev[j - 1] + prev[j];
      rows.push_back(std::move(row));
    }
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

double laguerre_eval(int n, double x) {
  if (n < 0) throw DomainError("laguerre_eval: negative degree");
  double prev = 1.0;  // L_0
  if (n == 0) return prev;
  double cur = 1.0 - x;  // L_1
  for (int m = 1; m < n; ++m) {
    const double next = ((2.0 * m + 1.0 - x) * cur - m * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_star_eval(int n, double x, double s) {
  if (!(s > 0)) throw DomainError("laguerre_star_eval: scale must be positive");
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * std::sqrt(s) * laguerre_eval(n, s * x);
}

std::vector<double> coefficients_from_image(const std::vector<double>& phi, double s) {
  if (!(s > 0)) throw DomainError("coefficients_from_image: abscissa must be positive");
  const int count = static_cast<int>(phi.size());
  std::vector<double> a(phi.size());
  for (int n = 0; n < count; ++n) {
    KahanSum acc;
    double s_pow = std::sqrt(s);  // s^{k+1/2}
    for (int k = 0; k <= n; ++k) {
      const double sign = (n - k) % 2 == 0 ? 1.0 : -1.0;
      acc.add(sign * binom_double(n, k) * s_pow * phi[static_cast<std::size_t>(k)]);
      s_pow *= s;
    }
    a[static_cast<std::size_t>(n)] = acc.sum;
  }
  return a;
}

std::vector<double> coefficients_from_image(const ImageSeq& phi) {
  return coefficients_from_image(phi.values, phi.s);
}

std::vector<double> image_from_coefficients(const std::vector<double>& a, double s) {
  if (!(s > 0)) throw DomainError("image_from_coefficients: abscissa must be positive");
  const int count = static_cast<int>(a.size());
  std::vector<double> phi(a.size());
  for (int n = 0; n < count; ++n) {
    KahanSum acc;
    for (int k = 0; k <= n; ++k) acc.add(binom_double(n, k) * a[static_cast<std::size_t>(k)]);
    phi[static_cast<std::size_t>(n)] =
        acc.sum * std::sqrt(s) * std::pow(s, -(n + 1.0));
  }
  return phi;
}

std::vector<Rational> bridge_forward_exact(const std::vector<Rational>& phi, const Rational& s) {
  BinomTable binom;
  std::vector<Rational> a(phi.size());
  for (std::size_t n = 0; n < phi.size(); ++n) {
    Rational acc = 0;
    Rational s_pow = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      Rational term = Rational(binom(static_cast<long>(n), static_cast<long>(k))) * s_pow * phi[k];
      acc += (n - k) % 2 == 0 ? term : -term;
      s_pow *= s;
    }
    a[n] = acc;
  }
  return a;
}

std::vector<Rational> bridge_backward_exact(const std::vector<Rational>& a_reduced,
                                            const Rational& s) {
  BinomTable binom;
  std::vector<Rational> phi(a_reduced.size());
  for (std::size_t n = 0; n < a_reduced.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k)
      acc += Rational(binom(static_cast<long>(n), static_cast<long>(k))) * a_reduced[k];
    phi[n] = acc / rat_pow(s, static_cast<long>(n));
  }
  return phi;
}

double sc_energy(const std::vector<double>& phi, double s, int k_max) {
  if (k_max >= static_cast<int>(phi.size()))
    throw DomainError("sc_energy: not enough image entries");
  double energy = 0;
  for (int k = 0; k <= k_max; ++k) {
    KahanSum acc;
    double s_pow = 1.0;
    for (int j = 0; j <= k; ++j) {
      const double sign = (k - j) % 2 == 0 ? 1.0 : -1.0;
      acc.add(sign * binom_double(k, j) * s_pow * phi[static_cast<std::size_t>(j)]);
      s_pow *= s;
    }
    energy += acc.sum * acc.sum;
  }
  return energy;
}

double reconstruct(const std::vector<double>& a, double s, double x) {
  // One pass of the recurrence covers every degree; signs fold the (-1)^n in.
  if (a.empty()) return 0.0;
  const double sx = s * x;
  const double rs = std::sqrt(s);
  double prev = 1.0, cur = 1.0 - sx;
  double total = a[0] * rs * prev;
  if (a.size() > 1) total -= a[1] * rs * cur;
  for (std::size_t n = 2; n < a.size(); ++n) {
    const int m = static_cast<int>(n) - 1;
    const double next = ((2.0 * m + 1.0 - sx) * cur - m * prev) / (m + 1.0);
    prev = cur;
    cur = next;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    total += sign * a[n] * rs * cur;
  }
  return total;
}

double weighted_l2_error(const SourceFunction& f, const std::vector<double>& a, double s,
                         int n_terms, double tol) {
  if (n_terms < 0 || n_terms >= static_cast<int>(a.size()))
    throw DomainError("weighted_l2_error: term count out of range");
  std::vector<double> head(a.begin(), a.begin() + n_terms + 1);
  SourceFunction diff2;
  diff2.damped = [f, head, s](double t, double sig) {
    const double half = f.damped(t, 0.5 * sig);
    const double rec = reconstruct(head, s, t) * std::exp(-0.5 * sig * t);
    const double d = half - rec;
    return d * d;
  };
  diff2.exp_order = 2.0 * std::max(f.exp_order, 0.0);
  diff2.poly_degree = 2.0 * f.poly_degree + 2.0 * head.size();
  diff2.bound = 4.0 * (f.bound * f.bound + 1.0) * (1.0 + s);
  diff2.origin_exponent = std::min(2.0 * f.origin_exponent, 0.0);
  diff2.breakpoints = f.breakpoints;
  QuadratureResult r = laplace_weighted_integral(diff2, s, 0.0, tol);
  return std::sqrt(std::max(r.value, 0.0));
}

BesselCheck bessel_check(const SourceFunction& f, const std::vector<double>& a, double s,
                         double tol) {
  if (!(s > 2.0 * f.exp_order))
    throw DomainError("bessel_check: needs s above twice the exponential order");
  SourceFunction sq;
  sq.damped = [f](double t, double sig) {
    const double half = f.damped(t, 0.5 * sig);
    return half * half;
  };
  sq.exp_order = 2.0 * f.exp_order;
  sq.poly_degree = 2.0 * f.poly_degree;
  sq.bound = f.bound * f.bound;
  sq.origin_exponent = std::min(2.0 * f.origin_exponent, 0.0);
  sq.breakpoints = f.breakpoints;
  BesselCheck out;
  out.function_energy = laplace_weighted_integral(sq, s, 0.0, tol).value;
  double e = 0;
  for (double v : a) e += v * v;
  out.coefficient_energy = e;
  return out;
}

}  // namespace ltt
