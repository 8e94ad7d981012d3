#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ltt {

// Dense univariate polynomial over a field T, coefficient of x^i at c[i].
// Kept normalized: no trailing zero coefficients (zero polynomial has empty c).
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const T& lead() const { return c.back(); }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : T(0);
  }

  template <class V>
  V eval(const V& at) const {
    V acc = V(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * at + V(c[i]);
    return acc;
  }

  Poly derivative() const {
    if (c.size() <= 1) return {};
    std::vector<T> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * T(static_cast<int>(i));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator-(const Poly& a) {
    std::vector<T> r(a.c);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    std::vector<T> r(a.c);
    for (auto& v : r) v = v * s;
    return Poly(std::move(r));
  }

  // Quotient and remainder; requires a field (exact division by the leading
  // coefficient).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly{}, rem};
    std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const int shift = rem.degree() - b.degree();
      T factor = rem.lead() / b.lead();
      q[static_cast<std::size_t>(shift)] = factor;
      for (int i = 0; i <= b.degree(); ++i)
        rem.c[static_cast<std::size_t>(i + shift)] -= factor * b.c[static_cast<std::size_t>(i)];
      rem.trim();
    }
    return {Poly(std::move(q)), rem};
  }

  Poly monic() const {
    if (is_zero()) return {};
    return *this * (T(1) / lead());
  }

  // Taylor shift: returns p(x + at), by repeated synthetic division by
  // (x - at); successive remainders are the Taylor coefficients at `at`.
  Poly shifted(const T& at) const {
    std::vector<T> work(c);
    std::vector<T> taylor;
    taylor.reserve(c.size());
    for (std::size_t round = 0; round < c.size(); ++round) {
      for (std::size_t i = work.size() - 1; i-- > 0;) work[i] += work[i + 1] * at;
      taylor.push_back(work[0]);
      work.erase(work.begin());
    }
    return Poly(std::move(taylor));
  }
};

// Coefficient-wise conversion, e.g. Rational -> double or -> complex.
template <class U, class T, class F>
Poly<U> map_poly(const Poly<T>& p, F f) {
  std::vector<U> r;
  r.reserve(p.c.size());
  for (const auto& v : p.c) r.push_back(f(v));
  return Poly<U>(std::move(r));
}

// Monic gcd over an exact field.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

// Square-free decomposition (Yun): den = prod_i out[i-1]^i with out entries
// square free and pairwise coprime.  Requires an exact field.
template <class T>
std::vector<Poly<T>> squarefree_decomposition(const Poly<T>& p) {
  std::vector<Poly<T>> parts;
  if (p.degree() <= 0) return parts;
  Poly<T> a = p.monic();
  Poly<T> d = a.derivative();
  Poly<T> g = poly_gcd(a, d);
  if (g.degree() == 0) {
    parts.push_back(a);
    return parts;
  }
  Poly<T> w = divmod(a, g).first;
  Poly<T> y = divmod(d, g).first;
  Poly<T> z = y - w.derivative();
  while (!z.is_zero()) {
    Poly<T> f = poly_gcd(w, z);
    parts.push_back(f);
    w = divmod(w, f).first;
    y = divmod(z, f).first;
    z = y - w.derivative();
  }
  parts.push_back(w);
  return parts;
}

}  // namespace ltt
