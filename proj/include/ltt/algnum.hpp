#pragma once

#include <complex>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "ltt/exact.hpp"

namespace ltt {

// Element x + y*sqrt(d) of a quadratic extension of the rationals.
// d is an integer, never a perfect square when y != 0; d may be negative
// (then the value is complex).  Rationals are carried with y = 0, d = 0,
// so they mix freely with any extension.
struct QuadExt {
  Rational x;
  Rational y;
  BigInt d;

  QuadExt() : x(0), y(0), d(0) {}
  QuadExt(int v) : x(v), y(0), d(0) {}                  // NOLINT: implicit by design
  QuadExt(Rational v) : x(std::move(v)), y(0), d(0) {}  // NOLINT: implicit by design
  QuadExt(Rational x_, Rational y_, BigInt d_) : x(std::move(x_)), y(std::move(y_)), d(std::move(d_)) {
    if (y == 0) d = 0;
  }

  bool is_rational() const { return y == 0; }

  std::complex<double> to_complex() const {
    const double xr = to_double(x);
    if (y == 0) return {xr, 0.0};
    const double dd = to_double(d);
    const double yr = to_double(y);
    if (dd >= 0) return {xr + yr * std::sqrt(dd), 0.0};
    return {xr, yr * std::sqrt(-dd)};
  }

  QuadExt conj() const { return {x, -y, d}; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.x != b.x) return false;
    if (a.y == 0 && b.y == 0) return true;
    return a.y == b.y && a.d == b.d;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  friend QuadExt operator-(const QuadExt& a) { return {-a.x, -a.y, a.d}; }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    check_compatible(a, b);
    return {a.x + b.x, a.y + b.y, a.y != 0 ? a.d : b.d};
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    check_compatible(a, b);
    const BigInt& d = a.y != 0 ? a.d : b.d;
    return {a.x * b.x + a.y * b.y * Rational(d), a.x * b.y + a.y * b.x, d};
  }

  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    check_compatible(a, b);
    // Norm x^2 - d y^2 vanishes only at zero: d is never a square.
    Rational nrm = b.x * b.x - Rational(b.d) * b.y * b.y;
    if (nrm == 0) throw std::domain_error("QuadExt: division by zero");
    QuadExt num = a * b.conj();
    return {num.x / nrm, num.y / nrm, num.d};
  }

  QuadExt& operator+=(const QuadExt& b) { return *this = *this + b; }
  QuadExt& operator-=(const QuadExt& b) { return *this = *this - b; }
  QuadExt& operator*=(const QuadExt& b) { return *this = *this * b; }
  QuadExt& operator/=(const QuadExt& b) { return *this = *this / b; }

  static void check_compatible(const QuadExt& a, const QuadExt& b) {
    if (a.y != 0 && b.y != 0 && a.d != b.d)
      throw std::domain_error("QuadExt: mixing distinct radicands " + a.d.str() + " and " + b.d.str());
  }
};

inline QuadExt qx_pow(QuadExt base, long e) {
  if (e < 0) return QuadExt(Rational(1)) / qx_pow(std::move(base), -e);
  QuadExt acc{Rational(1)};
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Exact integer square root test.
inline std::optional<BigInt> perfect_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// sqrt of a rational as q * sqrt(d) with d a non-square integer, or a plain
// rational when the argument is a perfect square.  sqrt(p/q) = sqrt(p q)/q.
struct RationalSqrt {
  Rational scale;  // q
  BigInt radicand; // d; 1 means the root is rational and equals `scale`
};

inline RationalSqrt rational_sqrt(const Rational& v) {
  if (v == 0) return {Rational(0), BigInt(1)};
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt radicand = num * den;
  bool neg = radicand < 0;
  if (auto r = perfect_sqrt(neg ? -radicand : radicand)) {
    if (!neg) return {Rational(*r, den), BigInt(1)};
    return {Rational(*r, den), BigInt(-1)};  // pure imaginary: scale * sqrt(-1)
  }
  return {Rational(1, den), radicand};
}

}  // namespace ltt
