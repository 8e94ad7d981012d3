#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ltt {

using BigInt = boost::multiprecision::cpp_int;
// Always normalized: denominator > 0, gcd(num, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rational(1) / rat_pow(base, -e);
  }
  Rational acc = 1, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
inline BigInt binom_big(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! over the rationals.
// Handles negative and fractional upper index; zero for k < 0.
inline Rational binom_rat(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= x - i;
    r /= i + 1;
  }
  return r;
}

// Dense row cache for the binomials the identity sweeps hammer on.
// Not thread safe; concurrent sweeps each own a table.
class BinomTable {
 public:
  const BigInt& operator()(long n, long k) {
    static const BigInt kZero = 0;
    if (k < 0 || k > n || n < 0) return kZero;
    if (static_cast<std::size_t>(n) >= rows_.size()) grow(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void grow(long n) {
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      const auto& prev = rows_.back();
      std::vector<BigInt> row(prev.size() + 1, BigInt(1));
      for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
      rows_.push_back(std::move(row));
    }
  }
  std::vector<std::vector<BigInt>> rows_;
};

// Binomial as a double.  Exact through n = 56 (fits in 53 bits), correctly
// rounded conversion beyond that.
double binom_double(int n, int k);

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline Rational harmonic(int n) {
  Rational h = 0;
  for (int k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

// Factorial as BigInt.
inline BigInt factorial_big(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace ltt
