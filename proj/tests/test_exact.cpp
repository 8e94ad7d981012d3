#include <random>

#include "doctest.h"
#include "ltt/algnum.hpp"
#include "ltt/exact.hpp"
#include "ltt/polynomial.hpp"

using namespace ltt;

namespace {

Rational rand_rational(std::mt19937& rng) {
  const int num = static_cast<int>(rng() % 19) - 9;
  const int den = static_cast<int>(rng() % 7) + 1;
  return Rational(num, den);
}

Poly<Rational> rand_poly(std::mt19937& rng, int max_deg) {
  std::vector<Rational> c;
  const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
  for (int i = 0; i <= deg; ++i) c.push_back(rand_rational(rng));
  return Poly<Rational>(std::move(c));
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rat_pow handles both exponent signs") {
  CHECK(rat_pow(Rational(3, 2), 3) == Rational(27, 8));
  CHECK(rat_pow(Rational(3, 2), -2) == Rational(4, 9));
  CHECK(rat_pow(Rational(-2), 5) == Rational(-32));
  CHECK(rat_pow(Rational(7), 0) == Rational(1));
  CHECK(rat_pow(Rational(0), 0) == Rational(1));
  CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("binom_big satisfies the Pascal rule and range convention") {
  CHECK(binom_big(0, 0) == 1);
  CHECK(binom_big(10, 3) == 120);
  CHECK(binom_big(52, 26) == BigInt("495918532948104"));
  CHECK(binom_big(5, -1) == 0);
  CHECK(binom_big(5, 6) == 0);
  CHECK(binom_big(-1, 0) == 0);
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const long n = 1 + rng() % 60;
    const long k = rng() % (n + 1);
    CHECK(binom_big(n, k) == binom_big(n - 1, k - 1) + binom_big(n - 1, k));
    CHECK(binom_big(n, k) == binom_big(n, n - k));
  }
}

TEST_CASE("binom_rat extends the upper index") {
  CHECK(binom_rat(Rational(1, 2), 3) == Rational(1, 16));
  CHECK(binom_rat(Rational(-1), 4) == Rational(1));
  CHECK(binom_rat(Rational(-1), 5) == Rational(-1));
  CHECK(binom_rat(Rational(4), 2) == Rational(6));
  CHECK(binom_rat(Rational(3), 5) == Rational(0));
  CHECK(binom_rat(Rational(1, 3), -2) == Rational(0));
  // absorption: C(x, k) * k = x * C(x-1, k-1)
  std::mt19937 rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational x = rand_rational(rng);
    const long k = 1 + rng() % 8;
    CHECK(binom_rat(x, k) * Rational(k) == x * binom_rat(x - 1, k - 1));
  }
}

TEST_CASE("BinomTable agrees with the direct product") {
  BinomTable table;
  for (long n = 0; n <= 40; ++n)
    for (long k = 0; k <= n; ++k) CHECK(table(n, k) == binom_big(n, k));
  CHECK(table(10, 11) == 0);
  CHECK(table(10, -1) == 0);
  CHECK(table(-3, 0) == 0);
}

TEST_CASE("binom_double is exact while the values fit") {
  for (int n = 0; n <= 56; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom_double(n, k) == to_double(binom_big(n, k)));
  const double big = binom_double(80, 40);
  const double want = to_double(binom_big(80, 40));
  CHECK(std::abs(big - want) <= 4e-16 * want);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(1) == Rational(1));
  CHECK(harmonic(5) == Rational(137, 60));
  CHECK(harmonic(10) - harmonic(9) == Rational(1, 10));
}

TEST_CASE("factorial_big") {
  CHECK(factorial_big(0) == 1);
  CHECK(factorial_big(1) == 1);
  CHECK(factorial_big(10) == 3628800);
  CHECK(factorial_big(20) == factorial_big(19) * 20);
}

TEST_CASE("QuadExt arithmetic in Q(sqrt 5)") {
  const QuadExt phi(Rational(1, 2), Rational(1, 2), 5);
  const QuadExt psi(Rational(1, 2), Rational(-1, 2), 5);
  CHECK(phi * psi == QuadExt(Rational(-1)));
  CHECK(phi + psi == QuadExt(Rational(1)));
  CHECK(phi - psi == QuadExt(Rational(0), Rational(1), 5));
  CHECK(phi.conj() == psi);
  // golden-ratio relation: phi^2 = phi + 1
  CHECK(phi * phi == phi + QuadExt(1));
  CHECK((phi / psi) * psi == phi);
  CHECK(qx_pow(phi, 6) == qx_pow(phi, 3) * qx_pow(phi, 3));
  CHECK(qx_pow(phi, -2) * qx_pow(phi, 2) == QuadExt(1));
  CHECK(phi.to_complex().real() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
}

TEST_CASE("QuadExt rejects mixed radicands but mixes with rationals") {
  const QuadExt root2(Rational(0), Rational(1), 2);
  const QuadExt root3(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(root2 + root3, std::domain_error);
  CHECK(root2 + QuadExt(Rational(5, 2)) == QuadExt(Rational(5, 2), Rational(1), 2));
  CHECK(root2 * root2 == QuadExt(Rational(2)));
  CHECK((root2 * root2).is_rational());
}

TEST_CASE("QuadExt with a negative radicand is complex") {
  const QuadExt i(Rational(0), Rational(1), -1);
  CHECK(i * i == QuadExt(Rational(-1)));
  const auto z = i.to_complex();
  CHECK(z.real() == 0.0);
  CHECK(z.imag() == 1.0);
}

TEST_CASE("perfect_sqrt and rational_sqrt") {
  CHECK(perfect_sqrt(BigInt(144)).value() == 12);
  CHECK(!perfect_sqrt(BigInt(145)).has_value());
  CHECK(!perfect_sqrt(BigInt(-4)).has_value());

  auto r = rational_sqrt(Rational(4, 9));
  CHECK(r.radicand == 1);
  CHECK(r.scale == Rational(2, 3));

  r = rational_sqrt(Rational(1, 2));
  CHECK(r.radicand == 2);
  CHECK(r.scale == Rational(1, 2));  // sqrt(1/2) = sqrt(2)/2

  r = rational_sqrt(Rational(-9));
  CHECK(r.radicand == -1);
  CHECK(r.scale == Rational(3));

  r = rational_sqrt(Rational(0));
  CHECK(r.scale == Rational(0));
}

TEST_CASE("polynomial division leaves a small remainder") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 120; ++trial) {
    const Poly<Rational> a = rand_poly(rng, 6);
    Poly<Rational> b = rand_poly(rng, 3);
    if (b.is_zero()) b = Poly<Rational>::x();
    const auto [q, r] = divmod(a, b);
    CHECK((q * b + r - a).is_zero());
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(Poly<Rational>::x(), Poly<Rational>{}), std::domain_error);
}

TEST_CASE("poly_gcd finds the shared factor") {
  const Poly<Rational> x = Poly<Rational>::x();
  const auto shared = x - Poly<Rational>::constant(Rational(1));
  const auto a = shared * (x - Poly<Rational>::constant(Rational(2))) * Rational(3);
  const auto b = shared * (x + Poly<Rational>::constant(Rational(4)));
  CHECK((poly_gcd(a, b) - shared).is_zero());
  CHECK((poly_gcd(a, Poly<Rational>{}) - a.monic()).is_zero());
}

TEST_CASE("squarefree decomposition recovers multiplicity layers") {
  const Poly<Rational> x = Poly<Rational>::x();
  const auto p1 = x - Poly<Rational>::constant(Rational(1));
  const auto p2 = x - Poly<Rational>::constant(Rational(2));
  const auto parts = squarefree_decomposition(p1 * p2 * p2);
  REQUIRE(parts.size() == 2);
  CHECK((parts[0] - p1).is_zero());
  CHECK((parts[1] - p2).is_zero());
}

TEST_CASE("Taylor shift evaluates consistently") {
  std::mt19937 rng(104);
  for (int trial = 0; trial < 80; ++trial) {
    const Poly<Rational> p = rand_poly(rng, 5);
    const Rational at = rand_rational(rng);
    const Rational probe = rand_rational(rng);
    CHECK(p.shifted(at).eval(probe) == p.eval(Rational(probe + at)));
  }
}

}  // TEST_SUITE
