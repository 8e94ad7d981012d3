#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ltt/errors.hpp"
#include "ltt/residue.hpp"

using namespace ltt;

namespace {

Poly<Rational> from_roots(const std::vector<Rational>& roots) {
  Poly<Rational> p = Poly<Rational>::constant(Rational(1));
  for (const auto& r : roots)
    p = p * (Poly<Rational>::x() - Poly<Rational>::constant(r));
  return p;
}

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("make normalizes to a monic reduced fraction") {
  const Poly<Rational> x = Poly<Rational>::x();
  const auto shared = x - Poly<Rational>::constant(Rational(1));
  const auto num = shared * (x + Poly<Rational>::constant(Rational(2)));
  const auto den = (shared * (x + Poly<Rational>::constant(Rational(3)))) * Rational(2);
  const RationalFn R = RationalFn::make(num, den);
  CHECK(R.den.lead() == Rational(1));
  CHECK(R.den.degree() == 1);
  CHECK(poly_gcd(R.num, R.den).degree() == 0);
  // values survive the normalization away from the cancelled point
  for (const Rational& at : {Rational(0), Rational(5), Rational(-1, 2)})
    CHECK(R.eval_exact(at) == num.eval(at) / den.eval(at));
  CHECK(R.eval(2.0) == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("rational function arithmetic by evaluation") {
  const RationalFn A = RationalFn::simple_pole(Rational(2), Rational(1), 1);
  const RationalFn B = RationalFn::simple_pole(Rational(-3, 2), Rational(-2), 2);
  const RationalFn sum = A + B;
  const RationalFn diff = A - B;
  const RationalFn scaled = A * Rational(5, 3);
  for (const Rational& at : {Rational(0), Rational(3), Rational(1, 4)}) {
    CHECK(sum.eval_exact(at) == A.eval_exact(at) + B.eval_exact(at));
    CHECK(diff.eval_exact(at) == A.eval_exact(at) - B.eval_exact(at));
    CHECK(scaled.eval_exact(at) == A.eval_exact(at) * Rational(5, 3));
  }
  CHECK(A + (B - B) == A);
  CHECK((A - A).is_zero());
}

TEST_CASE("find_roots splits rational, quadratic, and certified numeric parts") {
  // (x - 1)^2 (x + 2)
  const auto p1 = from_roots({Rational(1), Rational(1), Rational(-2)});
  const auto r1 = find_roots(p1);
  REQUIRE(r1.rational.size() == 2);
  CHECK(r1.quadratic.empty());
  CHECK(r1.numeric.empty());
  for (const auto& [root, mult] : r1.rational) {
    if (root == Rational(1)) CHECK(mult == 2);
    else CHECK((root == Rational(-2) && mult == 1));
  }

  // x^2 - x - 1: conjugate pair in Q(sqrt 5)
  const auto r2 = find_roots(Poly<Rational>(std::vector<Rational>{-1, -1, 1}));
  REQUIRE(r2.quadratic.size() == 1);
  CHECK(r2.quadratic[0].second == 1);
  CHECK(r2.quadratic[0].first.d == 5);
  CHECK(r2.quadratic[0].first.to_complex().real() ==
        doctest::Approx(1.6180339887498949).epsilon(1e-15));

  // x^2 + 1: imaginary pair
  const auto r3 = find_roots(Poly<Rational>(std::vector<Rational>{1, 0, 1}));
  REQUIRE(r3.quadratic.size() == 1);
  CHECK(r3.quadratic[0].first.to_complex().imag() == doctest::Approx(1.0).epsilon(1e-15));

  // irreducible odd degree: numeric roots satisfy the polynomial
  const Poly<Rational> hard(std::vector<Rational>{Rational(-3), Rational(1), Rational(0), Rational(0), Rational(1)});
  const auto r4 = find_roots(hard);
  int total = 0;
  for (const auto& [root, mult] : r4.rational) { (void)root; total += mult; }
  for (const auto& [root, mult] : r4.quadratic) { (void)root; total += 2 * mult; }
  const auto pd = map_poly<std::complex<double>>(hard, [](const Rational& c) {
    return std::complex<double>(to_double(c), 0.0);
  });
  for (const auto& [root, mult] : r4.numeric) {
    total += mult;
    CHECK(std::abs(pd.eval(root)) < 1e-9);
  }
  CHECK(total == 4);
}

TEST_CASE("partial fractions of simple and repeated poles") {
  // 1/((s-1)(s-2)) = -1/(s-1) + 1/(s-2)
  const RationalFn R = RationalFn::make(Poly<Rational>::constant(Rational(1)),
                                        from_roots({Rational(1), Rational(2)}));
  const auto terms = partial_fractions(R);
  REQUIRE(terms.size() == 2);
  for (const auto& t : terms) {
    REQUIRE(t.exact);
    CHECK(t.m == 1);
    if (t.p_exact == QuadExt(Rational(1))) CHECK(t.c_exact == QuadExt(Rational(-1)));
    else CHECK(t.c_exact == QuadExt(Rational(1)));
  }

  const RationalFn R2 = RationalFn::simple_pole(Rational(3), Rational(1, 2), 2);
  const auto t2 = partial_fractions(R2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].m == 2);
  CHECK(t2[0].c_exact == QuadExt(Rational(3)));
}

TEST_CASE("inverse transform of trigonometric and polynomial images") {
  // 1/(s^2+1) -> sin t
  const RationalFn F = RationalFn::make(Poly<Rational>::constant(Rational(1)),
                                        Poly<Rational>(std::vector<Rational>{1, 0, 1}));
  const ExpPolyFunction f = inverse_laplace_rational(F);
  for (double t : {0.0, 0.5, 1.5, 3.0})
    CHECK(f.eval(t) == doctest::Approx(std::sin(t)).epsilon(1e-12));

  // 1/(s-1)^2 -> t e^t
  const ExpPolyFunction g =
      inverse_laplace_rational(RationalFn::simple_pole(Rational(1), Rational(1), 2));
  for (double t : {0.0, 0.7, 2.0})
    CHECK(g.eval(t) == doctest::Approx(t * std::exp(t)).epsilon(1e-12));
}

TEST_CASE("laplace_of inverts inverse_laplace_rational") {
  std::mt19937 rng(55);
  const Rational pole_pool[] = {Rational(0), Rational(1), Rational(-2), Rational(1, 2)};
  for (int trial = 0; trial < 60; ++trial) {
    RationalFn F;
    const int k_terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k_terms; ++i) {
      int num = static_cast<int>(rng() % 9) - 4;
      if (num == 0) num = 1;
      const Rational c(num, static_cast<int>(rng() % 3) + 1);
      F = F + RationalFn::simple_pole(c, pole_pool[rng() % 4], 1 + static_cast<int>(rng() % 3));
    }
    if (F.is_zero()) continue;
    const ExpPolyFunction f = inverse_laplace_rational(F);
    CHECK(f.all_exact());
    CHECK(laplace_of(f) == F);
  }
}

TEST_CASE("transform_of gives the image as a rational function") {
  ExpTerm tm;
  tm.exact = true;
  tm.c_exact = QuadExt(Rational(1));
  tm.p_exact = QuadExt(Rational(-1));
  tm.m = 2;  // t e^{-t}
  tm.c = {1.0, 0.0};
  tm.p = {-1.0, 0.0};
  ExpPolyFunction f;
  f.terms.push_back(tm);
  for (int n = 0; n <= 5; ++n) {
    const RationalFn img = transform_of(f, n);
    // (n+1)/(s+1)^{n+2}
    for (const Rational& s : {Rational(1), Rational(3), Rational(1, 2)})
      CHECK(img.eval_exact(s) == Rational(n + 1) * rat_pow(s + 1, -(n + 2)));
  }
}

TEST_CASE("residue inverse recovers the exponential from its rule") {
  const auto rule = [](int n) { return RationalFn::simple_pole(Rational(1), Rational(2), n + 1); };
  const ExpPolyFunction f = residue_inverse(rule, 3);
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms[0].exact);
  CHECK(f.terms[0].m == 1);
  CHECK(f.terms[0].p_exact == QuadExt(Rational(2)));
  CHECK(f.terms[0].c_exact == QuadExt(Rational(1)));

  const auto probe = residue_probe(rule, {0, 1, 2, 3});
  CHECK(probe.consistent);
  CHECK(probe.max_term_gap == 0.0);
  CHECK(same_terms(f, probe.result, 0.0));
}

TEST_CASE("a rule that is not an image fails the power cancellation") {
  const auto rule = [](int) { return RationalFn::simple_pole(Rational(1), Rational(0), 1); };
  CHECK_NOTHROW(residue_inverse(rule, 0));
  CHECK_THROWS_AS(residue_inverse(rule, 1), NonCancellingPower);
}

TEST_CASE("probe flags an index-dependent rule") {
  const auto rule = [](int n) {
    const Rational c = n % 2 == 0 ? Rational(1) : Rational(2);
    return RationalFn::simple_pole(c, Rational(1), n + 1);
  };
  const auto rep = residue_probe(rule, {0, 1, 2});
  CHECK(!rep.consistent);
}

TEST_CASE("conjugate terms serialize and evaluate real") {
  const RationalFn F = RationalFn::make(Poly<Rational>::constant(Rational(2)),
                                        Poly<Rational>(std::vector<Rational>{4, 0, 1}));
  const ExpPolyFunction f = inverse_laplace_rational(F);  // sin(2t)
  CHECK(f.all_exact());
  const std::string js = f.to_json().dump();
  CHECK(js.find("\"kind\": \"exp_poly\"") != std::string::npos);
  CHECK(f.eval(0.9) == doctest::Approx(std::sin(1.8)).epsilon(1e-12));
}

}  // TEST_SUITE
