#include <cmath>
#include <vector>

#include "doctest.h"
#include "ltt/identities.hpp"
#include "ltt/transform.hpp"

using namespace ltt;

namespace {

// Explicit Laguerre polynomial sum, kept separate from the image-side code.
Rational laguerre_coeff(int m, int k) {
  // coefficient of x^k in L_m: (-1)^k C(m,k) / k!
  Rational c = binom_rat(Rational(m), k) / Rational(factorial_big(k));
  return k % 2 == 0 ? c : -c;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("image of the zeroth Laguerre polynomial is the constant row") {
  for (int n = 0; n <= 8; ++n)
    for (const Rational& s : {Rational(1), Rational(2), Rational(1, 3)})
      CHECK(laguerre_image_term(0, n, s) == rat_pow(s, -(n + 1)));
}

TEST_CASE("hand-expanded entry vanishes where the sum cancels") {
  // m = 2, n = 1, s = 3: s^{-2} (1 - 2 * 2 * (1/3) + 3 * (1/9))
  //                    = (1/9)(1 - 4/3 + 1/3) = 0.
  CHECK(laguerre_image_term(2, 1, Rational(3)) == Rational(0));
  // and a nonzero neighbor, fully by hand:
  // m = 2, n = 2, s = 3: s^{-3} (1 - 2 * 3 * (1/3) + 6 * (1/9)) = (1/27)(-1/3)
  CHECK(laguerre_image_term(2, 2, Rational(3)) == Rational(-1, 81));
}

TEST_CASE("image rows match direct quadrature of the polynomial source") {
  // L_3 as an explicit finite power sum fed through the numeric transform.
  const int m = 3;
  const double s = 2.0;
  const int n_max = 4;
  std::vector<double> acc(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    const double c = to_double(laguerre_coeff(m, k));
    const ImageSeq part =
        forward_transform(ClosedImage::power(double(k)).source(), s, n_max, 1e-12);
    for (int n = 0; n <= n_max; ++n)
      acc[static_cast<std::size_t>(n)] += c * part.values[static_cast<std::size_t>(n)];
  }
  for (int n = 0; n <= n_max; ++n) {
    const double want = to_double(laguerre_image_term(m, n, Rational(2)));
    CHECK(std::abs(acc[static_cast<std::size_t>(n)] - want) <= 1e-9);
  }
}

TEST_CASE("power-sum identity sweep passes on a reduced range") {
  const IdentityReport rep = verify_laguerre_identity(
      12, 12, {Rational(1), Rational(2), Rational(1, 3)});
  CHECK(rep.all_passed);
  CHECK(rep.counterexamples.empty());
  CHECK(!rep.identity.empty());
}

TEST_CASE("mapped coefficient table has the classical endpoints") {
  for (int n = 0; n <= 20; ++n) {
    CHECK(legendre_A(n, 0) == Rational(1));
    const Rational central(binom_big(2 * n, n));
    CHECK(legendre_A(n, n) == (n % 2 == 0 ? central : -central));
  }
  // row n = 2 in full: P_2(1-2u) = 1 - 6u + 6u^2
  CHECK(legendre_A(2, 0) == Rational(1));
  CHECK(legendre_A(2, 1) == Rational(-6));
  CHECK(legendre_A(2, 2) == Rational(6));
  // out-of-range column is zero
  CHECK(legendre_A(2, 3) == Rational(0));
}

TEST_CASE("recurrence-built polynomial carries the same coefficients") {
  const Poly<Rational> p2 = legendre_mapped_poly(2);
  CHECK(p2.coeff(0) == Rational(1));
  CHECK(p2.coeff(1) == Rational(-6));
  CHECK(p2.coeff(2) == Rational(6));
  for (int n = 0; n <= 10; ++n) {
    const Poly<Rational> pn = legendre_mapped_poly(n);
    CHECK(pn.degree() == n);
    for (int j = 0; j <= n; ++j) CHECK(pn.coeff(j) == legendre_A(n, j));
  }
}

TEST_CASE("row sums alternate in sign with unit magnitude") {
  // u = 1 evaluates P_n(-1) = (-1)^n.
  for (int n = 0; n <= 15; ++n) {
    Rational total(0);
    for (int j = 0; j <= n; ++j) total += legendre_A(n, j);
    CHECK(total == (n % 2 == 0 ? Rational(1) : Rational(-1)));
  }
}

TEST_CASE("exact sweeps pass on reduced ranges") {
  const IdentityReport one = verify_identity_one(30);
  CHECK(one.all_passed);
  CHECK(one.counterexamples.empty());

  const IdentityReport two = verify_identity_two(20);
  CHECK(two.all_passed);
  CHECK(two.counterexamples.empty());

  const IdentityReport three = verify_identity_three(16);
  CHECK(three.all_passed);
  CHECK(three.counterexamples.empty());

  const IdentityReport bonnet = verify_bonnet_mapped(12);
  CHECK(bonnet.all_passed);
  CHECK(bonnet.counterexamples.empty());

  const IdentityReport dual = verify_legendre_dual(12);
  CHECK(dual.all_passed);
  CHECK(dual.counterexamples.empty());
}

TEST_CASE("exponential-basis evaluation tracks the recurrence value") {
  for (int n : {1, 4, 8, 12})
    for (double t : {0.5, 1.0, 3.0})
      CHECK(legendre_mapped_eval_gap(n, t) < 1e-10);
}

TEST_CASE("report serialization names its identity") {
  const IdentityReport rep = verify_identity_one(5);
  const std::string dumped = rep.to_json().dump();
  CHECK(dumped.find("identity_report") != std::string::npos);
  CHECK(dumped.find("\"all_passed\": true") != std::string::npos);
}

}  // TEST_SUITE
