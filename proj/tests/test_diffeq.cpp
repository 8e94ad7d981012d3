#include <cmath>
#include <vector>

#include "doctest.h"
#include "ltt/diffeq.hpp"
#include "ltt/errors.hpp"

using namespace ltt;

namespace {

std::vector<Rational> roll_recurrence(const std::vector<Rational>& a,
                                      const std::vector<Rational>& init, int n_max) {
  std::vector<Rational> f = init;
  const int p = static_cast<int>(a.size()) - 1;
  for (int n = static_cast<int>(init.size()); n <= n_max; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= p; ++k) acc += a[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(n - k)];
    f.push_back(-acc / a[0]);
  }
  return f;
}

}  // namespace

TEST_SUITE("diffeq") {

TEST_CASE("generating polynomial and companion coefficients") {
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-1), Rational(-1)};
  eq.init = {Rational(0), Rational(1)};
  const Poly<Rational> Q = build_Q(eq);
  CHECK(Q.degree() == 2);
  CHECK(Q.coeff(0) == Rational(1));
  CHECK(Q.coeff(2) == Rational(-1));

  const OdeSpec spec = ode_coefficients(Q);
  REQUIRE(spec.b.size() == 3);
  CHECK(spec.b[0] == Rational(-1));
  CHECK(spec.b[1] == Rational(3));
  CHECK(spec.b[2] == Rational(-1));
  // characteristic(x) = Q(1 - x) identically
  for (const Rational& x : {Rational(0), Rational(2), Rational(-3, 2)})
    CHECK(spec.characteristic().eval(x) == Q.eval(Rational(1 - x)));
}

TEST_CASE("golden-ratio recurrence solves exactly") {
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-1), Rational(-1)};
  eq.init = {Rational(0), Rational(1)};
  const ClosedFormSolution sol = solve(eq, 40);

  CHECK(sol.exact);
  CHECK(sol.residual == 0.0);
  REQUIRE(sol.terms.size() == 2);
  for (const auto& t : sol.terms) CHECK(t.base_exact.d == 5);

  const auto f = roll_recurrence(eq.a, eq.init, 30);
  for (int n = 0; n <= 30; ++n)
    CHECK(sol.eval(n) == doctest::Approx(to_double(f[static_cast<std::size_t>(n)]))
                             .epsilon(1e-12));
}

TEST_CASE("the stated initial-value problem reproduces a shifted sequence") {
  // The image-side route sends the two-term recurrence above to
  // y'' - 3 y' + y = 0.  Transforming the solution of that equation with
  // y(0) = 0, y'(0) = 1 termwise at s = 1 does not give the sequence itself:
  // exact arithmetic shows it gives minus the entry one step ahead.  The
  // solver therefore fits its constants to the recurrence's own starting
  // values rather than to initial data of the companion equation.
  const QuadExt half(Rational(1, 2));
  const QuadExt root5(Rational(0), Rational(1), 5);
  const QuadExt r_plus = (QuadExt(3) + root5) * half;    // growth rates of y
  const QuadExt r_minus = (QuadExt(3) - root5) * half;
  const QuadExt c_plus = QuadExt(1) / root5;              // fitted to y(0), y'(0)
  const QuadExt c_minus = QuadExt(-1) / root5;

  // sanity: the rates solve x^2 - 3x + 1 = 0 and the data fit holds
  for (const QuadExt& r : {r_plus, r_minus})
    CHECK(r * r - QuadExt(3) * r + QuadExt(1) == QuadExt(0));
  CHECK(c_plus + c_minus == QuadExt(0));
  CHECK(c_plus * r_plus + c_minus * r_minus == QuadExt(1));

  const auto image_entry = [&](int n) {
    // exp rule termwise: image of e^{rt} at index n is (1 - r)^{-(n+1)}
    return c_plus * qx_pow(QuadExt(1) - r_plus, -(n + 1)) +
           c_minus * qx_pow(QuadExt(1) - r_minus, -(n + 1));
  };

  const auto fib = roll_recurrence({Rational(1), Rational(-1), Rational(-1)},
                                   {Rational(0), Rational(1)}, 14);
  for (int n = 0; n <= 12; ++n) {
    const QuadExt got = image_entry(n);
    REQUIRE(got.is_rational());
    CHECK(got.x == -fib[static_cast<std::size_t>(n + 1)]);
  }
}

TEST_CASE("distinct rational roots") {
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-5), Rational(6)};
  eq.init = {Rational(0), Rational(1)};
  const ClosedFormSolution sol = solve(eq, 25);
  CHECK(sol.exact);
  CHECK(sol.residual == 0.0);
  REQUIRE(sol.terms.size() == 2);
  for (const auto& t : sol.terms) {
    CHECK(t.base_exact.is_rational());
    CHECK((t.base_exact.x == Rational(2) || t.base_exact.x == Rational(3)));
  }
  // f_n = 3^n - 2^n
  for (int n = 0; n <= 20; ++n)
    CHECK(sol.eval(n) == doctest::Approx(std::pow(3.0, n) - std::pow(2.0, n)).epsilon(1e-12));
}

TEST_CASE("a repeated root brings a polynomial factor") {
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-4), Rational(4)};
  eq.init = {Rational(1), Rational(4)};
  const ClosedFormSolution sol = solve(eq, 25);
  CHECK(sol.exact);
  CHECK(sol.residual == 0.0);
  // f_n = (1 + n) 2^n
  for (int n = 0; n <= 20; ++n)
    CHECK(sol.eval(n) == doctest::Approx((1.0 + n) * std::pow(2.0, n)).epsilon(1e-12));
}

TEST_CASE("complex conjugate roots stay real on evaluation") {
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-2), Rational(2)};
  eq.init = {Rational(0), Rational(1)};
  const ClosedFormSolution sol = solve(eq, 30);
  CHECK(sol.residual <= 1e-10);
  const auto f = roll_recurrence(eq.a, eq.init, 24);
  for (int n = 0; n <= 24; ++n)
    CHECK(sol.eval(n) ==
          doctest::Approx(to_double(f[static_cast<std::size_t>(n)])).epsilon(1e-10));
}

TEST_CASE("a vanishing instantaneous coefficient shifts the problem") {
  DifferenceEquation eq;
  eq.a = {Rational(0), Rational(1), Rational(-1)};
  eq.init = {Rational(3), Rational(3)};
  const ClosedFormSolution sol = solve(eq, 20);
  CHECK(sol.degenerate_bypass);
  CHECK(sol.shift == 1);
  CHECK(sol.residual == 0.0);
  for (int n = 0; n <= 15; ++n) CHECK(sol.eval(n) == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("constant forcing through the convolution part") {
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-1)};
  eq.init = {Rational(0)};
  eq.rhs = DifferenceEquation::Rhs::Constant;
  eq.rhs_constant = Rational(1);
  const ClosedFormSolution sol = solve(eq, 30);
  CHECK(sol.has_particular);
  CHECK(sol.residual == 0.0);
  for (int n = 0; n <= 25; ++n) CHECK(sol.eval(n) == doctest::Approx(1.0 * n).epsilon(1e-12));
}

TEST_CASE("array forcing with a known polynomial solution") {
  // f_n - 2 f_{n-1} = 2 - n has f_n = n when started at 0
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-2)};
  eq.init = {Rational(0)};
  eq.rhs = DifferenceEquation::Rhs::Array;
  for (int n = 0; n <= 26; ++n) eq.rhs_values.push_back(Rational(2 - n));
  const ClosedFormSolution sol = solve(eq, 25);
  CHECK(sol.residual == 0.0);
  for (int n = 0; n <= 25; ++n)
    CHECK(sol.eval(n) == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
}

TEST_CASE("impulse response of the golden-ratio row") {
  const auto y = fundamental_sequence({Rational(1), Rational(-1), Rational(-1)}, 12);
  REQUIRE(y.size() == 13);
  CHECK(y[0] == Rational(1));
  CHECK(y[1] == Rational(1));
  for (int n = 2; n <= 12; ++n)
    CHECK(y[static_cast<std::size_t>(n)] ==
          y[static_cast<std::size_t>(n - 1)] + y[static_cast<std::size_t>(n - 2)]);
}

TEST_CASE("convolution with a unit impulse is the identity") {
  const std::vector<Rational> y = {Rational(1), Rational(2), Rational(5, 3), Rational(-4)};
  const std::vector<Rational> delta = {Rational(1), Rational(0), Rational(0), Rational(0)};
  const auto out = particular_via_convolution(y, delta);
  REQUIRE(out.size() == y.size());
  for (std::size_t i = 0; i < y.size(); ++i) CHECK(out[i] == y[i]);
  CHECK_THROWS_AS(particular_via_convolution(y, {Rational(1)}), DomainError);
}

TEST_CASE("validation rejects malformed equations") {
  DifferenceEquation eq;
  CHECK_THROWS_AS(eq.validate(), DomainError);
  eq.a = {Rational(1), Rational(0)};
  eq.init = {Rational(1)};
  CHECK_THROWS_AS(eq.validate(), DomainError);
  eq.a = {Rational(1), Rational(2)};
  eq.init = {};
  CHECK_THROWS_AS(eq.validate(), MissingInitialData);
  eq.init = {Rational(1)};
  eq.rhs = DifferenceEquation::Rhs::Array;
  eq.rhs_values = {Rational(1)};
  CHECK_THROWS_AS(eq.validate(), MissingInitialData);
  eq.rhs_values = {Rational(1), Rational(1)};
  CHECK_NOTHROW(eq.validate());
  CHECK_THROWS_AS(fundamental_sequence({Rational(0), Rational(1)}, 4), DomainError);
}

TEST_CASE("worked-case reports state their tolerance verdict") {
  for (int case_id : {4, 5, 6}) {
    const Json rep = verify_mapped_equation(case_id);
    const Json* ok = rep.find("all_within_tolerance");
    REQUIRE(ok != nullptr);
    CHECK(ok->is_true());
  }
  CHECK_THROWS_AS(verify_mapped_equation(7), DomainError);
}

}  // TEST_SUITE
