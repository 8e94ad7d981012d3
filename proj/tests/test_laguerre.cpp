#include <cmath>
#include <random>

#include "doctest.h"
#include "ltt/errors.hpp"
#include "ltt/laguerre.hpp"

using namespace ltt;

namespace {

// Direct finite sum for L_n, independent of the recurrence in the library.
double laguerre_sum(int n, double x) {
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    double term = binom_double(n, k) / std::tgamma(k + 1.0);
    acc += (k % 2 == 0 ? term : -term) * std::pow(x, k);
  }
  return acc;
}

std::vector<Rational> rand_rationals(std::mt19937& rng, int count) {
  std::vector<Rational> v;
  for (int i = 0; i < count; ++i)
    v.emplace_back(static_cast<int>(rng() % 21) - 10, static_cast<int>(rng() % 5) + 1);
  return v;
}

}  // namespace

TEST_SUITE("laguerre") {

TEST_CASE("laguerre_eval against the explicit sum") {
  CHECK(laguerre_eval(0, 0.7) == 1.0);
  CHECK(laguerre_eval(1, 0.7) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(laguerre_eval(2, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
  for (int n = 0; n <= 10; ++n)
    for (double x : {0.1, 1.0, 3.5})
      CHECK(laguerre_eval(n, x) == doctest::Approx(laguerre_sum(n, x)).epsilon(1e-12));
}

TEST_CASE("the scaled family is a signed rescaling") {
  for (int n = 0; n <= 8; ++n)
    for (double s : {0.5, 2.0}) {
      const double got = laguerre_star_eval(n, 1.3, s);
      const double want = (n % 2 == 0 ? 1.0 : -1.0) * std::sqrt(s) * laguerre_eval(n, s * 1.3);
      CHECK(got == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("coefficient bridge round trips in doubles") {
  std::mt19937 rng(31);
  for (double s : {0.75, 1.0, 2.5}) {
    std::vector<double> phi;
    for (int n = 0; n <= 12; ++n) phi.push_back((static_cast<double>(rng() % 200) - 100) / 64.0);
    const auto a = coefficients_from_image(phi, s);
    const auto back = image_from_coefficients(a, s);
    REQUIRE(back.size() == phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
      CHECK(back[i] == doctest::Approx(phi[i]).epsilon(1e-10));
  }
}

TEST_CASE("coefficients_from_image accepts a packaged image") {
  ImageSeq seq;
  seq.s = 2.0;
  seq.values = {0.5, 0.25, 0.125};
  seq.errors = {0.0, 0.0, 0.0};
  const auto from_seq = coefficients_from_image(seq);
  const auto from_vec = coefficients_from_image(seq.values, 2.0);
  REQUIRE(from_seq.size() == from_vec.size());
  for (std::size_t i = 0; i < from_seq.size(); ++i) CHECK(from_seq[i] == from_vec[i]);
}

TEST_CASE("exact bridge is an involution pair") {
  std::mt19937 rng(32);
  for (const Rational& s : {Rational(1), Rational(2), Rational(1, 3)}) {
    const auto phi = rand_rationals(rng, 11);
    const auto a = bridge_forward_exact(phi, s);
    const auto back = bridge_backward_exact(a, s);
    REQUIRE(back.size() == phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) CHECK(back[i] == phi[i]);
    const auto fwd_again = bridge_forward_exact(back, s);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(fwd_again[i] == a[i]);
  }
}

TEST_CASE("bridge of the geometric image alternates") {
  // phi_n = 1/2^{n+1} at s = 1 maps to A_n = (-1)^n / 2^{n+1}
  std::vector<Rational> phi;
  for (int n = 0; n <= 8; ++n) phi.push_back(rat_pow(Rational(1, 2), n + 1));
  const auto a = bridge_forward_exact(phi, Rational(1));
  for (int n = 0; n <= 8; ++n) {
    const Rational want = rat_pow(Rational(-1, 2), n) * Rational(1, 2);
    CHECK(a[static_cast<std::size_t>(n)] == want);
  }
}

TEST_CASE("difference energy equals coefficient energy") {
  // phi is the image of e^{-t} at s = 3: phi_n = 1/4^{n+1}
  const double s = 3.0;
  std::vector<double> phi;
  for (int n = 0; n <= 14; ++n) phi.push_back(std::pow(4.0, -(n + 1)));
  const auto a = coefficients_from_image(phi, s);
  for (int k_max : {3, 7, 11}) {
    double energy = 0.0;
    for (int k = 0; k <= k_max; ++k) energy += a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)];
    CHECK(sc_energy(phi, s, k_max) == doctest::Approx(energy / s).epsilon(1e-12));
  }
}

TEST_CASE("reconstruction of the decaying exponential tightens") {
  const ClosedImage row = ClosedImage::exponential(-1.0);
  const double s = 1.0;
  const auto phi = row.eval_range(20, s);
  const auto a = coefficients_from_image(phi, s);
  const SourceFunction f = row.source();

  const double e8 = weighted_l2_error(f, a, s, 8);
  const double e16 = weighted_l2_error(f, a, s, 16);
  const double e20 = weighted_l2_error(f, a, s, 20);
  CHECK(e16 <= e8);
  CHECK(e20 <= e16 + 2e-6);
  CHECK(e20 < 1e-5);

  for (double x : {0.5, 1.0, 2.0})
    CHECK(reconstruct(a, s, x) == doctest::Approx(std::exp(-x)).epsilon(1e-5));
}

TEST_CASE("weighted_l2_error rejects an out-of-range term count") {
  const ClosedImage row = ClosedImage::constant();
  const auto a = coefficients_from_image(row.eval_range(4, 1.0), 1.0);
  CHECK_THROWS_AS(weighted_l2_error(row.source(), a, 1.0, 5), DomainError);
  CHECK_THROWS_AS(weighted_l2_error(row.source(), a, 1.0, -1), DomainError);
}

TEST_CASE("coefficient energy stays below function energy") {
  const ClosedImage row = ClosedImage::exponential(-1.0);
  const double s = 1.0;
  const auto a = coefficients_from_image(row.eval_range(12, s), s);
  const BesselCheck bc = bessel_check(row.source(), a, s);
  // integral of e^{-x} e^{-2x} over (0, inf)
  CHECK(bc.function_energy == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(bc.coefficient_energy <= bc.function_energy * (1.0 + 1e-10));
  CHECK(bc.coefficient_energy == doctest::Approx(bc.function_energy).epsilon(1e-6));
}

}  // TEST_SUITE
