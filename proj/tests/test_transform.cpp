#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "ltt/errors.hpp"
#include "ltt/transform.hpp"

using namespace ltt;

namespace {

// Independent statement of each closed row, written from the defining
// integral rather than through the library's own evaluators.
double exp_row(int n, double s, double a) { return std::pow(s - a, -(n + 1)); }

double trig_row(int n, double s, double a, bool want_sine) {
  const std::complex<double> v = std::pow(std::complex<double>(s, -a), -(n + 1));
  return want_sine ? v.imag() : v.real();
}

double power_row(int n, double s, double a) {
  return std::exp(std::lgamma(n + a + 1) - std::lgamma(n + 1.0) - (n + a + 1) * std::log(s));
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("closed rows match their defining formulas") {
  for (double s : {0.9, 2.3}) {
    for (int n = 0; n <= 12; ++n) {
      CHECK(ClosedImage::constant().eval(n, s) ==
            doctest::Approx(exp_row(n, s, 0.0)).epsilon(1e-14));
      CHECK(ClosedImage::exponential(0.6).eval(n, s) ==
            doctest::Approx(exp_row(n, s, 0.6)).epsilon(1e-14));
      CHECK(ClosedImage::sine(1.4).eval(n, s) ==
            doctest::Approx(trig_row(n, s, 1.4, true)).epsilon(1e-13));
      CHECK(ClosedImage::cosine(0.8).eval(n, s) ==
            doctest::Approx(trig_row(n, s, 0.8, false)).epsilon(1e-13));
      CHECK(ClosedImage::power(0.5).eval(n, s) ==
            doctest::Approx(power_row(n, s, 0.5)).epsilon(1e-13));
    }
  }
  // entry 0 of the log row at s = 1 is minus the Euler constant
  CHECK(ClosedImage::logarithm().eval(0, 1.0) ==
        doctest::Approx(-std::numbers::egamma).epsilon(1e-15));
  // power row with integer exponent: Gamma(6)/(3! 2^6) = 120/384
  CHECK(ClosedImage::power(2.0).eval(3, 2.0) == doctest::Approx(0.3125).epsilon(1e-14));
}

TEST_CASE("structural wrappers and the convergence abscissa") {
  const ClosedImage base = ClosedImage::exponential(0.7);
  CHECK(base.abscissa() == doctest::Approx(0.7));
  CHECK(base.shifted_by(-0.5).abscissa() == doctest::Approx(0.2));
  CHECK(base.delayed_by(1.0).abscissa() == doctest::Approx(0.7));
  // e^{at} e^{bt} = e^{(a+b)t}
  const ClosedImage wrapped = ClosedImage::exponential(0.3).shifted_by(0.4);
  for (int n = 0; n <= 8; ++n)
    CHECK(wrapped.eval(n, 1.5) == doctest::Approx(base.eval(n, 1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(base.eval(2, 0.7), DomainError);
  CHECK_THROWS_AS(ClosedImage::power(-1.5), DomainError);
}

TEST_CASE("eval_range is entrywise eval") {
  const ClosedImage row = ClosedImage::cosine(1.1).shifted_by(-0.4);
  const auto all = row.eval_range(10, 1.2);
  REQUIRE(all.size() == 11);
  for (int n = 0; n <= 10; ++n) CHECK(all[static_cast<std::size_t>(n)] == row.eval(n, 1.2));
}

TEST_CASE("forward_transform reproduces closed rows") {
  for (const ClosedImage& row :
       {ClosedImage::exponential(-0.5), ClosedImage::power(0.5),
        ClosedImage::sine(0.9).shifted_by(-0.3), ClosedImage::cosine(1.2).delayed_by(0.75)}) {
    const double s = 1.35;
    const ImageSeq seq = forward_transform(row.source(), s, 10, 1e-12);
    REQUIRE(seq.n_max() == 10);
    CHECK(seq.s == s);
    for (int n = 0; n <= 10; ++n) {
      const double want = row.eval(n, s);
      CHECK(std::abs(seq[n] - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("forward_transform rejects an abscissa at the growth rate") {
  const ClosedImage row = ClosedImage::exponential(2.0);
  CHECK_THROWS_AS(forward_transform(row.source(), 2.0, 3, 1e-10), DomainError);
  CHECK_THROWS_AS(forward_transform(row.source(), 1.0, 3, 1e-10), DomainError);
}

TEST_CASE("image_from_laplace matches the exponential row") {
  // F(s) = 1/(s-a), F^(n)(s) = (-1)^n n!/(s-a)^{n+1}
  const double a = 0.45;
  const auto deriv = [a](int n, double s) {
    double f = std::pow(s - a, -(n + 1));
    for (int k = 1; k <= n; ++k) f *= -k;
    return f;
  };
  const auto got = image_from_laplace(deriv, 1.7, 9);
  REQUIRE(got.size() == 10);
  for (int n = 0; n <= 9; ++n)
    CHECK(got[static_cast<std::size_t>(n)] == doctest::Approx(exp_row(n, 1.7, a)).epsilon(1e-13));
}

TEST_CASE("integrate_image turns ones into the ramp") {
  const double s = 1.9;
  ImageSeq ones;
  ones.s = s;
  for (int n = 0; n <= 9; ++n) {
    ones.values.push_back(exp_row(n, s, 0.0));
    ones.errors.push_back(0.0);
  }
  const ImageSeq ramp = integrate_image(ones);
  for (int n = 0; n <= 9; ++n)
    CHECK(ramp[n] == doctest::Approx((n + 1) * std::pow(s, -(n + 2))).epsilon(1e-14));
}

TEST_CASE("convolving two unit rows gives the ramp") {
  const double s = 2.4;
  ImageSeq ones;
  ones.s = s;
  for (int n = 0; n <= 8; ++n) {
    ones.values.push_back(exp_row(n, s, 0.0));
    ones.errors.push_back(0.0);
  }
  const ImageSeq conv = convolve_images(ones, ones);
  for (int n = 0; n <= 8; ++n)
    CHECK(conv[n] == doctest::Approx((n + 1) * std::pow(s, -(n + 2))).epsilon(1e-14));
}

TEST_CASE("image_of_delay agrees with the wrapped closed row") {
  const double s = 1.6, a = 0.8;
  const ClosedImage base = ClosedImage::exponential(-0.25);
  ImageSeq phi;
  phi.s = s;
  for (int n = 0; n <= 10; ++n) {
    phi.values.push_back(base.eval(n, s));
    phi.errors.push_back(0.0);
  }
  const ImageSeq delayed = image_of_delay(phi, a);
  const ClosedImage wrapped = base.delayed_by(a);
  for (int n = 0; n <= 10; ++n)
    CHECK(delayed[n] == doctest::Approx(wrapped.eval(n, s)).epsilon(1e-13));
}

TEST_CASE("serialization carries the fixed field layout") {
  ImageSeq seq;
  seq.s = 2.0;
  seq.values = {0.5, 0.25};
  seq.errors = {1e-12, 1e-12};
  seq.tolerance = 1e-12;
  const std::string js = seq.to_json().dump();
  CHECK(js.find("\"kind\": \"image_seq\"") != std::string::npos);
  CHECK(js.find("\"values\": [0.5, 0.25]") != std::string::npos);
  const std::string csv = seq.to_csv();
  CHECK(csv.rfind("n,phi_n\n", 0) == 0);
  CHECK(csv.find("0,0.5\n") != std::string::npos);
}

TEST_CASE("weighted driver handles plain building blocks") {
  const auto one = SourceFunction::from_plain([](double) { return 1.0; }, 0.0, 0.0, 1.0, 0.0);
  const auto r = laplace_weighted_integral(one, 3.0, 0.0, 1e-12);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.error <= 1e-10);
  // nu folds a power of t into the weight: integral = s^{-(nu+1)}
  const auto r2 = laplace_weighted_integral(one, 2.0, 3.0, 1e-12);
  CHECK(r2.value == doctest::Approx(std::pow(2.0, -4.0)).epsilon(1e-12));
}

TEST_CASE("finite quadrature handles endpoint singularities and kinks") {
  const auto inv_sqrt = [](double t) { return 1.0 / std::sqrt(t); };
  const auto r = integrate_finite(inv_sqrt, 0.0, 1.0, 1e-12, {}, -0.5, 0.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-11));

  const auto hat = [](double t) { return t < 1.0 ? t : 2.0 - t; };
  const auto r2 = integrate_finite(hat, 0.0, 2.0, 1e-12, {1.0});
  CHECK(r2.value == doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
