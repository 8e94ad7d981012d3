#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ltt/jsonio.hpp"
#include "ltt/quadrature.hpp"

namespace ltt {

// The sequence image phi_0..phi_N of a function at a fixed abscissa:
// phi_n(s) = (1/n!) * integral_0^inf e^{-st} t^n f(t) dt.
struct ImageSeq {
  double s = 0.0;
  std::vector<double> values;
  std::vector<double> errors;  // per-entry absolute error estimates
  double tolerance = 0.0;      // max over errors

  int n_max() const { return static_cast<int>(values.size()) - 1; }
  double operator[](int n) const { return values.at(static_cast<std::size_t>(n)); }

  Json to_json() const;
  std::string to_csv() const;
};

// One row of the closed-form image table, possibly wrapped by the two
// structural rows (multiply by e^{at}, delay by a).
class ClosedImage {
 public:
  enum class Kind { Const, Exp, Power, PowerExp, Sin, Cos, Log, Shifted, Delayed };

  static ClosedImage constant();
  static ClosedImage exponential(double a);
  static ClosedImage power(double a);      // t^a, a > -1
  static ClosedImage power_exp(double a, double b);  // t^a e^{-bt}
  static ClosedImage sine(double a);
  static ClosedImage cosine(double a);
  static ClosedImage logarithm();

  ClosedImage shifted_by(double a) const;  // image of e^{at} f(t)
  ClosedImage delayed_by(double a) const;  // image of f(t-a), a > 0

  double eval(int n, double s) const;
  std::vector<double> eval_range(int n_max, double s) const;
  // Smallest abscissa above which the image integral converges.
  double abscissa() const;
  // The function this row describes, ready for quadrature.
  SourceFunction source() const;
  std::string label() const;
  Kind kind() const { return kind_; }

 private:
  ClosedImage(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  double a_ = 0.0, b_ = 0.0;
  std::shared_ptr<const ClosedImage> base_;
};

// Forward transform by adaptive quadrature.  Requires s > f.exp_order.
// tol is the target absolute error per entry; entries whose magnitude is so
// small that the target sits below the roundoff floor are computed to
// near-machine relative accuracy instead, and the achieved estimate is
// reported either way.
ImageSeq forward_transform(const SourceFunction& f, double s, int n_max, double tol);

// phi_n = (-1)^n F^(n)(s)/n! from the derivatives of the classical one-sided
// transform; deriv(n, s) must return F^(n)(s).
std::vector<double> image_from_laplace(const std::function<double(int, double)>& deriv, double s,
                                       int n_max);

// Image of the running integral of f: psi_n = sum_{k<=n} phi_k / s^{n-k+1}.
ImageSeq integrate_image(const ImageSeq& phi);

// Image of the convolution: (f*g)_n = sum_{k<=n} phi_{n-k} psi_k.
ImageSeq convolve_images(const ImageSeq& phi, const ImageSeq& psi);

// Image of f(t-a)1_{t>a}: e^{-as} sum_{k<=n} a^{n-k}/(n-k)! phi_k.
ImageSeq image_of_delay(const ImageSeq& phi, double a);

}  // namespace ltt
