#include "ltt/transform.hpp"

#include <cmath>
#include <sstream>

#include "ltt/errors.hpp"

namespace ltt {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double harmonic_number(int n) {
  double h = 0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

double factorial_d(int n) { return std::exp(std::lgamma(n + 1.0)); }

}  // namespace

Json ImageSeq::to_json() const {
  Json j = Json::object();
  j.set("schema", 1);
  j.set("kind", "image_seq");
  j.set("s", s);
  j.set("tol", tolerance);
  j.set("values", Json::numbers(values));
  return j;
}

std::string ImageSeq::to_csv() const {
  std::ostringstream out;
  out << "n,phi_n\n";
  for (std::size_t n = 0; n < values.size(); ++n)
    out << n << ',' << Json::format_double(values[n]) << '\n';
  return out.str();
}

ClosedImage ClosedImage::constant() { return {Kind::Const, 0, 0}; }
ClosedImage ClosedImage::exponential(double a) { return {Kind::Exp, a, 0}; }
ClosedImage ClosedImage::power(double a) {
  if (!(a > -1)) throw DomainError("power row requires exponent > -1");
  return {Kind::Power, a, 0};
}
ClosedImage ClosedImage::power_exp(double a, double b) {
  if (!(a > -1)) throw DomainError("power-exp row requires exponent > -1");
  return {Kind::PowerExp, a, b};
}
ClosedImage ClosedImage::sine(double a) { return {Kind::Sin, a, 0}; }
ClosedImage ClosedImage::cosine(double a) { return {Kind::Cos, a, 0}; }
ClosedImage ClosedImage::logarithm() { return {Kind::Log, 0, 0}; }

ClosedImage ClosedImage::shifted_by(double a) const {
  ClosedImage w{Kind::Shifted, a, 0};
  w.base_ = std::make_shared<ClosedImage>(*this);
  return w;
}

ClosedImage ClosedImage::delayed_by(double a) const {
  if (!(a > 0)) throw DomainError("delay requires a positive offset");
  ClosedImage w{Kind::Delayed, a, 0};
  w.base_ = std::make_shared<ClosedImage>(*this);
  return w;
}

double ClosedImage::eval(int n, double s) const {
  if (n < 0) throw DomainError("image index must be nonnegative");
  if (!(s > abscissa())) throw DomainError("abscissa " + std::to_string(s) + " not above " + std::to_string(abscissa()));
  switch (kind_) {
    case Kind::Const:
      return std::pow(s, -(n + 1.0));
    case Kind::Exp:
      return std::pow(s - a_, -(n + 1.0));
    case Kind::Power:
      return std::exp(std::lgamma(a_ + n + 1.0) - (n + a_ + 1.0) * std::log(s) -
                      std::lgamma(n + 1.0));
    case Kind::PowerExp:
      return std::exp(std::lgamma(a_ + n + 1.0) - (n + a_ + 1.0) * std::log(s + b_) -
                      std::lgamma(n + 1.0));
    case Kind::Sin:
      return std::sin((n + 1.0) * std::atan2(a_, s)) *
             std::exp(-0.5 * (n + 1.0) * std::log(s * s + a_ * a_));
    case Kind::Cos:
      return std::cos((n + 1.0) * std::atan2(a_, s)) *
             std::exp(-0.5 * (n + 1.0) * std::log(s * s + a_ * a_));
    case Kind::Log:
      return (harmonic_number(n) - kEulerGamma - std::log(s)) * std::pow(s, -(n + 1.0));
    case Kind::Shifted:
      return base_->eval(n, s - a_);
    case Kind::Delayed: {
      // Weight a^{n-k}/(n-k)! rides on the lower-index entries: the delayed
      // image mixes phi_0..phi_n with the *high* powers of a on low k.
      double sum = 0;
      for (int k = 0; k <= n; ++k)
        sum += std::pow(a_, n - k) / factorial_d(n - k) * base_->eval(k, s);
      return std::exp(-a_ * s) * sum;
    }
  }
  return 0;
}

std::vector<double> ClosedImage::eval_range(int n_max, double s) const {
  std::vector<double> v(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) v[static_cast<std::size_t>(n)] = eval(n, s);
  return v;
}

double ClosedImage::abscissa() const {
  switch (kind_) {
    case Kind::Const:
    case Kind::Power:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Log:
      return 0.0;
    case Kind::Exp:
      return a_;
    case Kind::PowerExp:
      return -b_;
    case Kind::Shifted:
      return base_->abscissa() + a_;
    case Kind::Delayed:
      return std::max(base_->abscissa(), 0.0);
  }
  return 0.0;
}

SourceFunction ClosedImage::source() const {
  SourceFunction f;
  f.label = label();
  switch (kind_) {
    case Kind::Const:
      f.damped = [](double t, double sig) { return std::exp(-sig * t); };
      return f;
    case Kind::Exp:
      f.damped = [a = a_](double t, double sig) { return std::exp((a - sig) * t); };
      f.exp_order = a_;
      return f;
    case Kind::Power:
      f.damped = [a = a_](double t, double sig) { return std::exp(a * std::log(t) - sig * t); };
      f.poly_degree = a_;
      f.origin_exponent = a_;
      return f;
    case Kind::PowerExp:
      f.damped = [a = a_, b = b_](double t, double sig) {
        return std::exp(a * std::log(t) - (sig + b) * t);
      };
      f.poly_degree = a_;
      f.exp_order = -b_;
      f.origin_exponent = a_;
      return f;
    case Kind::Sin:
      f.damped = [a = a_](double t, double sig) { return std::sin(a * t) * std::exp(-sig * t); };
      f.origin_exponent = 1.0;
      return f;
    case Kind::Cos:
      f.damped = [a = a_](double t, double sig) { return std::cos(a * t) * std::exp(-sig * t); };
      return f;
    case Kind::Log:
      f.damped = [](double t, double sig) { return std::log(t) * std::exp(-sig * t); };
      f.poly_degree = 1.0;       // |ln t| <= t for t >= 1
      f.origin_exponent = -2e-3; // mild: |ln t| grows slower than any power
      return f;
    case Kind::Shifted: {
      SourceFunction base = base_->source();
      f = base;
      f.damped = [base, a = a_](double t, double sig) { return base.damped(t, sig - a); };
      f.exp_order = base.exp_order + a_;
      return f;
    }
    case Kind::Delayed: {
      SourceFunction base = base_->source();
      f = base;
      f.damped = [base, a = a_](double t, double sig) {
        return t > a ? base.damped(t - a, sig) * std::exp(-sig * a) : 0.0;
      };
      f.origin_exponent = 0.0;
      // Base kinks move out by the offset, and a decaying base loses a factor
      // e^{-r a} against a bound stated at t instead of t - a.
      f.breakpoints.clear();
      for (double b : base.breakpoints) f.breakpoints.push_back(b + a_);
      f.breakpoints.push_back(a_);
      f.bound = base.bound * std::exp(std::max(0.0, -base.exp_order * a_));
      return f;
    }
  }
  return f;
}

std::string ClosedImage::label() const {
  char buf[96];
  switch (kind_) {
    case Kind::Const:
      return "const";
    case Kind::Exp:
      std::snprintf(buf, sizeof buf, "exp(a=%g)", a_);
      return buf;
    case Kind::Power:
      std::snprintf(buf, sizeof buf, "power(a=%g)", a_);
      return buf;
    case Kind::PowerExp:
      std::snprintf(buf, sizeof buf, "power-exp(a=%g,b=%g)", a_, b_);
      return buf;
    case Kind::Sin:
      std::snprintf(buf, sizeof buf, "sin(a=%g)", a_);
      return buf;
    case Kind::Cos:
      std::snprintf(buf, sizeof buf, "cos(a=%g)", a_);
      return buf;
    case Kind::Log:
      return "log";
    case Kind::Shifted:
      std::snprintf(buf, sizeof buf, "exp-shift(a=%g)|", a_);
      return buf + base_->label();
    case Kind::Delayed:
      std::snprintf(buf, sizeof buf, "delay(a=%g)|", a_);
      return buf + base_->label();
  }
  return "?";
}

ImageSeq forward_transform(const SourceFunction& f, double s, int n_max, double tol) {
  if (n_max < 0) throw DomainError("forward_transform: n_max must be nonnegative");
  ImageSeq seq;
  seq.s = s;
  seq.values.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.errors.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    QuadratureResult r = laplace_weighted_integral(f, s, n, tol);
    seq.values.push_back(r.value);
    seq.errors.push_back(r.error);
    seq.tolerance = std::max(seq.tolerance, r.error);
  }
  return seq;
}

std::vector<double> image_from_laplace(const std::function<double(int, double)>& deriv, double s,
                                       int n_max) {
  std::vector<double> phi(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    phi[static_cast<std::size_t>(n)] = sign * deriv(n, s) / factorial_d(n);
  }
  return phi;
}

ImageSeq integrate_image(const ImageSeq& phi) {
  ImageSeq psi;
  psi.s = phi.s;
  const double s = phi.s;
  psi.values.resize(phi.values.size(), 0.0);
  psi.errors.resize(phi.values.size(), 0.0);
  for (std::size_t n = 0; n < phi.values.size(); ++n) {
    double v = 0, e = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double w = std::pow(s, -(static_cast<double>(n - k) + 1.0));
      v += phi.values[k] * w;
      e += (k < phi.errors.size() ? phi.errors[k] : 0.0) * std::abs(w);
    }
    psi.values[n] = v;
    psi.errors[n] = e;
    psi.tolerance = std::max(psi.tolerance, e);
  }
  return psi;
}

ImageSeq convolve_images(const ImageSeq& phi, const ImageSeq& psi) {
  if (phi.s != psi.s) throw DomainError("convolve_images: mismatched abscissae");
  ImageSeq out;
  out.s = phi.s;
  const std::size_t n_len = std::min(phi.values.size(), psi.values.size());
  out.values.resize(n_len, 0.0);
  out.errors.resize(n_len, 0.0);
  for (std::size_t n = 0; n < n_len; ++n) {
    double v = 0, e = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double a = phi.values[n - k], b = psi.values[k];
      const double ea = n - k < phi.errors.size() ? phi.errors[n - k] : 0.0;
      const double eb = k < psi.errors.size() ? psi.errors[k] : 0.0;
      v += a * b;
      e += std::abs(a) * eb + std::abs(b) * ea;
    }
    out.values[n] = v;
    out.errors[n] = e;
    out.tolerance = std::max(out.tolerance, e);
  }
  return out;
}

ImageSeq image_of_delay(const ImageSeq& phi, double a) {
  if (!(a > 0)) throw DomainError("image_of_delay: offset must be positive");
  ImageSeq out;
  out.s = phi.s;
  out.values.resize(phi.values.size(), 0.0);
  out.errors.resize(phi.values.size(), 0.0);
  const double damp = std::exp(-a * phi.s);
  for (std::size_t n = 0; n < phi.values.size(); ++n) {
    double v = 0, e = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double w = std::pow(a, static_cast<double>(n - k)) / factorial_d(static_cast<int>(n - k));
      v += w * phi.values[k];
      e += w * (k < phi.errors.size() ? phi.errors[k] : 0.0);
    }
    out.values[n] = damp * v;
    out.errors[n] = damp * e;
    out.tolerance = std::max(out.tolerance, out.errors[n]);
  }
  return out;
}

}  // namespace ltt
