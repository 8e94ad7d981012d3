#include "ltt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "ltt/errors.hpp"

namespace ltt {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK qk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod = 0.0;
  double error = 0.0;
  double abs_integral = 0.0;  // K15 applied to |g|, used as a cancellation-aware scale
};

template <class F>
PanelEstimate gk15(const F& g, double a, double b) {
  const double xm = 0.5 * (a + b);
  const double xr = 0.5 * (b - a);
  double fc = g(xm);
  double result_g = fc * kWg[3];
  double result_k = fc * kWgk[7];
  double result_abs = std::abs(fc) * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    const double dx = xr * kXgk[i];
    const double f1 = g(xm - dx);
    const double f2 = g(xm + dx);
    result_k += kWgk[i] * (f1 + f2);
    result_abs += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) result_g += kWg[i / 2] * (f1 + f2);
  }
  PanelEstimate est;
  est.kronrod = result_k * xr;
  est.abs_integral = result_abs * std::abs(xr);
  est.error = std::abs((result_k - result_g) * xr);
  return est;
}

struct Panel {
  double lo, hi;
  double value, error, abs_integral;
  int segment;  // which coordinate chart the panel lives in
  bool operator<(const Panel& other) const { return error < other.error; }
};

// A segment is an interval in some transformed coordinate together with the
// integrand in that coordinate.
struct Segment {
  std::function<double(double)> g;
  double lo, hi;
};

class AdaptiveRun {
 public:
  explicit AdaptiveRun(long max_panels) : budget_(max_panels) {}

  void add_segment(Segment seg) {
    if (seg.hi <= seg.lo) return;
    segments_.push_back(std::move(seg));
  }

  QuadratureResult run(double tol_abs) {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      const auto& s = segments_[i];
      push_panel(static_cast<int>(i), s.lo, s.hi);
    }
    long iterations = 0;
    while (!heap_.empty()) {
      const double err = sum_error_ + frozen_error_;
      const double target = std::max(tol_abs, 2e-14 * (sum_abs_ + frozen_abs_));
      if (err <= target) break;
      if (panels_used_ >= budget_) {
        if (err <= 8 * target) break;  // near miss, accept with honest error
        throw QuadratureFailure("adaptive quadrature: panel budget exhausted", tol_abs, err);
      }
      std::pop_heap(heap_.begin(), heap_.end());
      Panel worst = heap_.back();
      heap_.pop_back();
      sum_value_ -= worst.value;
      sum_error_ -= worst.error;
      sum_abs_ -= worst.abs_integral;
      const bool at_floor = worst.hi - worst.lo <
                                4e-16 * (std::abs(worst.lo) + std::abs(worst.hi) + 1e-300) ||
                            worst.error <= 1e-16 * worst.abs_integral;
      if (at_floor) {
        // Refining would only churn roundoff; keep the panel with its error.
        frozen_value_ += worst.value;
        frozen_error_ += worst.error;
        frozen_abs_ += worst.abs_integral;
        continue;
      }
      const double mid = 0.5 * (worst.lo + worst.hi);
      push_panel(worst.segment, worst.lo, mid);
      push_panel(worst.segment, mid, worst.hi);
      if (++iterations % 256 == 0) recompute_sums();  // cap accumulator drift
    }
    recompute_sums();
    QuadratureResult res;
    res.value = sum_value_ + frozen_value_;
    res.error = sum_error_ + frozen_error_;
    res.evaluations = 15L * panels_used_;
    return res;
  }

 private:
  void push_panel(int segment, double lo, double hi) {
    const auto& s = segments_[static_cast<std::size_t>(segment)];
    PanelEstimate est = gk15(s.g, lo, hi);
    heap_.push_back(Panel{lo, hi, est.kronrod, est.error, est.abs_integral, segment});
    std::push_heap(heap_.begin(), heap_.end());
    sum_value_ += est.kronrod;
    sum_error_ += est.error;
    sum_abs_ += est.abs_integral;
    ++panels_used_;
  }

  void recompute_sums() {
    sum_value_ = sum_error_ = sum_abs_ = 0;
    for (const auto& p : heap_) {
      sum_value_ += p.value;
      sum_error_ += p.error;
      sum_abs_ += p.abs_integral;
    }
  }

  std::vector<Segment> segments_;
  std::vector<Panel> heap_;
  long budget_;
  long panels_used_ = 0;
  double sum_value_ = 0, sum_error_ = 0, sum_abs_ = 0;
  double frozen_value_ = 0, frozen_error_ = 0, frozen_abs_ = 0;
};

// Smallest m in [2, 9] that makes m * w an integer, for the head variable
// change t = u^m; defaults to 2 when w has no small rational structure.
int head_power(double w) {
  for (int m = 2; m <= 9; ++m) {
    const double mw = m * w;
    if (std::abs(mw - std::round(mw)) < 1e-9) return m;
  }
  return 2;
}

bool essentially_integer(double w) { return std::abs(w - std::round(w)) < 1e-12 && w > -0.5; }

}  // namespace

SourceFunction SourceFunction::from_plain(std::function<double(double)> f, double exp_order,
                                          double poly_degree, double bound,
                                          double origin_exponent, std::string label) {
  SourceFunction s;
  s.damped = [f = std::move(f)](double t, double sigma) { return f(t) * std::exp(-sigma * t); };
  s.exp_order = exp_order;
  s.poly_degree = poly_degree;
  s.bound = bound;
  s.origin_exponent = origin_exponent;
  s.label = std::move(label);
  return s;
}

QuadratureResult laplace_weighted_integral(const SourceFunction& f, double s, double nu,
                                           double tol_abs, const QuadratureOptions& opt) {
  if (!(s > f.exp_order))
    throw DomainError("laplace_weighted_integral: abscissa " + std::to_string(s) +
                      " not above exponential order " + std::to_string(f.exp_order));
  const double w0 = nu + f.origin_exponent;
  if (!(w0 > -1.0))
    throw DomainError("laplace_weighted_integral: origin exponent " + std::to_string(w0) +
                      " not integrable");
  if (!(tol_abs > 0)) throw DomainError("laplace_weighted_integral: tolerance must be positive");

  const double lg = std::lgamma(nu + 1.0);
  auto g = [&f, s, nu, lg](double t) {
    if (t <= 0) return 0.0;
    const double logw = (nu != 0.0 ? nu * std::log(t) : 0.0) - lg;
    if (logw < -745.0) return 0.0;
    return f.damped(t, s) * std::exp(logw);
  };

  // Where the weight peaks and how fast the tail dies.
  const double decay = s - f.exp_order;
  const double peak = std::max((nu + std::max(f.origin_exponent, 0.0) + 1.0) / s, 1e-3);

  // Split point T: the integrand bound drops below tol * e^{-4} there.
  const double log_tol = std::log(std::max(tol_abs * 1e-2, 1e-300));
  double T = std::max({2.0 * peak, peak + 8.0 / decay, 1.0}) * opt.tail_split_factor;
  for (int i = 0; i < 200; ++i) {
    const double bound_exp = std::log(std::max(f.bound, 1e-300)) +
                             (nu + f.poly_degree) * std::log(T) - decay * T - lg;
    if (bound_exp < log_tol - 4.0) break;
    T *= 1.5;
  }

  AdaptiveRun run(opt.max_panels);

  // Head: remove the algebraic origin factor t^w0 when it is fractional.
  double head_end = 0.0;
  if (!essentially_integer(w0)) {
    head_end = std::min(0.5 * peak, 0.5);
    const int m = head_power(w0);
    const double md = m;
    run.add_segment({[g, md](double u) { return g(std::pow(u, md)) * md * std::pow(u, md - 1.0); },
                     0.0, std::pow(head_end, 1.0 / md)});
  }

  // Middle: plain panels, split at declared breakpoints.
  std::vector<double> cuts;
  for (double b : f.breakpoints)
    if (b > head_end && b < T) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double lo = head_end;
  for (double b : cuts) {
    run.add_segment({g, lo, b});
    lo = b;
  }
  // Subdivide the main stretch coarsely up front so the heap starts with a
  // picture of where the mass is.
  const int coarse = 8;
  for (int i = 0; i < coarse; ++i) {
    const double a = lo + (T - lo) * i / coarse;
    const double b = lo + (T - lo) * (i + 1) / coarse;
    run.add_segment({g, a, b});
  }

  // Tail: t = T - log(1 - v)/c maps (0,1) onto (T, inf); with c = decay/2 the
  // transformed integrand still vanishes at v = 1 for any admissible f.
  const double c = 0.5 * decay;
  run.add_segment({[g, T, c](double v) {
                     if (v >= 1.0) return 0.0;
                     const double t = T - std::log1p(-v) / c;
                     return g(t) / (c * (1.0 - v));
                   },
                   0.0, 1.0});

  return run.run(tol_abs);
}

QuadratureResult integrate_finite(const std::function<double(double)>& g, double lo, double hi,
                                  double tol_abs, const std::vector<double>& breakpoints,
                                  double a_lo, double a_hi, const QuadratureOptions& opt) {
  if (!(hi > lo)) throw DomainError("integrate_finite: empty interval");
  AdaptiveRun run(opt.max_panels);
  const double width = hi - lo;
  double head = lo, tail = hi;
  if (a_lo != 0.0 && !essentially_integer(a_lo)) {
    head = lo + 0.25 * width;
    const int m = head_power(a_lo);
    const double md = m;
    run.add_segment(
        {[&g, lo, md](double u) { return g(lo + std::pow(u, md)) * md * std::pow(u, md - 1.0); },
         0.0, std::pow(head - lo, 1.0 / md)});
  }
  if (a_hi != 0.0 && !essentially_integer(a_hi)) {
    tail = hi - 0.25 * width;
    const int m = head_power(a_hi);
    const double md = m;
    run.add_segment(
        {[&g, hi, md](double u) { return g(hi - std::pow(u, md)) * md * std::pow(u, md - 1.0); },
         0.0, std::pow(hi - tail, 1.0 / md)});
  }
  if (tail <= head) throw DomainError("integrate_finite: singular regions overlap");
  std::vector<double> cuts;
  for (double b : breakpoints)
    if (b > head && b < tail) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double start = head;
  for (double b : cuts) {
    run.add_segment({g, start, b});
    start = b;
  }
  run.add_segment({g, start, tail});
  return run.run(tol_abs);
}

}  // namespace ltt
