#include "ltt/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <thread>
#include <tuple>

#include "ltt/backdiff.hpp"
#include "ltt/diffeq.hpp"
#include "ltt/identities.hpp"
#include "ltt/laguerre.hpp"
#include "ltt/residue.hpp"
#include "ltt/special.hpp"
#include "ltt/transform.hpp"

namespace ltt {
namespace {

template <class... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// Relative gap with a mixed floor: entries of order one and below are judged
// on an absolute scale so a near-zero target cannot inflate the quotient.
double mixed_gap(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

struct Worst {
  double value = 0.0;
  std::string where;

  void offer(double v, std::string w) {
    if (v > value) {
      value = v;
      where = std::move(w);
    }
  }
};

// ---------------------------------------------------------------- check 1

SuiteCheck check_image_table(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "image-table";
  const int n_max = opt.quick ? 8 : 20;
  const std::vector<double> offsets =
      opt.quick ? std::vector<double>{0.85, 2.38}
                : std::vector<double>{0.85, 1.41, 2.38, 3.56, 5.81};
  // Oscillatory rows cancel: the entry is smaller than the integrand's mass
  // by (s/|s-ia|)^{n+1}, and double-precision panel sums bottom out near
  // 1e-15 of the mass.  Frequencies stay comparable to the smallest
  // abscissa so that ratio never eats the 1e-8 target at n = 20.
  const std::vector<ClosedImage> rows = {
      ClosedImage::constant(),
      ClosedImage::exponential(0.7),
      ClosedImage::power(0.5),
      ClosedImage::power_exp(1.5, 0.6),
      ClosedImage::sine(0.9),
      ClosedImage::cosine(0.75),
      ClosedImage::logarithm(),
      ClosedImage::cosine(0.9).shifted_by(-0.8),
      ClosedImage::exponential(-0.5).delayed_by(1.25),
  };
  Worst worst;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const SourceFunction src = rows[r].source();
    for (std::size_t si = 0; si < offsets.size(); ++si) {
      const double s = rows[r].abscissa() + offsets[si];
      std::vector<double> closed = rows[r].eval_range(n_max, s);
      if (opt.inject_fault != 0 && r == 1 && si == 0)
        closed[static_cast<std::size_t>(std::min(5, n_max))] *= 1.0 + 1e-4;
      const ImageSeq got = forward_transform(src, s, n_max, 1e-30);
      for (int n = 0; n <= n_max; ++n) {
        const double want = closed[static_cast<std::size_t>(n)];
        const double rel = std::abs(got[n] - want) / std::max(std::abs(want), 1e-300);
        worst.offer(rel, fmt("%s, s=%.4g, n=%d", rows[r].label().c_str(), s, n));
      }
    }
  }
  c.passed = worst.value <= 1e-8;
  c.detail = fmt("worst rel %.2e (%s)", worst.value, worst.where.c_str());
  return c;
}

// ---------------------------------------------------------------- check 2

SuiteCheck check_transform_rules(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "transform-rules";
  const int n_max = opt.quick ? 6 : 12;
  const double tol = 1e-7;
  Worst worst;

  // Derivative rule: entries from the classical transform's derivatives
  // against direct quadrature.
  {
    struct Probe {
      ClosedImage row;
      std::function<double(int, double)> deriv;  // F^(n)(s)
      const char* label;
    };
    const auto fact = [](int n) { return std::exp(std::lgamma(n + 1.0)); };
    std::vector<Probe> probes;
    probes.push_back({ClosedImage::constant(),
                      [fact](int n, double s) {
                        const double sign = n % 2 == 0 ? 1.0 : -1.0;
                        return sign * fact(n) * std::pow(s, -(n + 1.0));
                      },
                      "const"});
    probes.push_back({ClosedImage::exponential(0.5),
                      [fact](int n, double s) {
                        const double sign = n % 2 == 0 ? 1.0 : -1.0;
                        return sign * fact(n) * std::pow(s - 0.5, -(n + 1.0));
                      },
                      "exp(a=0.5)"});
    probes.push_back({ClosedImage::sine(1.0),
                      [fact](int n, double s) {
                        const std::complex<double> z(s, -1.0);
                        const double sign = n % 2 == 0 ? 1.0 : -1.0;
                        return sign * fact(n) * std::imag(std::pow(z, -(n + 1.0)));
                      },
                      "sin"});
    const std::vector<double> abscissae =
        opt.quick ? std::vector<double>{1.3, 2.6} : std::vector<double>{0.8, 1.3, 2.6, 4.1, 5.9};
    for (const auto& pr : probes) {
      for (double s : abscissae) {
        const std::vector<double> from_deriv = image_from_laplace(pr.deriv, s, n_max);
        const ImageSeq quad = forward_transform(pr.row.source(), s, n_max, 1e-12);
        for (int n = 0; n <= n_max; ++n)
          worst.offer(mixed_gap(from_deriv[static_cast<std::size_t>(n)], quad[n]),
                      fmt("derivative rule, %s, s=%.3g, n=%d", pr.label, s, n));
      }
    }
  }

  // Integration rule: image of the running integral against quadrature of it.
  {
    struct Probe {
      ClosedImage row;
      SourceFunction integral;
      const char* label;
    };
    std::vector<Probe> probes;
    probes.push_back({ClosedImage::constant(), ClosedImage::power(1).source(), "1 -> t"});
    probes.push_back({ClosedImage::exponential(-1.0),
                      SourceFunction::from_plain([](double t) { return -std::expm1(-t); }, 0.0,
                                                 0.0, 1.0, 1.0, "1-exp(-t)"),
                      "exp(-t) -> 1-exp(-t)"});
    probes.push_back({ClosedImage::cosine(1.0), ClosedImage::sine(1.0).source(), "cos -> sin"});
    const std::vector<double> abscissae =
        opt.quick ? std::vector<double>{1.15} : std::vector<double>{1.15, 2.45};
    for (const auto& pr : probes) {
      for (double s : abscissae) {
        ImageSeq phi;
        phi.s = s;
        phi.values = pr.row.eval_range(n_max, s);
        phi.errors.assign(phi.values.size(), 0.0);
        const ImageSeq lhs = integrate_image(phi);
        const ImageSeq rhs = forward_transform(pr.integral, s, n_max, 1e-12);
        for (int n = 0; n <= n_max; ++n)
          worst.offer(mixed_gap(lhs[n], rhs[n]),
                      fmt("integration rule, %s, s=%.3g, n=%d", pr.label, s, n));
      }
    }
  }

  // Convolution rule: products of images against quadrature of the
  // analytically convolved pair.
  {
    const ClosedImage one = ClosedImage::constant();
    const ClosedImage ramp = ClosedImage::power(1);
    const ClosedImage decay = ClosedImage::exponential(-1.0);
    const SourceFunction half_sq = SourceFunction::from_plain(
        [](double t) { return 0.5 * t * t; }, 0.0, 2.0, 0.5, 2.0, "t^2/2");
    const SourceFunction sixth_cube = SourceFunction::from_plain(
        [](double t) { return t * t * t / 6.0; }, 0.0, 3.0, 1.0 / 6.0, 3.0, "t^3/6");
    const SourceFunction one_minus_decay = SourceFunction::from_plain(
        [](double t) { return -std::expm1(-t); }, 0.0, 0.0, 1.0, 1.0, "1-exp(-t)");
    // t - 1 + e^{-t} cancels catastrophically near zero; switch to the series.
    const SourceFunction ramp_decay = SourceFunction::from_plain(
        [](double t) {
          if (t < 1e-4) return t * t * (0.5 - t / 6.0 + t * t / 24.0);
          return t - 1.0 + std::exp(-t);
        },
        0.0, 1.0, 1.0, 2.0, "t-1+exp(-t)");
    struct Pair {
      const ClosedImage *f, *g;
      const SourceFunction* conv;
      const char* label;
    };
    const SourceFunction te = ClosedImage::power_exp(1.0, 1.0).source();
    const std::vector<Pair> pairs = {
        {&one, &one, nullptr, "1 * 1"},        {&one, &ramp, &half_sq, "1 * t"},
        {&one, &decay, &one_minus_decay, "1 * exp(-t)"},
        {&ramp, &ramp, &sixth_cube, "t * t"},  {&ramp, &decay, &ramp_decay, "t * exp(-t)"},
        {&decay, &decay, &te, "exp(-t) * exp(-t)"},
    };
    const SourceFunction ramp_src = ClosedImage::power(1).source();
    const std::vector<double> abscissae =
        opt.quick ? std::vector<double>{1.15} : std::vector<double>{1.15, 2.45};
    for (const auto& pr : pairs) {
      for (double s : abscissae) {
        ImageSeq phi, psi;
        phi.s = psi.s = s;
        phi.values = pr.f->eval_range(n_max, s);
        psi.values = pr.g->eval_range(n_max, s);
        phi.errors.assign(phi.values.size(), 0.0);
        psi.errors.assign(psi.values.size(), 0.0);
        const ImageSeq lhs = convolve_images(phi, psi);
        const ImageSeq rhs =
            forward_transform(pr.conv != nullptr ? *pr.conv : ramp_src, s, n_max, 1e-12);
        for (int n = 0; n <= n_max; ++n)
          worst.offer(mixed_gap(lhs[n], rhs[n]),
                      fmt("convolution rule, %s, s=%.3g, n=%d", pr.label, s, n));
      }
    }
  }

  c.passed = worst.value <= tol;
  c.detail = fmt("worst gap %.2e (%s)", worst.value, worst.where.c_str());
  return c;
}

// ---------------------------------------------------------------- check 3

SuiteCheck check_laguerre_roundtrip(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "laguerre-roundtrip";
  std::string parts;
  bool ok = true;

  // Exact involution of the coefficient bridge on random rational data.
  {
    const int n_top = opt.quick ? 6 : 12;
    std::mt19937 rng(20240817);
    const std::vector<Rational> s_values = {Rational(1), Rational(2), Rational(1, 3)};
    bool exact_ok = true;
    for (int rep = 0; rep < (opt.quick ? 4 : 16) && exact_ok; ++rep) {
      std::vector<Rational> phi;
      for (int n = 0; n <= n_top; ++n)
        phi.emplace_back(static_cast<int>(rng() % 19) - 9,
                         static_cast<int>(rng() % 4) + 1);
      for (const Rational& s : s_values) {
        if (bridge_backward_exact(bridge_forward_exact(phi, s), s) != phi) exact_ok = false;
        if (bridge_forward_exact(bridge_backward_exact(phi, s), s) != phi) exact_ok = false;
      }
    }
    ok = ok && exact_ok;
    parts += exact_ok ? "bridge exact" : "bridge NOT exact";
  }

  // Orthonormality of the scaled family under its own weight.
  {
    const int k_top = opt.quick ? 4 : 8;
    Worst worst;
    for (double s : {1.0, 2.0}) {
      for (int j = 0; j <= k_top; ++j) {
        for (int k = j; k <= k_top; ++k) {
          SourceFunction prod;
          prod.damped = [j, k, s](double t, double sig) {
            return laguerre_star_eval(j, t, s) * laguerre_star_eval(k, t, s) *
                   std::exp(-sig * t);
          };
          prod.poly_degree = j + k;
          prod.bound = s * std::pow(2.0 * s, j + k);
          const double want = j == k ? 1.0 : 0.0;
          const double got = laplace_weighted_integral(prod, s, 0.0, 1e-11).value;
          worst.offer(std::abs(got - want), fmt("gram j=%d k=%d s=%g", j, k, s));
        }
      }
    }
    ok = ok && worst.value <= 1e-8;
    parts += fmt(", gram dev %.2e", worst.value);
  }

  // Reconstruction error of exp(-x) at s = 1: nonincreasing in the truncation
  // order up to quadrature floor, small at the top order.
  {
    const int top = opt.quick ? 10 : 24;
    std::vector<double> phi(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) phi[static_cast<std::size_t>(n)] = std::pow(0.5, n + 1);
    const std::vector<double> a = coefficients_from_image(phi, 1.0);
    const SourceFunction f = ClosedImage::exponential(-1.0).source();
    std::vector<double> err(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n)
      err[static_cast<std::size_t>(n)] = weighted_l2_error(f, a, 1.0, n, 1e-10);
    bool monotone = true;
    // Past the quadrature floor the sequence may wiggle at the last digit;
    // only genuine growth above the floor counts as a violation.
    for (int n = 0; n < top; ++n)
      if (err[static_cast<std::size_t>(n) + 1] >
          std::max(err[static_cast<std::size_t>(n)], 2e-6))
        monotone = false;
    const double last = err.back();
    ok = ok && monotone && last <= 1e-3;
    parts += fmt(", recon e_%d=%.2e %s", top, last, monotone ? "monotone" : "NOT monotone");
  }

  c.passed = ok;
  c.detail = parts;
  return c;
}

// ---------------------------------------------------------------- check 4

SuiteCheck check_residue_inverse(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "residue-inverse";
  bool ok = true;
  std::string parts;

  // Geometric images recover the plain exponential, identically across probes.
  {
    const std::vector<int> probes = opt.quick ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2, 3};
    double worst_gap = 0.0;
    bool shape_ok = true;
    for (int a : {-1, 0, 2}) {
      const auto rule = [a](int n) {
        return RationalFn::simple_pole(Rational(1), Rational(a), n + 1);
      };
      const ResidueProbeReport rep = residue_probe(rule, probes);
      worst_gap = std::max(worst_gap, rep.max_term_gap);
      if (!rep.consistent || rep.result.terms.size() != 1) shape_ok = false;
      else {
        const ExpTerm& t = rep.result.terms.front();
        if (!t.exact || t.m != 1 || t.c_exact != QuadExt(Rational(1)) ||
            t.p_exact != QuadExt(Rational(a)))
          shape_ok = false;
      }
    }
    ok = ok && shape_ok;
    parts += fmt("exp probes %s, gap %.1e", shape_ok ? "exact" : "WRONG", worst_gap);
  }

  // Random rational-pole functions survive transform + inversion unchanged.
  {
    const int trials = opt.quick ? 20 : 200;
    std::mt19937 rng(911);
    const std::vector<Rational> pole_pool = {
        Rational(-3), Rational(-5, 2), Rational(-2), Rational(-3, 2), Rational(-1),
        Rational(-1, 2), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
        Rational(5, 2)};
    using Key = std::tuple<Rational, int, Rational>;
    int failed_trial = -1;
    for (int trial = 0; trial < trials && failed_trial < 0; ++trial) {
      std::vector<std::size_t> picks;
      const std::size_t n_poles = 1 + rng() % 4;
      while (picks.size() < n_poles) {
        const std::size_t cand = rng() % pole_pool.size();
        if (std::find(picks.begin(), picks.end(), cand) == picks.end()) picks.push_back(cand);
      }
      ExpPolyFunction f;
      std::vector<Key> want;
      for (std::size_t pi : picks) {
        const int mult = 1 + static_cast<int>(rng() % 3);
        for (int m = 1; m <= mult; ++m) {
          const int num = static_cast<int>(rng() % 13) - 6;
          if (num == 0) continue;
          const Rational coef(num, static_cast<int>(rng() % 3) + 1);
          ExpTerm t;
          t.m = m;
          t.exact = true;
          t.c_exact = QuadExt(coef);
          t.p_exact = QuadExt(pole_pool[pi]);
          t.c = t.c_exact.to_complex();
          t.p = t.p_exact.to_complex();
          f.terms.push_back(std::move(t));
          want.emplace_back(pole_pool[pi], m, coef);
        }
      }
      if (f.terms.empty()) continue;
      const ExpPolyFunction back = inverse_laplace_rational(laplace_of(f));
      std::vector<Key> got;
      bool all_exact = true;
      for (const ExpTerm& t : back.terms) {
        if (!t.exact || !t.c_exact.is_rational() || !t.p_exact.is_rational()) {
          all_exact = false;
          break;
        }
        got.emplace_back(t.p_exact.x, t.m, t.c_exact.x);
      }
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (!all_exact || got != want) failed_trial = trial;
    }
    ok = ok && failed_trial < 0;
    if (failed_trial < 0)
      parts += fmt(", %d round trips exact", trials);
    else
      parts += fmt(", round trip BROKE at trial %d", failed_trial);
  }

  c.passed = ok;
  c.detail = parts;
  return c;
}

// ---------------------------------------------------------------- check 5

SuiteCheck check_backdiff_calculus(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "backdiff-calculus";
  bool ok = true;
  std::string parts;

  // Binomial expansion of the operator power against literal iteration, and
  // the unshift identity, both in exact arithmetic.
  {
    const int n_top = opt.quick ? 6 : 10;
    std::mt19937 rng(4242);
    bool exact_ok = true;
    for (int rep = 0; rep < (opt.quick ? 6 : 24) && exact_ok; ++rep) {
      std::vector<Rational> seq;
      for (int n = 0; n <= n_top; ++n)
        seq.emplace_back(static_cast<int>(rng() % 21) - 10,
                         static_cast<int>(rng() % 3) + 1);
      const Rational s(static_cast<int>(rng() % 5) + 1, static_cast<int>(rng() % 2) + 1);
      const auto phi = [&seq](int n) { return seq[static_cast<std::size_t>(n)]; };
      for (int n = 0; n <= n_top && exact_ok; ++n) {
        for (int p = 0; p <= n; ++p) {
          if (backdiff_power(phi, p, s, n) != backdiff_iterated(phi, p, s, n)) exact_ok = false;
          if (backdiff_unshift(phi, p, s, n) != seq[static_cast<std::size_t>(n - p)])
            exact_ok = false;
        }
      }
    }
    ok = ok && exact_ok;
    parts += exact_ok ? "operator algebra exact" : "operator algebra BROKEN";
  }

  // Derivative images against quadrature of the literal derivative.
  {
    Worst worst;
    const std::vector<double> abscissae =
        opt.quick ? std::vector<double>{1.35} : std::vector<double>{1.35, 2.8};
    const int n_top = opt.quick ? 4 : 8;
    struct Probe {
      std::function<double(int, double)> phi;   // image of f
      SourceFunction dsrc;                      // source to transform for f^(p)
      double scale;                             // transform of f^(p) = scale * G{dsrc}
      std::vector<double> init;                 // f(0), f'(0)
      int p;
      const char* label;
    };
    std::vector<Probe> probes;
    const ClosedImage e06 = ClosedImage::exponential(0.6);
    probes.push_back({[e06](int n, double s) { return e06.eval(n, s); },
                      e06.source(), 0.6, {1.0, 0.6}, 1, "exp(0.6t), p=1"});
    probes.push_back({[e06](int n, double s) { return e06.eval(n, s); },
                      e06.source(), 0.36, {1.0, 0.6}, 2, "exp(0.6t), p=2"});
    const ClosedImage sn = ClosedImage::sine(1.0);
    probes.push_back({[sn](int n, double s) { return sn.eval(n, s); },
                      ClosedImage::cosine(1.0).source(), 1.0, {0.0, 1.0}, 1, "sin t, p=1"});
    probes.push_back({[sn](int n, double s) { return sn.eval(n, s); },
                      sn.source(), -1.0, {0.0, 1.0}, 2, "sin t, p=2"});
    const ClosedImage cube = ClosedImage::power(3);
    probes.push_back({[cube](int n, double s) { return cube.eval(n, s); },
                      ClosedImage::power(2).source(), 3.0, {0.0, 0.0}, 1, "t^3, p=1"});
    probes.push_back({[cube](int n, double s) { return cube.eval(n, s); },
                      ClosedImage::power(1).source(), 6.0, {0.0, 0.0}, 2, "t^3, p=2"});
    for (const auto& pr : probes) {
      for (double s : abscissae) {
        const ImageSeq quad = forward_transform(pr.dsrc, s, n_top, 1e-12);
        for (int n = 0; n <= n_top; ++n) {
          const auto phi = [&pr, s](int k) { return pr.phi(k, s); };
          const double got = derivative_image(phi, pr.p, s, n, pr.init);
          worst.offer(mixed_gap(got, pr.scale * quad[n]),
                      fmt("%s, s=%.3g, n=%d", pr.label, s, n));
        }
      }
    }
    ok = ok && worst.value <= 1e-6;
    parts += fmt(", derivative images %.2e (%s)", worst.value, worst.where.c_str());
  }

  c.passed = ok;
  c.detail = parts;
  return c;
}

// ---------------------------------------------------------------- check 6

SuiteCheck check_fractional(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "fractional-image";
  const int n_top = opt.quick ? 4 : 6;
  const std::vector<double> alphas = opt.quick ? std::vector<double>{0.5}
                                               : std::vector<double>{0.25, 0.5, 0.75};
  Worst worst;
  for (double alpha : alphas) {
    for (double beta : {1.0, 2.0}) {
      for (double s : {1.0, 2.0}) {
        const ClosedImage row = ClosedImage::power(beta);
        const auto phi = [&row, s](int k) { return row.eval(k, s); };
        // Power-rule oracle: the fractional derivative of t^beta is
        // Gamma(beta+1)/Gamma(beta-alpha+1) t^{beta-alpha}.
        const double scale = gamma_fn(beta + 1.0) / gamma_fn(beta - alpha + 1.0);
        const ClosedImage target = ClosedImage::power(beta - alpha);
        for (int n = 0; n <= n_top; ++n) {
          const double got = fractional_derivative_image(phi, alpha, s, n);
          const double want = scale * target.eval(n, s);
          worst.offer(mixed_gap(got, want),
                      fmt("alpha=%.2f, t^%g, s=%g, n=%d", alpha, beta, s, n));
        }
      }
    }
  }
  c.passed = worst.value <= 1e-6;
  c.detail = fmt("worst gap %.2e (%s)", worst.value, worst.where.c_str());
  return c;
}

// ---------------------------------------------------------------- check 7

SuiteCheck check_fibonacci(const SuiteOptions&) {
  SuiteCheck c;
  c.name = "fibonacci-closed-form";
  DifferenceEquation eq;
  eq.a = {Rational(1), Rational(-1), Rational(-1)};
  eq.init = {Rational(0), Rational(1)};
  const ClosedFormSolution sol = solve(eq, 50);

  // Solver terms evaluated through their exact mirrors; the radical parts
  // must cancel to plain integers.
  const int n_top = 30;
  std::vector<Rational> f;
  bool exact_ok = sol.exact;
  for (int n = 0; n <= n_top; ++n) {
    QuadExt total(Rational(0));
    for (const SolutionTerm& t : sol.terms) {
      QuadExt pv(Rational(0));
      QuadExt npow{Rational(1)};
      for (const QuadExt& coef : t.poly_exact) {
        pv += coef * npow;
        npow *= QuadExt(Rational(n));
      }
      total += pv * qx_pow(t.base_exact, n);
    }
    if (!total.is_rational()) exact_ok = false;
    f.push_back(total.x);
  }
  Rational worst_res(0);
  for (int n = 2; n <= n_top; ++n) {
    Rational r = f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(n - 1)] -
                 f[static_cast<std::size_t>(n - 2)];
    if (r < 0) r = -r;
    worst_res = std::max(worst_res, r, [](const Rational& a, const Rational& b) { return a < b; });
  }

  // Independent closed form in extended precision.
  const long double root5 = std::sqrt(5.0L);
  const long double gold = (1.0L + root5) / 2.0L;
  const long double conj = (1.0L - root5) / 2.0L;
  double worst_term = 0.0;
  long double gp = 1.0L, cp = 1.0L;
  for (int n = 0; n <= n_top; ++n) {
    const long double want = (gp - cp) / root5;
    worst_term = std::max(
        worst_term, static_cast<double>(std::fabs(static_cast<long double>(
                                            to_double(f[static_cast<std::size_t>(n)])) -
                                        want)));
    gp *= gold;
    cp *= conj;
  }

  // Basis roots out of the image pipeline against the directly factored
  // characteristic polynomial.
  const Poly<Rational> direct({Rational(-1), Rational(-1), Rational(1)});
  const PolyRoots roots = find_roots(direct);
  std::vector<std::complex<double>> want_roots;
  for (const auto& [q, mult] : roots.quadratic) {
    want_roots.push_back(q.to_complex());
    want_roots.push_back(q.conj().to_complex());
  }
  for (const auto& [q, mult] : roots.rational) want_roots.emplace_back(to_double(q), 0.0);
  double root_gap = want_roots.size() == sol.terms.size() ? 0.0 : 1.0;
  for (const auto& w : want_roots) {
    double best = 1e300;
    for (const SolutionTerm& t : sol.terms) best = std::min(best, std::abs(t.base - w));
    root_gap = std::max(root_gap, best);
  }

  const bool res_ok = worst_res == 0;
  c.passed = exact_ok && res_ok && worst_term <= 1e-10 && root_gap <= 1e-10 &&
             sol.residual <= 1e-10;
  c.detail = fmt("residual %s, closed form gap %.2e, root gap %.2e",
                 res_ok ? "exact 0" : "NONZERO", worst_term, root_gap);
  return c;
}

// ---------------------------------------------------------------- check 8

SuiteCheck check_recurrence_rewrite(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "recurrence-rewrite";
  const int trials = opt.quick ? 100 : 1000;
  std::mt19937 rng(77);
  int failed_trial = -1;
  for (int trial = 0; trial < trials && failed_trial < 0; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 4);
    std::vector<Rational> a;
    for (int k = 0; k <= p; ++k)
      a.emplace_back(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 3) + 1);
    if (a.back() == 0) a.back() = Rational(1);
    DifferenceEquation eq;
    eq.a = a;
    const OdeSpec spec = ode_coefficients(build_Q(eq));
    std::vector<Rational> seq;
    for (int n = 0; n <= p + 2; ++n)
      seq.emplace_back(static_cast<int>(rng() % 15) - 7, static_cast<int>(rng() % 3) + 1);
    const auto f = [&seq](int n) { return seq[static_cast<std::size_t>(n)]; };
    const Rational s_one(1);
    for (int n = p; n <= p + 2; ++n) {
      Rational direct(0);
      for (int k = 0; k <= p; ++k)
        direct += a[static_cast<std::size_t>(k)] * seq[static_cast<std::size_t>(n - k)];
      Rational rewritten(0);
      for (std::size_t k = 0; k < spec.b.size(); ++k)
        rewritten += spec.b[k] * backdiff_power(f, static_cast<int>(k), s_one, n);
      if (direct != rewritten) failed_trial = trial;
    }
  }
  c.passed = failed_trial < 0;
  c.detail = failed_trial < 0 ? fmt("%d random instances exact", trials)
                              : fmt("BROKE at trial %d", failed_trial);
  return c;
}

// ---------------------------------------------------------------- check 9

SuiteCheck check_mapped_equations(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "mapped-equations";
  const std::vector<int> cases = opt.quick ? std::vector<int>{5} : std::vector<int>{4, 5, 6};
  bool ok = true;
  std::string parts;
  for (int id : cases) {
    const Json rep = verify_mapped_equation(id);
    const Json* flag = rep.find("all_within_tolerance");
    const bool good = flag != nullptr && flag->is_true();
    ok = ok && good;
    if (!parts.empty()) parts += ", ";
    parts += fmt("case %d %s", id, good ? "ok" : "OUT OF TOLERANCE");
  }
  c.passed = ok;
  c.detail = parts;
  return c;
}

// ---------------------------------------------------------------- check 10

SuiteCheck check_hurwitz(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "hurwitz-zeta";
  bool ok = true;
  std::string parts;

  {
    const std::vector<double> ss = opt.quick ? std::vector<double>{2.0, 3.0}
                                             : std::vector<double>{1.5, 2.0, 3.0, 5.0};
    const std::vector<double> as = opt.quick ? std::vector<double>{0.5, 1.0}
                                             : std::vector<double>{0.25, 0.5, 1.0};
    Worst worst;
    for (double s : ss) {
      for (double a : as) {
        const double ref = hurwitz_em(s, a).value;
        worst.offer(std::abs(hurwitz_integral(s, a).value - ref), fmt("s=%g a=%g", s, a));
        const double ref_up = hurwitz_em(s, a + 1.0).value;
        worst.offer(std::abs(hurwitz_integral_shifted(s, a).value - ref_up),
                    fmt("shifted s=%g a=%g", s, a));
      }
    }
    ok = ok && worst.value <= 1e-8;
    parts += fmt("integral vs stepped sum %.2e", worst.value);
  }

  {
    const double want = 1.6449340668482264;  // pi^2/6
    const double gap = std::max(std::abs(hurwitz_integral(2.0, 1.0).value - want),
                                std::abs(hurwitz_em(2.0, 1.0).value - want));
    ok = ok && gap <= 1e-10;
    parts += fmt(", basel gap %.1e", gap);
  }

  {
    Worst worst;
    const int k_top = opt.quick ? 4 : 8;
    for (int k = 1; k <= k_top; ++k) {
      for (const Rational& a : {Rational(1, 2), Rational(1)}) {
        const double want = to_double(zeta_negative_integer(k, a));
        const double got = hurwitz_em(1.0 - k, to_double(a)).value;
        worst.offer(std::abs(got - want), fmt("k=%d a=%s", k, a.str().c_str()));
      }
    }
    ok = ok && worst.value <= 1e-9;
    parts += fmt(", negative integers %.2e", worst.value);
  }

  {
    const ZetaResult rep = hurwitz_bernoulli_representation(2.0, 1.0, opt.quick ? 8 : 12);
    bool finite = !rep.partial_sums.empty();
    for (double v : rep.partial_sums)
      if (!std::isfinite(v)) finite = false;
    ok = ok && finite;
    parts += fmt(", partial-sum report (%zu terms, last %.6f)", rep.partial_sums.size(),
                 rep.partial_sums.empty() ? 0.0 : rep.partial_sums.back());
  }

  c.passed = ok;
  c.detail = parts;
  return c;
}

// ---------------------------------------------------------------- check 11

SuiteCheck check_identities(const SuiteOptions& opt) {
  SuiteCheck c;
  c.name = "identity-sweeps";
  const IdentityReport one = verify_identity_one(opt.quick ? 40 : 200);
  const IdentityReport two = verify_identity_two(opt.quick ? 20 : 80);
  const IdentityReport three = verify_identity_three(opt.quick ? 16 : 60);
  const IdentityReport lag = verify_laguerre_identity(
      opt.quick ? 12 : 40, opt.quick ? 12 : 40, {Rational(1), Rational(2), Rational(1, 3)});
  const IdentityReport dual = verify_legendre_dual(opt.quick ? 16 : 40);
  std::string parts;
  bool ok = true;
  for (const IdentityReport* rep : {&one, &two, &three, &lag, &dual}) {
    ok = ok && rep->all_passed;
    if (!parts.empty()) parts += ", ";
    parts += fmt("%s %s", rep->identity.c_str(), rep->all_passed ? "exact" : "FAILED");
    if (!rep->all_passed && !rep->counterexamples.empty())
      parts += fmt(" at %s", rep->counterexamples.front().c_str());
  }
  c.passed = ok;
  c.detail = parts;
  return c;
}

using CheckFn = SuiteCheck (*)(const SuiteOptions&);

constexpr CheckFn kChecks[] = {
    check_image_table,   check_transform_rules, check_laguerre_roundtrip,
    check_residue_inverse, check_backdiff_calculus, check_fractional,
    check_fibonacci,     check_recurrence_rewrite, check_mapped_equations,
    check_hurwitz,       check_identities,
};

SuiteCheck run_one(CheckFn fn, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SuiteCheck c;
  try {
    c = fn(opt);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = fmt("threw: %s", e.what());
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace

bool SuiteResult::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Json SuiteResult::to_json(const std::string& profile) const {
  Json j = Json::object();
  j.set("schema", 1);
  j.set("kind", "suite");
  j.set("profile", profile);
  j.set("all_passed", all_passed());
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e = Json::object();
    e.set("name", c.name);
    e.set("passed", c.passed);
    e.set("detail", c.detail);
    arr.push(std::move(e));
  }
  j.set("checks", std::move(arr));
  return j;
}

std::string SuiteResult::to_table(bool color) const {
  const char* green = color ? "\x1b[32m" : "";
  const char* red = color ? "\x1b[31m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  std::string out;
  int n_pass = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const SuiteCheck& c = checks[i];
    if (c.passed) ++n_pass;
    std::string name = c.name;
    name.resize(26, '.');
    out += fmt("%2zu/%zu  %s %s%s%s  %7.2fs  %s\n", i + 1, checks.size(), name.c_str(),
               c.passed ? green : red, c.passed ? "pass" : "FAIL", reset, c.seconds,
               c.detail.c_str());
  }
  out += fmt("%d/%zu checks passed\n", n_pass, checks.size());
  return out;
}

SuiteResult run_suite(const SuiteOptions& opt) {
  const std::size_t n = sizeof kChecks / sizeof kChecks[0];
  SuiteResult result;
  result.checks.resize(n);
  const int jobs = std::max(1, std::min(opt.jobs, 8));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) result.checks[i] = run_one(kChecks[i], opt);
    return result;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        result.checks[i] = run_one(kChecks[i], opt);
      }
    });
  }
  for (auto& t : workers) t.join();
  return result;
}

}  // namespace ltt
