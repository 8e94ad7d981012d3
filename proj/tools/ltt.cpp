// Command-line front end.  One subcommand per library operation, JSON on
// standard output, diagnostics on standard error.
//
// Exit codes: 0 success, 1 computation error, 2 usage error, 3 verification
// failure (a requested check came back false).

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ltt/backdiff.hpp"
#include "ltt/diffeq.hpp"
#include "ltt/errors.hpp"
#include "ltt/identities.hpp"
#include "ltt/jsonio.hpp"
#include "ltt/laguerre.hpp"
#include "ltt/residue.hpp"
#include "ltt/special.hpp"
#include "ltt/suite.hpp"
#include "ltt/transform.hpp"

namespace {

using namespace ltt;

constexpr int kOk = 0;
constexpr int kComputationError = 1;
constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 3;

// Semantic problems with otherwise well-formed flags (bad rational syntax,
// inconsistent counts).  Mapped to the usage exit code with a one-line hint.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool color_allowed(int fd) {
  return std::getenv("NO_COLOR") == nullptr && isatty(fd) == 1;
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

// Rational literal: integer, p/q, or a plain decimal (no exponent).
Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw UsageError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") throw std::runtime_error("empty");
      BigInt num(digits);
      BigInt den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(BigInt(text));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("'" + text + "' is not a rational (use p, p/q, or a plain decimal)");
  }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& parts) {
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

std::string rational_str(const Rational& r) { return r.str(); }

Json rationals_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push(Json::str(rational_str(r)));
  return arr;
}

// ---------------------------------------------------------------------------
// Shared flag bundles

struct RowFlags {
  std::string fn;
  std::string base;     // underlying row when fn = custom-table-row
  double a = 1.0;       // rate / power parameter of the row
  double b = 1.0;       // decay rate in the power-exp row
  double shift = 0.0;   // wrap as e^{shift t} f(t)
  double delay = 0.0;   // wrap as f(t - delay), zero before the delay
};

void add_row_flags(CLI::App* cmd, RowFlags& rf, bool with_kernel) {
  std::vector<std::string> vocab = {"const", "exp",  "power",           "power-exp", "sin",
                                    "cos",   "log",  "custom-table-row"};
  if (with_kernel) vocab.insert(vocab.begin() + 7, "one-over-one-minus-exp-neg");
  cmd->add_option("--fn", rf.fn, "source function")
      ->required()
      ->check(CLI::IsMember(vocab));
  cmd->add_option("--base", rf.base, "underlying row for custom-table-row")
      ->check(CLI::IsMember({"const", "exp", "power", "power-exp", "sin", "cos", "log"}));
  cmd->add_option("--a", rf.a, "row parameter a (rate of exp/sin/cos, power of t)");
  cmd->add_option("--b", rf.b, "decay rate b in the power-exp row t^a e^{-bt}");
  cmd->add_option("--shift", rf.shift, "wrap the row as e^{shift t} f(t)");
  cmd->add_option("--delay", rf.delay, "wrap the row as f(t - delay), delay > 0");
}

// Builds the closed-form row a flag bundle describes; the kernel function is
// handled separately by the one caller that accepts it.
ClosedImage build_row(const RowFlags& rf) {
  std::string kind = rf.fn;
  if (kind == "custom-table-row") {
    if (rf.base.empty())
      throw UsageError("--fn custom-table-row needs --base (one of const/exp/power/power-exp/sin/cos/log)");
    kind = rf.base;
  } else if (!rf.base.empty()) {
    throw UsageError("--base only applies to --fn custom-table-row");
  }

  ClosedImage row = ClosedImage::constant();
  if (kind == "const") row = ClosedImage::constant();
  else if (kind == "exp") row = ClosedImage::exponential(rf.a);
  else if (kind == "power") row = ClosedImage::power(rf.a);
  else if (kind == "power-exp") row = ClosedImage::power_exp(rf.a, rf.b);
  else if (kind == "sin") row = ClosedImage::sine(rf.a);
  else if (kind == "cos") row = ClosedImage::cosine(rf.a);
  else if (kind == "log") row = ClosedImage::logarithm();
  else throw UsageError("unknown row '" + kind + "'");

  if (rf.shift != 0.0) row = row.shifted_by(rf.shift);
  if (rf.delay != 0.0) {
    if (rf.delay < 0.0) throw UsageError("--delay must be positive");
    row = row.delayed_by(rf.delay);
  }
  return row;
}

void require_abscissa(double s, const ClosedImage& row) {
  if (!(s > row.abscissa())) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "abscissa s = %g must exceed %g for %s", s, row.abscissa(),
                  row.label().c_str());
    throw DomainError(buf);
  }
}

// ---------------------------------------------------------------------------
// transform

struct TransformArgs {
  RowFlags row;
  double s = 0.0;
  int n = 10;
  double tol = 1e-10;
  std::string format = "json";
};

int run_transform(const TransformArgs& args) {
  if (args.row.fn == "one-over-one-minus-exp-neg") {
    if (args.row.shift != 0.0 || args.row.delay != 0.0 || !args.row.base.empty())
      throw UsageError("--shift/--delay/--base do not apply to the geometric kernel");
    const SourceFunction kern = geometric_kernel();
    if (!(args.s > 0)) throw DomainError("the geometric kernel needs s > 0");

    ImageSeq seq;
    seq.s = args.s;
    seq.values.assign(static_cast<std::size_t>(args.n) + 1,
                      std::numeric_limits<double>::quiet_NaN());
    seq.errors = seq.values;
    for (int n = 1; n <= args.n; ++n) {
      const auto r = laplace_weighted_integral(kern, args.s, n, args.tol);
      seq.values[static_cast<std::size_t>(n)] = r.value;
      seq.errors[static_cast<std::size_t>(n)] = r.error;
      seq.tolerance = std::max(seq.tolerance, r.error);
    }

    if (args.format == "csv") {
      std::cout << seq.to_csv();
      return kOk;
    }
    Json doc = seq.to_json();
    doc.set("label", kern.label);
    doc.set("note",
            "the n = 0 entry diverges (simple pole of the source at the origin); "
            "for n >= 1 the entry equals zeta(n+1, s)");
    if (args.format == "text") {
      std::printf("%s at s = %.17g (n = 0 diverges)\n", kern.label.c_str(), args.s);
      for (int n = 1; n <= args.n; ++n)
        std::printf("%3d  %24.17g  (err %.2e)\n", n, seq[n], seq.errors[static_cast<std::size_t>(n)]);
      return kOk;
    }
    emit(doc);
    return kOk;
  }

  const ClosedImage row = build_row(args.row);
  require_abscissa(args.s, row);
  const ImageSeq seq = forward_transform(row.source(), args.s, args.n, args.tol);
  const std::vector<double> closed = row.eval_range(args.n, args.s);

  double max_gap = 0.0;
  for (int n = 0; n <= args.n; ++n) {
    const double c = closed[static_cast<std::size_t>(n)];
    const double gap = std::abs(seq[n] - c);
    max_gap = std::max(max_gap, c != 0.0 ? gap / std::abs(c) : gap);
  }

  if (args.format == "csv") {
    std::cout << seq.to_csv();
    return kOk;
  }
  if (args.format == "text") {
    std::printf("%s at s = %.17g\n", row.label().c_str(), args.s);
    std::printf("%3s  %24s  %24s\n", "n", "quadrature", "closed form");
    for (int n = 0; n <= args.n; ++n)
      std::printf("%3d  %24.17g  %24.17g\n", n, seq[n], closed[static_cast<std::size_t>(n)]);
    std::printf("worst relative gap %.3e\n", max_gap);
    return kOk;
  }
  Json doc = seq.to_json();
  doc.set("label", row.label());
  doc.set("closed_form", Json::numbers(closed));
  doc.set("max_rel_gap", max_gap);
  emit(doc);
  return kOk;
}

// ---------------------------------------------------------------------------
// invert-laguerre

struct InvertLaguerreArgs {
  RowFlags row;
  double s = 0.0;
  int n = 16;
  std::vector<double> x = {0.5, 1.0, 2.0};
  double tol = 1e-10;
  std::string format = "json";
};

int run_invert_laguerre(const InvertLaguerreArgs& args) {
  const ClosedImage row = build_row(args.row);
  require_abscissa(args.s, row);

  const std::vector<double> phi = row.eval_range(args.n, args.s);
  const std::vector<double> a = coefficients_from_image(phi, args.s);
  const SourceFunction f = row.source();

  Json samples = Json::array();
  double max_sample_gap = 0.0;
  for (double x : args.x) {
    if (!(x > 0)) throw UsageError("--x entries must be positive");
    const double rec = reconstruct(a, args.s, x);
    const double truth = f(x);
    Json sm = Json::object();
    sm.set("x", x);
    sm.set("reconstructed", rec);
    sm.set("truth", truth);
    sm.set("abs_gap", std::abs(rec - truth));
    samples.push(std::move(sm));
    max_sample_gap = std::max(max_sample_gap, std::abs(rec - truth));
  }

  Json doc = Json::object();
  doc.set("schema", 1);
  doc.set("kind", "laguerre_inversion");
  doc.set("label", row.label());
  doc.set("s", args.s);
  doc.set("n_terms", args.n);
  doc.set("coefficients", Json::numbers(a));
  doc.set("samples", std::move(samples));

  // The energy checks square the source, doubling its exponential order, so
  // they can fall outside the convergent region even when the expansion
  // itself is fine.  They are reported when available and skipped otherwise.
  bool bessel_ok = true;
  try {
    const double l2 = weighted_l2_error(f, a, args.s, args.n, args.tol);
    doc.set("weighted_l2_error", l2);
  } catch (const std::exception& e) {
    doc.set("weighted_l2_error", Json::null());
    std::cerr << "note: weighted L2 error skipped: " << e.what() << "\n";
  }
  try {
    const BesselCheck bc = bessel_check(f, a, args.s, args.tol);
    Json bj = Json::object();
    bj.set("coefficient_energy", bc.coefficient_energy);
    bj.set("function_energy", bc.function_energy);
    doc.set("bessel", std::move(bj));
    bessel_ok = bc.coefficient_energy <= bc.function_energy * (1.0 + 1e-8) + 1e-12;
  } catch (const std::exception& e) {
    doc.set("bessel", Json::null());
    std::cerr << "note: Bessel check skipped: " << e.what() << "\n";
  }

  if (args.format == "text") {
    std::printf("%s at s = %.17g, %d+1 coefficients\n", row.label().c_str(), args.s, args.n);
    for (double x : args.x)
      std::printf("  f(%g) = %.12g, reconstruction %.12g\n", x, f(x), reconstruct(a, args.s, x));
    std::printf("worst sample gap %.3e\n", max_sample_gap);
  } else {
    emit(doc);
  }
  if (!bessel_ok) {
    std::cerr << "verification failure: coefficient energy exceeds function energy\n";
    return kVerificationFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// invert-residue

struct InvertResidueArgs {
  std::vector<std::string> num = {"1"};
  std::vector<std::string> den;
  std::vector<int> probes = {0, 1, 2, 3};
  std::string format = "json";
};

int run_invert_residue(const InvertResidueArgs& args) {
  const RationalFn F = RationalFn::make(Poly<Rational>(parse_rationals(args.num)),
                                        Poly<Rational>(parse_rationals(args.den)));
  if (F.den.is_zero()) throw UsageError("--den must be a nonzero polynomial");
  if (!F.proper())
    throw UsageError("the numerator degree must be below the denominator degree");
  for (int p : args.probes)
    if (p < 0) throw UsageError("--probes entries must be nonnegative");

  const ExpPolyFunction f0 = inverse_laplace_rational(F);
  const auto rule = [&f0](int n) { return transform_of(f0, n); };
  const ResidueProbeReport rep = residue_probe(rule, args.probes);

  Json doc = Json::object();
  doc.set("schema", 1);
  doc.set("kind", "residue_inversion");
  doc.set("num", rationals_json(parse_rationals(args.num)));
  doc.set("den", rationals_json(parse_rationals(args.den)));
  Json probes = Json::array();
  for (int p : rep.probes) probes.push(Json::integer(p));
  doc.set("probes", std::move(probes));
  doc.set("consistent", rep.consistent);
  doc.set("max_term_gap", rep.max_term_gap);
  doc.set("function", rep.result.to_json());

  if (args.format == "text") {
    std::printf("%zu pole terms, probes agree: %s (max term gap %.3e)\n", rep.result.terms.size(),
                rep.consistent ? "yes" : "NO", rep.max_term_gap);
    for (const auto& tm : rep.result.terms)
      std::printf("  t^%d e^{(%.12g%+.12gi) t} coefficient %.12g%+.12gi\n", tm.m - 1,
                  tm.p.real(), tm.p.imag(), tm.c.real(), tm.c.imag());
  } else {
    emit(doc);
  }
  if (!rep.consistent) {
    std::cerr << "verification failure: residue probes disagree across indices\n";
    return kVerificationFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// nabla

struct NablaArgs {
  RowFlags row;
  double s = 0.0;
  int n = 10;
  int p = 1;
  double alpha = -1.0;  // < 0 means not requested
  std::string op = "difference";
  std::vector<double> init;
  std::string format = "json";
};

int run_nabla(const NablaArgs& args) {
  const ClosedImage row = build_row(args.row);
  require_abscissa(args.s, row);
  if (args.p < 0) throw UsageError("--p must be nonnegative");

  const std::vector<double> phi_vals = row.eval_range(args.n, args.s);
  const auto phi = [&phi_vals](int k) { return phi_vals[static_cast<std::size_t>(k)]; };

  Json doc = Json::object();
  doc.set("schema", 1);
  doc.set("kind", "nabla_seq");
  doc.set("label", row.label());
  doc.set("s", args.s);

  int n_start = 0;
  std::vector<double> out;
  if (args.alpha >= 0.0) {
    doc.set("op", "fractional");
    doc.set("alpha", args.alpha);
    for (int n = 0; n <= args.n; ++n)
      out.push_back(fractional_derivative_image(phi, args.alpha, args.s, n));
  } else if (args.op == "difference") {
    doc.set("op", "difference");
    doc.set("p", args.p);
    for (int n = 0; n <= args.n; ++n) out.push_back(backdiff_power(phi, args.p, args.s, n));
  } else if (args.op == "unshift") {
    doc.set("op", "unshift");
    doc.set("p", args.p);
    n_start = args.p;
    double max_gap = 0.0;
    for (int n = n_start; n <= args.n; ++n) {
      const double v = backdiff_unshift(phi, args.p, args.s, n);
      out.push_back(v);
      max_gap = std::max(max_gap, std::abs(v - phi(n - args.p)));
    }
    doc.set("max_reconstruction_gap", max_gap);
  } else {  // derivative
    doc.set("op", "derivative");
    doc.set("p", args.p);
    n_start = args.init.empty() ? args.p : 0;
    if (!args.init.empty() && static_cast<int>(args.init.size()) < args.p)
      throw UsageError("--init needs f(0), f'(0), ..., one value per derivative order");
    for (int n = n_start; n <= args.n; ++n)
      out.push_back(derivative_image(phi, args.p, args.s, n, args.init));
    if (args.init.empty() && args.p > 0)
      std::cerr << "note: entries below n = " << args.p
                << " need --init (initial values of f); starting there\n";
  }
  doc.set("n_start", n_start);
  doc.set("values", Json::numbers(out));

  if (args.format == "text") {
    for (std::size_t i = 0; i < out.size(); ++i)
      std::printf("%3d  %24.17g\n", n_start + static_cast<int>(i), out[i]);
  } else {
    emit(doc);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// solve-diffeq

struct SolveArgs {
  std::vector<std::string> coeffs;
  std::vector<std::string> init;
  std::vector<std::string> rhs;
  std::string rhs_const;
  int check = 50;
  double tol = 1e-10;
  std::string format = "json";
};

int run_solve(const SolveArgs& args) {
  DifferenceEquation eq;
  eq.a = parse_rationals(args.coeffs);
  eq.init = parse_rationals(args.init);
  if (eq.a.size() < 2) throw UsageError("--coeffs needs at least a_0, a_1");
  if (eq.a.back() == Rational(0)) throw UsageError("the trailing coefficient must be nonzero");
  if (static_cast<int>(eq.init.size()) != eq.order())
    throw UsageError("--init must supply exactly " + std::to_string(eq.order()) +
                     " starting values for this order");
  if (!args.rhs.empty()) {
    eq.rhs = DifferenceEquation::Rhs::Array;
    eq.rhs_values = parse_rationals(args.rhs);
  } else if (!args.rhs_const.empty()) {
    eq.rhs = DifferenceEquation::Rhs::Constant;
    eq.rhs_constant = parse_rational(args.rhs_const);
  }
  eq.validate();

  const ClosedFormSolution sol = solve(eq, args.check);

  Json doc = sol.to_json();
  doc.set("coeffs", rationals_json(eq.a));
  doc.set("init", rationals_json(eq.init));
  doc.set("check_n", args.check);

  if (args.format == "text") {
    std::printf("%zu closed-form terms (%s), residual %.3e over n <= %d\n", sol.terms.size(),
                sol.exact ? "exact" : "numeric", sol.residual, args.check);
    for (int n = 0; n <= std::min(args.check, 10); ++n)
      std::printf("  f_%d = %.12g\n", n, sol.eval(n));
  } else {
    emit(doc);
  }
  if (!(sol.residual <= args.tol)) {
    std::cerr << "verification failure: residual " << sol.residual << " exceeds " << args.tol
              << "\n";
    return kVerificationFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// zeta

struct ZetaArgs {
  double s = 0.0;
  double a = 1.0;
  std::string method = "integral";
  int terms = 10;
  double tol = 1e-10;
};

int run_zeta(const ZetaArgs& args) {
  ZetaResult zr;
  if (args.method == "integral") zr = hurwitz_integral(args.s, args.a, args.tol);
  else if (args.method == "integral-shifted") zr = hurwitz_integral_shifted(args.s, args.a, args.tol);
  else if (args.method == "em") zr = hurwitz_em(args.s, args.a);
  else if (args.method == "series") zr = hurwitz_series(args.s, args.a, args.tol);
  else zr = hurwitz_bernoulli_representation(args.s, args.a, args.terms);

  Json doc = zr.to_json();
  doc.set("s", args.s);
  doc.set("a", args.a);
  if (args.method == "integral-shifted")
    doc.set("note", "this route evaluates zeta(s, a + 1)");
  emit(doc);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify-identities

struct IdentityArgs {
  std::string which;
  int max_m = -1;
  int max_n = -1;
  std::vector<std::string> s = {"1", "2", "1/3"};
};

int run_identities(const IdentityArgs& args) {
  const auto pick = [](int flag, int dflt) { return flag > 0 ? flag : dflt; };
  IdentityReport rep;
  if (args.which == "1") rep = verify_identity_one(pick(args.max_m, 200));
  else if (args.which == "2") rep = verify_identity_two(pick(args.max_m, 80));
  else if (args.which == "3") rep = verify_identity_three(pick(args.max_m, 60));
  else if (args.which == "bonnet") rep = verify_bonnet_mapped(pick(args.max_m, 40));
  else if (args.which == "dual") rep = verify_legendre_dual(pick(args.max_n, pick(args.max_m, 40)));
  else
    rep = verify_laguerre_identity(pick(args.max_m, 40), pick(args.max_n, 40),
                                   parse_rationals(args.s));
  emit(rep.to_json());
  if (!rep.all_passed) {
    std::cerr << "verification failure: " << rep.counterexamples.size()
              << " counterexample(s) recorded\n";
    return kVerificationFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify-mapped

int run_verify_mapped(int case_id) {
  const Json rep = verify_mapped_equation(case_id);
  emit(rep);
  const Json* ok = rep.find("all_within_tolerance");
  if (ok == nullptr || !ok->is_true()) {
    std::cerr << "verification failure: case " << case_id << " residuals out of tolerance\n";
    return kVerificationFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  double s = 0.0;  // 0 means: no numeric column
  int n = 10;
  std::string format = "text";
};

int run_table(const TableArgs& args) {
  struct Row {
    const char* name;
    const char* function;
    const char* image;
    const char* valid;
    const char* params;
    bool structural;
  };
  // Sample parameters a = 1 (b = 1) are used for the numeric column.
  const Row rows[] = {
      {"const", "1", "1/s^{n+1}", "s > 0", "", false},
      {"exp", "e^{a t}", "1/(s-a)^{n+1}", "s > a", "a = 1", false},
      {"power", "t^a, a > -1", "Gamma(n+a+1) / (n! s^{n+a+1})", "s > 0", "a = 1/2", false},
      {"power-exp", "t^a e^{-b t}", "Gamma(n+a+1) / (n! (s+b)^{n+a+1})", "s > -b", "a = 1, b = 1",
       false},
      {"sin", "sin(a t)", "Im (s - i a)^{-(n+1)}", "s > 0", "a = 1", false},
      {"cos", "cos(a t)", "Re (s - i a)^{-(n+1)}", "s > 0", "a = 1", false},
      {"log", "ln t", "(H_n - gamma - ln s) / s^{n+1}", "s > 0", "", false},
      {"shift", "e^{a t} f(t)", "phi_n(s - a)", "s - a in f's region", "", true},
      {"delay", "f(t - a), zero before a", "e^{-a s} sum_{k<=n} a^{n-k}/(n-k)! phi_k(s)",
       "same as f", "", true},
  };
  const auto sample = [&](const Row& r) -> ClosedImage {
    if (std::string(r.name) == "exp") return ClosedImage::exponential(1.0);
    if (std::string(r.name) == "power") return ClosedImage::power(0.5);
    if (std::string(r.name) == "power-exp") return ClosedImage::power_exp(1.0, 1.0);
    if (std::string(r.name) == "sin") return ClosedImage::sine(1.0);
    if (std::string(r.name) == "cos") return ClosedImage::cosine(1.0);
    if (std::string(r.name) == "log") return ClosedImage::logarithm();
    return ClosedImage::constant();
  };

  const bool evaluate = args.s > 0.0;
  if (args.format == "json") {
    Json doc = Json::object();
    doc.set("schema", 1);
    doc.set("kind", "rule_table");
    if (evaluate) {
      doc.set("s", args.s);
      doc.set("n", args.n);
    }
    Json list = Json::array();
    for (const auto& r : rows) {
      Json e = Json::object();
      e.set("name", r.name);
      e.set("function", r.function);
      e.set("image", r.image);
      e.set("valid_for", r.valid);
      if (*r.params) e.set("sample_params", r.params);
      if (evaluate && !r.structural) {
        const ClosedImage row = sample(r);
        if (args.s > row.abscissa())
          e.set("value_at_n", row.eval(args.n, args.s));
        else
          e.set("value_at_n", Json::null());
      }
      list.push(std::move(e));
    }
    doc.set("rules", std::move(list));
    emit(doc);
    return kOk;
  }

  std::printf("%-10s  %-26s  %-44s  %s\n", "row", "f(t)", "phi_n(s)", "valid for");
  for (const auto& r : rows) {
    std::printf("%-10s  %-26s  %-44s  %s", r.name, r.function, r.image, r.valid);
    if (*r.params) std::printf("   [%s]", r.params);
    if (evaluate && !r.structural) {
      const ClosedImage row = sample(r);
      if (args.s > row.abscissa())
        std::printf("   phi_%d(%g) = %.17g", args.n, args.s, row.eval(args.n, args.s));
      else
        std::printf("   (diverges at s = %g)", args.s);
    }
    std::printf("\n");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// suite

struct SuiteArgs {
  std::string profile = "full";
  int jobs = 1;
  int inject_fault = 0;
  std::string format = "text";
};

int run_suite_cmd(const SuiteArgs& args) {
  SuiteOptions opt;
  opt.quick = args.profile == "quick";
  opt.jobs = args.jobs;
  opt.inject_fault = args.inject_fault;
  const SuiteResult result = run_suite(opt);

  if (args.format == "json") {
    std::cerr << result.to_table(color_allowed(2));
    emit(result.to_json(args.profile));
  } else {
    std::cout << result.to_table(color_allowed(1));
  }
  return result.all_passed() ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequence-image transform toolkit"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& fmt,
                             const std::vector<std::string>& choices) {
    cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember(choices));
  };

  TransformArgs t;
  auto* ct = app.add_subcommand("transform", "forward transform of a built-in function");
  add_row_flags(ct, t.row, true);
  ct->add_option("--s", t.s, "abscissa")->required();
  ct->add_option("--n", t.n, "highest index")->check(CLI::Range(0, 200));
  ct->add_option("--tol", t.tol, "per-entry absolute tolerance")->check(CLI::PositiveNumber);
  add_format(ct, t.format, {"json", "csv", "text"});

  InvertLaguerreArgs il;
  auto* cl = app.add_subcommand("invert-laguerre", "orthogonal-series reconstruction from an image");
  add_row_flags(cl, il.row, false);
  cl->add_option("--s", il.s, "abscissa")->required();
  cl->add_option("--n", il.n, "highest coefficient index")->check(CLI::Range(0, 200));
  cl->add_option("--x", il.x, "sample points for the reconstruction")->delimiter(',');
  cl->add_option("--tol", il.tol, "quadrature tolerance for the energy checks")
      ->check(CLI::PositiveNumber);
  add_format(cl, il.format, {"json", "text"});

  InvertResidueArgs ir;
  auto* cr = app.add_subcommand("invert-residue", "pole expansion from a rational image");
  cr->add_option("--num", ir.num, "numerator coefficients of phi_0(s), ascending")->delimiter(',');
  cr->add_option("--den", ir.den, "denominator coefficients of phi_0(s), ascending")
      ->required()
      ->delimiter(',');
  cr->add_option("--probes", ir.probes, "indices the expansion is cross-checked at")
      ->delimiter(',');
  add_format(cr, ir.format, {"json", "text"});

  NablaArgs nb;
  auto* cn = app.add_subcommand("nabla", "backward-difference calculus on an image");
  add_row_flags(cn, nb.row, false);
  cn->add_option("--s", nb.s, "abscissa")->required();
  cn->add_option("--n", nb.n, "highest index")->check(CLI::Range(0, 200));
  auto* p_opt = cn->add_option("--p", nb.p, "difference order")->check(CLI::Range(0, 60));
  auto* op_opt = cn->add_option("--op", nb.op, "difference | unshift | derivative")
                     ->check(CLI::IsMember({"difference", "unshift", "derivative"}));
  auto* alpha_opt =
      cn->add_option("--alpha", nb.alpha, "fractional order in [0, 1)")->check(CLI::Range(0.0, 1.0));
  alpha_opt->excludes(p_opt);
  alpha_opt->excludes(op_opt);
  cn->add_option("--init", nb.init, "f(0), f'(0), ... for the derivative op at low indices")
      ->delimiter(',');
  add_format(cn, nb.format, {"json", "text"});

  SolveArgs sv;
  auto* cs = app.add_subcommand("solve-diffeq", "closed form of a constant-coefficient recurrence");
  cs->add_option("--coeffs", sv.coeffs, "a_0, a_1, ..., a_p (rationals)")
      ->required()
      ->delimiter(',');
  cs->add_option("--init", sv.init, "f_0 ... f_{p-1} (rationals)")->required()->delimiter(',');
  auto* rhs_opt = cs->add_option("--rhs", sv.rhs,
                                 "right-hand side values g_0, g_1, ... (must cover --check + order)")
                      ->delimiter(',');
  cs->add_option("--rhs-const", sv.rhs_const, "constant right-hand side")->excludes(rhs_opt);
  cs->add_option("--check", sv.check, "verify the recurrence up to this index")
      ->check(CLI::Range(1, 100000));
  cs->add_option("--tol", sv.tol, "residual gate")->check(CLI::PositiveNumber);
  add_format(cs, sv.format, {"json", "text"});

  int mapped_case = 0;
  auto* cm = app.add_subcommand("verify-mapped", "residual report for a worked image-side problem");
  cm->add_option("--case", mapped_case, "which worked problem")
      ->required()
      ->check(CLI::IsMember({4, 5, 6}));

  ZetaArgs zt;
  auto* cz = app.add_subcommand("zeta", "Hurwitz zeta by several routes");
  cz->add_option("--s", zt.s, "exponent")->required();
  cz->add_option("--a", zt.a, "offset (a > 0)");
  cz->add_option("--method", zt.method, "integral | integral-shifted | em | series | bernoulli")
      ->check(CLI::IsMember({"integral", "integral-shifted", "em", "series", "bernoulli"}));
  cz->add_option("--terms", zt.terms, "partial-sum count for the bernoulli route")
      ->check(CLI::Range(1, 200));
  cz->add_option("--tol", zt.tol, "tolerance for the integral and series routes")
      ->check(CLI::PositiveNumber);

  IdentityArgs id;
  auto* ci = app.add_subcommand("verify-identities", "exact combinatorial identity sweeps");
  ci->add_option("--which", id.which, "1 | 2 | 3 | laguerre | dual | bonnet")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "laguerre", "dual", "bonnet"}));
  ci->add_option("--max-m", id.max_m, "sweep bound (default: the acceptance range)")
      ->check(CLI::Range(0, 100000));
  ci->add_option("--max-n", id.max_n, "second bound for laguerre/dual")->check(CLI::Range(0, 100000));
  ci->add_option("--s", id.s, "abscissae for the laguerre sweep (rationals)")->delimiter(',');

  TableArgs tb;
  auto* cb = app.add_subcommand("table", "the closed-form image rules");
  cb->add_option("--s", tb.s, "evaluate each row at this abscissa")->check(CLI::PositiveNumber);
  cb->add_option("--n", tb.n, "index for the numeric column")->check(CLI::Range(0, 200));
  add_format(cb, tb.format, {"json", "text"});

  SuiteArgs su;
  auto* cu = app.add_subcommand("suite", "self-verification battery");
  cu->add_option("--profile", su.profile, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  cu->add_option("--jobs", su.jobs, "run checks concurrently")->check(CLI::Range(1, 64));
  cu->add_option("--inject-fault", su.inject_fault)->group("");  // test hook, hidden
  add_format(cu, su.format, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "run '" << argv[0] << " --help' for the command list\n";
    return kUsageError;
  }

  try {
    if (app.got_subcommand(ct)) return run_transform(t);
    if (app.got_subcommand(cl)) return run_invert_laguerre(il);
    if (app.got_subcommand(cr)) return run_invert_residue(ir);
    if (app.got_subcommand(cn)) return run_nabla(nb);
    if (app.got_subcommand(cs)) return run_solve(sv);
    if (app.got_subcommand(cm)) return run_verify_mapped(mapped_case);
    if (app.got_subcommand(cz)) return run_zeta(zt);
    if (app.got_subcommand(ci)) return run_identities(id);
    if (app.got_subcommand(cb)) return run_table(tb);
    if (app.got_subcommand(cu)) return run_suite_cmd(su);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  }
  return kUsageError;
}
