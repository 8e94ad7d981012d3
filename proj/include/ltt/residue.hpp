#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ltt/algnum.hpp"
#include "ltt/exact.hpp"
#include "ltt/jsonio.hpp"
#include "ltt/polynomial.hpp"

namespace ltt {

// Rational function num/den over the rationals.  Normalized: den monic,
// gcd(num, den) = 1, zero is 0/1.
struct RationalFn {
  Poly<Rational> num;
  Poly<Rational> den = Poly<Rational>::constant(Rational(1));

  static RationalFn make(Poly<Rational> n, Poly<Rational> d);
  // c / (s - p)^m
  static RationalFn simple_pole(const Rational& c, const Rational& p, int m);

  bool is_zero() const { return num.is_zero(); }
  bool proper() const { return num.degree() < den.degree(); }
  Rational eval_exact(const Rational& s) const;
  double eval(double s) const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const Rational& c);
  friend bool operator==(const RationalFn& a, const RationalFn& b);
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }
};

// One pole term.  As a fraction of s it reads c / (s - p)^m; as a function
// of t it reads c t^{m-1} e^{pt} / (m-1)!.  When `exact` is set, c and p
// live in a quadratic extension and the complex fields hold rounded values.
struct ExpTerm {
  std::complex<double> c;
  std::complex<double> p;
  int m = 1;
  bool exact = false;
  QuadExt c_exact;
  QuadExt p_exact;
};

struct ExpPolyFunction {
  std::vector<ExpTerm> terms;

  bool all_exact() const;
  double eval(double t) const;  // imaginary parts cancel for conjugate-closed terms
  Json to_json() const;
};

// Roots of a rational-coefficient polynomial with multiplicities.
// Quadratic entries carry one representative per conjugate pair (d > 0 means
// two real roots x +- y sqrt(d), d < 0 a complex pair); numeric entries are
// certified and conjugate-closed.
struct PolyRoots {
  std::vector<std::pair<Rational, int>> rational;
  std::vector<std::pair<QuadExt, int>> quadratic;
  std::vector<std::pair<std::complex<double>, int>> numeric;
};
PolyRoots find_roots(const Poly<Rational>& p);

// Expansion of a strictly proper rational function into pole terms.  Exact
// for poles living in Q or a quadratic extension; certified high-precision
// numeric for the rest.
std::vector<ExpTerm> partial_fractions(const RationalFn& R);

ExpPolyFunction inverse_laplace_rational(const RationalFn& R);

// Classic Laplace transform of an exp-poly function; requires exact terms.
RationalFn laplace_of(const ExpPolyFunction& f);

// Image of an exp-poly function at index n as an exact rational function
// of the abscissa.
RationalFn transform_of(const ExpPolyFunction& f, int n);

// Residue form of the inverse: scale the image rule at index n by n!,
// expand into pole terms, and pull t^n out of every term.  Throws
// NonCancellingPower if some term's t-power falls below n.
ExpPolyFunction residue_inverse(const std::function<RationalFn(int)>& rule, int n);

struct ResidueProbeReport {
  bool consistent = true;
  std::vector<int> probes;
  double max_term_gap = 0.0;
  ExpPolyFunction result;  // from the first probe
};

// Runs residue_inverse at each probe index and checks the outputs coincide
// term by term, as they must when `rule` is a genuine image sequence.
ResidueProbeReport residue_probe(const std::function<RationalFn(int)>& rule,
                                 const std::vector<int>& probes);

bool same_terms(const ExpPolyFunction& a, const ExpPolyFunction& b, double tol);

}  // namespace ltt
