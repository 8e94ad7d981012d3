#include "ltt/residue.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ltt/errors.hpp"

namespace ltt {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;
using BigComplex = boost::multiprecision::cpp_complex_50;

BigFloat to_bigfloat(const Rational& v) {
  return BigFloat(boost::multiprecision::numerator(v)) /
         BigFloat(boost::multiprecision::denominator(v));
}

Poly<Rational> linear_factor(const Rational& root) {  // s - root
  return Poly<Rational>({-root, Rational(1)});
}

template <class T>
Poly<T> poly_pow(const Poly<T>& base, int e) {
  Poly<T> acc = Poly<T>::constant(T(1));
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

bool poly_equal(const Poly<Rational>& a, const Poly<Rational>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

// Quotient by (s - root); the remainder is dropped (callers divide by known
// factors of the polynomial).
template <class F>
Poly<F> deflate_once(const Poly<F>& p, const F& root) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<F> b(static_cast<std::size_t>(n));
  b[static_cast<std::size_t>(n - 1)] = p.c[static_cast<std::size_t>(n)];
  for (int i = n - 1; i >= 1; --i)
    b[static_cast<std::size_t>(i - 1)] =
        p.c[static_cast<std::size_t>(i)] + root * b[static_cast<std::size_t>(i)];
  return Poly<F>(std::move(b));
}

// First m coefficients of the power series a(u)/b(u); b(0) must be nonzero.
template <class F>
std::vector<F> series_div(const Poly<F>& a, const Poly<F>& b, int m) {
  std::vector<F> h(static_cast<std::size_t>(m), F(0));
  F inv0 = F(1) / b.coeff(0);
  for (int k = 0; k < m; ++k) {
    F acc = a.coeff(k);
    for (int j = 1; j <= k; ++j) acc = acc - b.coeff(j) * h[static_cast<std::size_t>(k - j)];
    h[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return h;
}

// Coefficients c_1..c_m of the expansion of num/den around a pole p of
// multiplicity m: num/den = sum_j c_j/(s-p)^j + regular part.
template <class F>
std::vector<F> pole_stack(const Poly<F>& num, Poly<F> den, const F& p, int m) {
  for (int i = 0; i < m; ++i) den = deflate_once(den, p);
  const auto h = series_div(num.shifted(p), den.shifted(p), m);
  std::vector<F> c(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) c[static_cast<std::size_t>(j - 1)] = h[static_cast<std::size_t>(m - j)];
  return c;
}

// Divisors of |n| assembled from trial division up to 1e6.  A surviving
// cofactor is kept whole, so the list can be incomplete for numbers with two
// large prime factors; rational-root peeling stays correct either way, the
// affected roots just fall through to the slower paths.
std::vector<BigInt> bounded_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> divs{BigInt(1)};
  if (n <= 1) return divs;
  std::vector<std::pair<BigInt, int>> fac;
  BigInt rem = n;
  for (BigInt p = 2; p <= 1000000 && p * p <= rem; p += (p == 2 ? 1 : 2)) {
    if (rem % p == 0) {
      int e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (rem > 1) fac.emplace_back(rem, 1);
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    BigInt pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) {
        divs.push_back(divs[j] * pk);
        if (divs.size() >= 4096) break;
      }
      if (divs.size() >= 4096) break;
    }
    if (divs.size() >= 4096) break;
  }
  std::sort(divs.begin(), divs.end());
  if (divs.size() > 256) divs.resize(256);
  return divs;
}

std::vector<Rational> peel_rational_roots(Poly<Rational>& u) {
  std::vector<Rational> roots;
  while (u.degree() > 0 && u.coeff(0) == 0) {
    roots.emplace_back(0);
    u.c.erase(u.c.begin());
  }
  if (u.degree() <= 0) return roots;
  BigInt scale(1);
  for (const auto& cf : u.c)
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(cf));
  const BigInt lo = boost::multiprecision::numerator(u.coeff(0) * Rational(scale));
  const BigInt hi = boost::multiprecision::numerator(u.lead() * Rational(scale));
  const auto num_divs = bounded_divisors(lo);
  const auto den_divs = bounded_divisors(hi);
  for (const auto& dn : num_divs) {
    for (const auto& dd : den_divs) {
      for (int sign : {1, -1}) {
        if (u.degree() <= 0) return roots;
        const Rational cand(sign * dn, dd);
        while (u.degree() > 0 && u.eval(cand) == 0) {
          roots.push_back(cand);
          u = divmod(u, linear_factor(cand)).first;
        }
      }
    }
  }
  return roots;
}

struct SquarefreeRoots {
  std::vector<Rational> rational;
  std::vector<QuadExt> quadratic;   // one representative per conjugate pair
  std::vector<BigComplex> numeric;  // certified, conjugate-closed
};

std::complex<double> to_cd(const BigComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::vector<std::complex<double>> aberth(const std::vector<std::complex<double>>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)]));
  radius += 1.0;
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double ang = 6.283185307179586 * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = radius * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  for (int it = 0; it < 400; ++it) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> pv = a[static_cast<std::size_t>(n)];
      std::complex<double> dv = 0.0;
      const std::complex<double> zi = z[static_cast<std::size_t>(i)];
      for (int j = n - 1; j >= 0; --j) {
        dv = dv * zi + pv;
        pv = pv * zi + a[static_cast<std::size_t>(j)];
      }
      if (std::abs(pv) == 0.0) continue;
      if (std::abs(dv) == 0.0) {
        z[static_cast<std::size_t>(i)] += 1e-6 * (1.0 + std::abs(zi));
        worst = 1.0;
        continue;
      }
      const std::complex<double> w = pv / dv;
      std::complex<double> repel = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) repel += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
      const std::complex<double> corr = w / (1.0 - w * repel);
      z[static_cast<std::size_t>(i)] -= corr;
      worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

BigComplex polish_root(const std::vector<BigComplex>& a, BigComplex z) {
  const int n = static_cast<int>(a.size()) - 1;
  for (int it = 0; it < 24; ++it) {
    BigComplex pv = a[static_cast<std::size_t>(n)];
    BigComplex dv = 0;
    for (int j = n - 1; j >= 0; --j) {
      dv = dv * z + pv;
      pv = pv * z + a[static_cast<std::size_t>(j)];
    }
    if (abs(pv) == 0 || abs(dv) == 0) break;
    const BigComplex step = pv / dv;
    z -= step;
    if (abs(step) <= abs(z) * BigFloat("1e-45") + BigFloat("1e-48")) break;
  }
  return z;
}

void certify_root(const std::vector<BigComplex>& a, const BigComplex& z) {
  const int n = static_cast<int>(a.size()) - 1;
  BigComplex pv = a[static_cast<std::size_t>(n)];
  for (int j = n - 1; j >= 0; --j) pv = pv * z + a[static_cast<std::size_t>(j)];
  BigFloat norm = 0;
  BigFloat zp = 1;
  const BigFloat az = std::max(BigFloat(1), BigFloat(abs(z)));
  for (int j = 0; j <= n; ++j) {
    norm += abs(a[static_cast<std::size_t>(j)]) * zp;
    zp *= az;
  }
  if (BigFloat(abs(pv)) > norm * BigFloat("1e-25"))
    throw RootIsolationFailure("numeric root failed the residual certificate");
}

std::vector<BigComplex> certified_numeric_roots(const Poly<Rational>& u) {
  const int n = u.degree();
  const Rational lead = u.lead();
  std::vector<std::complex<double>> cd(static_cast<std::size_t>(n) + 1);
  std::vector<BigComplex> bc(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Rational monic_c = u.coeff(i) / lead;
    cd[static_cast<std::size_t>(i)] = std::complex<double>(to_double(monic_c), 0.0);
    bc[static_cast<std::size_t>(i)] = BigComplex(to_bigfloat(monic_c));
  }
  auto rough = aberth(cd);
  std::vector<BigComplex> roots;
  roots.reserve(rough.size());
  for (const auto& r : rough) {
    BigComplex z = polish_root(bc, BigComplex(BigFloat(r.real()), BigFloat(r.imag())));
    if (abs(z.imag()) <= (BigFloat(1) + abs(z.real())) * BigFloat("1e-35")) {
      z = BigComplex(z.real(), BigFloat(0));
      z = polish_root(bc, z);
    }
    certify_root(bc, z);
    roots.push_back(z);
  }
  // enforce exact conjugate closure
  double maxabs = 0.0;
  for (const auto& z : roots) maxabs = std::max(maxabs, std::abs(to_cd(z)));
  std::vector<bool> claimed(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!(roots[i].imag() > 0)) continue;
    std::size_t best = roots.size();
    BigFloat best_gap = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (claimed[j] || !(roots[j].imag() < 0)) continue;
      const BigFloat gap = BigFloat(abs(conj(roots[i]) - roots[j]));
      if (best == roots.size() || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    if (best == roots.size() || best_gap > BigFloat("1e-30") * (BigFloat(1) + abs(roots[i])))
      throw RootIsolationFailure("complex roots are not conjugate-closed");
    roots[best] = conj(roots[i]);
    claimed[best] = true;
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (BigFloat(abs(roots[i] - roots[j])) < BigFloat(1e-12) * BigFloat(1.0 + maxabs))
        throw RootIsolationFailure("numeric roots too close to separate");
  return roots;
}

SquarefreeRoots roots_of_squarefree(Poly<Rational> u) {
  SquarefreeRoots out;
  out.rational = peel_rational_roots(u);
  if (u.degree() == 1) {
    out.rational.push_back(-u.coeff(0) / u.coeff(1));
    return out;
  }
  if (u.degree() == 2) {
    const Rational a = u.coeff(2);
    const Rational b = u.coeff(1);
    const Rational c0 = u.coeff(0);
    const Rational disc = b * b - Rational(4) * a * c0;
    const Rational half = Rational(1) / (Rational(2) * a);
    const RationalSqrt rs = rational_sqrt(disc);
    if (disc == 0) throw RootIsolationFailure("double root inside a squarefree factor");
    if (rs.radicand == 1) {
      out.rational.push_back((-b + rs.scale) * half);
      out.rational.push_back((-b - rs.scale) * half);
      return out;
    }
    Rational y = rs.scale * half;
    if (y < 0) y = -y;
    out.quadratic.emplace_back(-b * half, y, rs.radicand);
    return out;
  }
  if (u.degree() >= 3) out.numeric = certified_numeric_roots(u);
  return out;
}

ExpTerm exact_term(const QuadExt& c, const QuadExt& p, int m) {
  ExpTerm t;
  t.c = c.to_complex();
  t.p = p.to_complex();
  t.m = m;
  t.exact = true;
  t.c_exact = c;
  t.p_exact = p;
  return t;
}

void sort_terms(std::vector<ExpTerm>& v) {
  std::sort(v.begin(), v.end(), [](const ExpTerm& a, const ExpTerm& b) {
    if (a.p.real() != b.p.real()) return a.p.real() < b.p.real();
    if (a.p.imag() != b.p.imag()) return a.p.imag() < b.p.imag();
    return a.m < b.m;
  });
}

// Shared by laplace_of and transform_of: sum exact terms c/(s-p)^m into one
// rational function, consuming conjugate pairs together so every partial sum
// has rational coefficients.
RationalFn assemble_rational(const std::vector<ExpTerm>& terms) {
  RationalFn total;
  std::vector<bool> used(terms.size(), false);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (used[i]) continue;
    const ExpTerm& t = terms[i];
    if (!t.exact) throw DomainError("laplace_of: needs exact pole terms");
    used[i] = true;
    if (t.p_exact.is_rational() && t.c_exact.is_rational()) {
      total = total + RationalFn::simple_pole(t.c_exact.x, t.p_exact.x, t.m);
      continue;
    }
    std::size_t partner = terms.size();
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (used[j] || !terms[j].exact || terms[j].m != t.m) continue;
      if (terms[j].p_exact == t.p_exact.conj() && terms[j].c_exact == t.c_exact.conj()) {
        partner = j;
        break;
      }
    }
    if (partner == terms.size())
      throw DomainError("laplace_of: terms are not conjugate-closed");
    used[partner] = true;
    // c (s - conj p)^m + conj(c) (s - p)^m over (s^2 - 2 Re(p) s + Norm(p))^m
    Poly<QuadExt> lin({-t.p_exact.conj(), QuadExt(1)});
    Poly<QuadExt> top = poly_pow(lin, t.m) * t.c_exact;
    std::vector<Rational> num_c;
    num_c.reserve(top.c.size());
    for (const auto& q : top.c) num_c.push_back(Rational(2) * q.x);
    const Rational re2 = Rational(2) * t.p_exact.x;
    const Rational nrm =
        t.p_exact.x * t.p_exact.x - Rational(t.p_exact.d) * t.p_exact.y * t.p_exact.y;
    Poly<Rational> quad({nrm, -re2, Rational(1)});
    total = total + RationalFn::make(Poly<Rational>(std::move(num_c)), poly_pow(quad, t.m));
  }
  return total;
}

}  // namespace

RationalFn RationalFn::make(Poly<Rational> n, Poly<Rational> d) {
  if (d.is_zero()) throw DomainError("RationalFn: zero denominator");
  RationalFn r;
  if (n.is_zero()) return r;
  Poly<Rational> g = poly_gcd(n, d);
  if (g.degree() > 0) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  }
  const Rational inv_lead = Rational(1) / d.lead();
  r.num = n * inv_lead;
  r.den = d * inv_lead;
  return r;
}

RationalFn RationalFn::simple_pole(const Rational& c, const Rational& p, int m) {
  return make(Poly<Rational>::constant(c), poly_pow(linear_factor(p), m));
}

Rational RationalFn::eval_exact(const Rational& s) const {
  const Rational d = den.eval(s);
  if (d == 0) throw DomainError("RationalFn: evaluation at a pole");
  if (num.is_zero()) return Rational(0);
  return num.eval(s) / d;
}

double RationalFn::eval(double s) const {
  double n = 0.0;
  for (std::size_t i = num.c.size(); i-- > 0;) n = n * s + to_double(num.c[i]);
  double d = 0.0;
  for (std::size_t i = den.c.size(); i-- > 0;) d = d * s + to_double(den.c[i]);
  return n / d;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn::make(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn::make(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFn operator*(const RationalFn& a, const Rational& c) {
  return RationalFn::make(a.num * c, a.den);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return poly_equal(a.num, b.num) && poly_equal(a.den, b.den);
}

bool ExpPolyFunction::all_exact() const {
  for (const auto& t : terms)
    if (!t.exact) return false;
  return true;
}

double ExpPolyFunction::eval(double t) const {
  std::complex<double> acc = 0.0;
  for (const auto& term : terms) {
    double w = 1.0;
    for (int i = 1; i < term.m; ++i) w *= t / i;  // t^{m-1}/(m-1)!
    acc += term.c * std::exp(term.p * t) * w;
  }
  return acc.real();
}

Json ExpPolyFunction::to_json() const {
  Json j = Json::object();
  j.set("schema", 1);
  j.set("kind", "exp_poly");
  Json arr = Json::array();
  for (const auto& t : terms) {
    Json o = Json::object();
    o.set("re_c", t.c.real());
    o.set("im_c", t.c.imag());
    o.set("re_p", t.p.real());
    o.set("im_p", t.p.imag());
    o.set("m", t.m);
    arr.push(std::move(o));
  }
  j.set("terms", std::move(arr));
  return j;
}

std::vector<ExpTerm> partial_fractions(const RationalFn& input) {
  RationalFn R = RationalFn::make(input.num, input.den);
  if (R.is_zero()) return {};
  if (!R.proper())
    throw UnsupportedImage("partial_fractions: rational function must be strictly proper");
  const auto parts = squarefree_decomposition(R.den);
  std::vector<ExpTerm> out;
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    const int mult = static_cast<int>(idx) + 1;
    if (parts[idx].degree() <= 0) continue;
    auto roots = roots_of_squarefree(parts[idx]);
    for (const Rational& p : roots.rational) {
      const auto stack = pole_stack(R.num, R.den, p, mult);
      for (int j = 1; j <= mult; ++j)
        if (stack[static_cast<std::size_t>(j - 1)] != 0)
          out.push_back(exact_term(QuadExt(stack[static_cast<std::size_t>(j - 1)]), QuadExt(p), j));
    }
    if (!roots.quadratic.empty()) {
      const auto to_qx = [](const Rational& v) { return QuadExt(v); };
      const Poly<QuadExt> numq = map_poly<QuadExt>(R.num, to_qx);
      const Poly<QuadExt> denq = map_poly<QuadExt>(R.den, to_qx);
      for (const QuadExt& p : roots.quadratic) {
        const auto stack = pole_stack(numq, denq, p, mult);
        for (int j = 1; j <= mult; ++j) {
          const QuadExt& c = stack[static_cast<std::size_t>(j - 1)];
          if (c == QuadExt(0)) continue;
          out.push_back(exact_term(c, p, j));
          out.push_back(exact_term(c.conj(), p.conj(), j));
        }
      }
    }
    if (!roots.numeric.empty()) {
      const auto to_bc = [](const Rational& v) { return BigComplex(to_bigfloat(v)); };
      const Poly<BigComplex> numb = map_poly<BigComplex>(R.num, to_bc);
      const Poly<BigComplex> denb = map_poly<BigComplex>(R.den, to_bc);
      for (const BigComplex& p : roots.numeric) {
        if (p.imag() < 0) continue;  // mirrored from the conjugate root
        const auto stack = pole_stack(numb, denb, p, mult);
        for (int j = 1; j <= mult; ++j) {
          ExpTerm t;
          t.c = to_cd(stack[static_cast<std::size_t>(j - 1)]);
          t.p = to_cd(p);
          t.m = j;
          out.push_back(t);
          if (p.imag() > 0) {
            ExpTerm tc = t;
            tc.c = std::conj(t.c);
            tc.p = std::conj(t.p);
            out.push_back(tc);
          }
        }
      }
    }
  }
  sort_terms(out);
  return out;
}

PolyRoots find_roots(const Poly<Rational>& p) {
  if (p.degree() < 1) throw DomainError("find_roots: polynomial must be nonconstant");
  PolyRoots out;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    const int mult = static_cast<int>(idx) + 1;
    if (parts[idx].degree() <= 0) continue;
    auto roots = roots_of_squarefree(parts[idx]);
    for (const Rational& r : roots.rational) out.rational.emplace_back(r, mult);
    for (const QuadExt& q : roots.quadratic) out.quadratic.emplace_back(q, mult);
    for (const BigComplex& z : roots.numeric) out.numeric.emplace_back(to_cd(z), mult);
  }
  const auto rat_less = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(out.rational.begin(), out.rational.end(), rat_less);
  std::sort(out.quadratic.begin(), out.quadratic.end(), [](const auto& a, const auto& b) {
    if (a.first.x != b.first.x) return a.first.x < b.first.x;
    return a.first.d < b.first.d;
  });
  std::sort(out.numeric.begin(), out.numeric.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

ExpPolyFunction inverse_laplace_rational(const RationalFn& R) {
  ExpPolyFunction f;
  f.terms = partial_fractions(R);
  return f;
}

RationalFn laplace_of(const ExpPolyFunction& f) { return assemble_rational(f.terms); }

RationalFn transform_of(const ExpPolyFunction& f, int n) {
  if (n < 0) throw DomainError("transform_of: negative index");
  std::vector<ExpTerm> scaled = f.terms;
  for (auto& t : scaled) {
    if (!t.exact) throw DomainError("transform_of: needs exact pole terms");
    t.c_exact = t.c_exact * QuadExt(Rational(binom_big(n + t.m - 1, n)));
    t.c = t.c_exact.to_complex();
    t.m += n;
  }
  return assemble_rational(scaled);
}

ExpPolyFunction residue_inverse(const std::function<RationalFn(int)>& rule, int n) {
  if (n < 0) throw DomainError("residue_inverse: negative probe index");
  const RationalFn scaled = rule(n) * Rational(factorial_big(n));
  ExpPolyFunction out;
  for (const ExpTerm& t : partial_fractions(scaled)) {
    if (t.m - 1 < n)
      throw NonCancellingPower("residue_inverse: a residue term has t-power " +
                               std::to_string(t.m - 1) + " below the probe index " +
                               std::to_string(n));
    ExpTerm r = t;
    r.m = t.m - n;
    Rational ratio(1);
    double dratio = 1.0;
    for (int i = t.m - n; i <= t.m - 1; ++i) {
      ratio /= i;
      dratio /= i;
    }
    r.c = t.c * dratio;
    if (r.exact) {
      r.c_exact = t.c_exact * QuadExt(ratio);
      r.c = r.c_exact.to_complex();
    }
    out.terms.push_back(r);
  }
  sort_terms(out.terms);
  return out;
}

namespace {

double term_gap(const ExpPolyFunction& a, const ExpPolyFunction& b) {
  if (a.terms.size() != b.terms.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const ExpTerm& x = a.terms[i];
    const ExpTerm& y = b.terms[i];
    if (x.m != y.m) return std::numeric_limits<double>::infinity();
    if (x.exact && y.exact && x.p_exact == y.p_exact && x.c_exact == y.c_exact) continue;
    gap = std::max(gap, std::abs(x.p - y.p) / (1.0 + std::abs(x.p)));
    gap = std::max(gap, std::abs(x.c - y.c) / (1.0 + std::abs(x.c)));
  }
  return gap;
}

}  // namespace

bool same_terms(const ExpPolyFunction& a, const ExpPolyFunction& b, double tol) {
  return term_gap(a, b) <= tol;
}

ResidueProbeReport residue_probe(const std::function<RationalFn(int)>& rule,
                                 const std::vector<int>& probes) {
  if (probes.empty()) throw DomainError("residue_probe: empty probe set");
  ResidueProbeReport rep;
  rep.probes = probes;
  rep.result = residue_inverse(rule, probes.front());
  for (std::size_t i = 1; i < probes.size(); ++i) {
    const auto g = term_gap(rep.result, residue_inverse(rule, probes[i]));
    rep.max_term_gap = std::max(rep.max_term_gap, g);
  }
  rep.consistent = rep.max_term_gap <= 1e-9;
  return rep;
}

}  // namespace ltt
