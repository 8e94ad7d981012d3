#include "ltt/identities.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "ltt/errors.hpp"

namespace ltt {

namespace {

std::string tuple_label(const char* names, const std::vector<Rational>& vals) {
  std::string out = "(";
  out += names;
  out += ") = (";
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ", ";
    out += vals[i].str();
  }
  out += ")";
  return out;
}

void record_failure(IdentityReport& rep, const std::string& where) {
  rep.all_passed = false;
  if (rep.counterexamples.size() < 16) rep.counterexamples.push_back(where);
}

}  // namespace

Json IdentityReport::to_json() const {
  Json j = Json::object();
  j.set("schema", 1);
  j.set("kind", "identity_report");
  j.set("identity", identity);
  j.set("range", range);
  j.set("all_passed", all_passed);
  Json arr = Json::array();
  for (const auto& c : counterexamples) arr.push(Json::str(c));
  j.set("counterexamples", std::move(arr));
  return j;
}

Rational laguerre_image_term(int m, int n, const Rational& s) {
  if (m < 0 || n < 0) throw DomainError("laguerre_image_term: negative index");
  if (s == 0) throw DomainError("laguerre_image_term: s must be nonzero");
  BinomTable binom;
  Rational acc(0);
  const Rational inv_s = Rational(1) / s;
  Rational spow = rat_pow(inv_s, n + 1);
  for (int k = 0; k <= m; ++k) {
    const Rational term = Rational(binom(m, k)) * Rational(binom(n + k, k)) * spow;
    acc += (k % 2 == 0) ? term : -term;
    spow *= inv_s;
  }
  return acc;
}

IdentityReport verify_laguerre_identity(int m_max, int n_max,
                                        const std::vector<Rational>& s_values) {
  IdentityReport rep;
  rep.identity = "laguerre_image";
  rep.range = "m <= " + std::to_string(m_max) + ", n <= " + std::to_string(n_max) + ", " +
              std::to_string(s_values.size()) + " abscissae";
  BinomTable binom;
  for (const Rational& s : s_values) {
    const Rational inv_s = Rational(1) / s;
    for (int m = 0; m <= m_max; ++m) {
      for (int n = 0; n <= n_max; ++n) {
        Rational lhs(0);
        for (int k = 0; k <= m; ++k) {
          Rational inner(0);
          Rational spow(1);
          for (int j = 0; j <= k; ++j) {
            const Rational t = spow * Rational(binom(k, j)) * Rational(binom(n + j, j));
            inner += ((k + j) % 2 == 0) ? t : -t;
            spow *= inv_s;
          }
          lhs += Rational(binom(m, k)) * inner;
        }
        const Rational rhs = Rational(binom(m + n, n)) * rat_pow(inv_s, m);
        if (lhs != rhs)
          record_failure(rep, tuple_label("m, n, s", {Rational(m), Rational(n), s}));
      }
    }
  }
  return rep;
}

Rational legendre_A(int n, int j) {
  if (n < 0 || j < 0) throw DomainError("legendre_A: negative index");
  BinomTable binom;
  BigInt acc = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    const BigInt t = binom(n, k) * binom(2 * n - 2 * k, n) * binom(n - 2 * k, j);
    acc += (k % 2 == 0) ? t : -t;
  }
  Rational out(acc);
  out *= rat_pow(Rational(2), j - n);
  return (j % 2 == 0) ? out : -out;
}

Poly<Rational> legendre_mapped_poly(int n) {
  if (n < 0) throw DomainError("legendre_mapped_poly: negative degree");
  Poly<Rational> prev({Rational(1)});
  if (n == 0) return prev;
  const Poly<Rational> x({Rational(1), Rational(-2)});  // 1 - 2u
  Poly<Rational> cur = x;
  for (int m = 1; m < n; ++m) {
    Poly<Rational> next = (x * cur * Rational(2 * m + 1) - prev * Rational(m)) *
                          (Rational(1) / Rational(m + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IdentityReport verify_identity_one(int m_max) {
  IdentityReport rep;
  rep.identity = "central_binomial_step";
  rep.range = "m <= " + std::to_string(m_max);
  BinomTable binom;
  for (int m = 0; m <= m_max; ++m) {
    const Rational lhs(binom(2 * m + 2, m + 1));
    const Rational rhs = Rational(4 * m + 2, m + 1) * Rational(binom(2 * m, m));
    if (lhs != rhs) record_failure(rep, tuple_label("m", {Rational(m)}));
  }
  return rep;
}

namespace {

// sum_{k<=m/2} (-1)^k C(m,k) C(2m-2k, m) C(middle_top - 2k, j), the shared
// shape of the alternating sums in the second and third identities; j < 0
// drops the last factor.
BigInt alt_sum(BinomTable& binom, int m, int middle_shift, int j) {
  BigInt acc = 0;
  for (int k = 0; 2 * k <= m; ++k) {
    BigInt t = binom(m, k) * binom(2 * m - 2 * k, m);
    if (j >= 0) t *= binom(m + middle_shift - 2 * k, j);
    acc += (k % 2 == 0) ? t : -t;
  }
  return acc;
}

}  // namespace

IdentityReport verify_identity_two(int m_max) {
  IdentityReport rep;
  rep.identity = "alternating_three_term";
  rep.range = "1 <= m <= " + std::to_string(m_max);
  BinomTable binom;
  for (int m = 1; m <= m_max; ++m) {
    const Rational lhs(alt_sum(binom, m + 1, 0, -1));
    const Rational rhs = Rational(4 * m + 2, m + 1) * Rational(alt_sum(binom, m, 0, -1)) -
                         Rational(4 * m, m + 1) * Rational(alt_sum(binom, m - 1, 0, -1));
    if (lhs != rhs) record_failure(rep, tuple_label("m", {Rational(m)}));
  }
  return rep;
}

IdentityReport verify_identity_three(int m_max) {
  IdentityReport rep;
  rep.identity = "alternating_three_term_general";
  rep.range = "1 <= m <= " + std::to_string(m_max) + ", 1 <= j <= m-1";
  BinomTable binom;
  for (int m = 1; m <= m_max; ++m) {
    for (int j = 1; j <= m - 1; ++j) {
      const Rational lhs(alt_sum(binom, m + 1, 0, j));
      const Rational rhs = Rational(4 * m + 2, m + 1) * Rational(alt_sum(binom, m, 1, j)) -
                           Rational(4 * m, m + 1) * Rational(alt_sum(binom, m - 1, 0, j));
      if (lhs != rhs) record_failure(rep, tuple_label("m, j", {Rational(m), Rational(j)}));
    }
  }
  return rep;
}

IdentityReport verify_bonnet_mapped(int m_max) {
  IdentityReport rep;
  rep.identity = "bonnet_mapped_coefficients";
  rep.range = "1 <= m <= " + std::to_string(m_max) + ", 0 <= j <= m+1";
  const auto A = [](int n, int j) {
    if (j < 0 || j > n) return Rational(0);
    return legendre_A(n, j);
  };
  for (int m = 1; m <= m_max; ++m) {
    for (int j = 0; j <= m + 1; ++j) {
      const Rational lhs = Rational(m + 1) * A(m + 1, j);
      const Rational rhs =
          Rational(2 * m + 1) * (A(m, j) - Rational(2) * A(m, j - 1)) - Rational(m) * A(m - 1, j);
      if (lhs != rhs) record_failure(rep, tuple_label("m, j", {Rational(m), Rational(j)}));
    }
  }
  return rep;
}

IdentityReport verify_legendre_dual(int n_max) {
  IdentityReport rep;
  rep.identity = "legendre_coefficient_dual";
  rep.range = "n <= " + std::to_string(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Poly<Rational> p = legendre_mapped_poly(n);
    for (int j = 0; j <= n; ++j) {
      if (p.coeff(j) != legendre_A(n, j))
        record_failure(rep, tuple_label("n, j", {Rational(n), Rational(j)}));
    }
  }
  return rep;
}

double legendre_mapped_eval_gap(int n, double t) {
  if (n < 0) throw DomainError("legendre_mapped_eval_gap: negative degree");
  const long double x = 1.0L - 2.0L * std::exp(-static_cast<long double>(t));
  long double prev = 1.0L, cur = x;
  if (n == 0) cur = 1.0L;
  for (int m = 1; m < n; ++m) {
    const long double next = ((2 * m + 1) * x * cur - m * prev) / (m + 1);
    prev = cur;
    cur = next;
  }
  // Kahan on the exponential sum; the terms alternate in sign and grow with
  // C(2n, n), so the compensation matters at the larger degrees.
  long double acc = 0.0L, comp = 0.0L;
  for (int j = 0; j <= n; ++j) {
    const long double term =
        static_cast<long double>(to_double(legendre_A(n, j))) * std::exp(-j * static_cast<long double>(t));
    const long double y = term - comp;
    const long double s = acc + y;
    comp = (s - acc) - y;
    acc = s;
  }
  return static_cast<double>(std::fabs(acc - cur));
}

}  // namespace ltt
