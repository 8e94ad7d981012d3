#pragma once

#include <string>
#include <vector>

#include "ltt/exact.hpp"
#include "ltt/jsonio.hpp"
#include "ltt/polynomial.hpp"

namespace ltt {

// Result of sweeping an exact identity over a parameter range.  Every failing
// tuple is recorded; an empty list with all_passed set means the whole range
// checked out in exact arithmetic.
struct IdentityReport {
  std::string identity;
  std::string range;
  bool all_passed = true;
  std::vector<std::string> counterexamples;
  Json to_json() const;
};

// Image of the m-th Laguerre polynomial at index n:
//   s^{-(n+1)} sum_{k<=m} (-1)^k C(m,k) C(n+k,k) s^{-k}.
Rational laguerre_image_term(int m, int n, const Rational& s);

// Image-side consequence of sum_{k<=m} (-1)^k C(m,k) L_k(x) = x^m / m!:
//   sum_{k<=m} C(m,k) sum_{j<=k} (-1)^{k+j} s^{-j} C(k,j) C(n+j,j)
//     = C(m+n,n) s^{-m}.
// Checked exactly over 0 <= m <= m_max, 0 <= n <= n_max, each supplied s.
IdentityReport verify_laguerre_identity(int m_max, int n_max,
                                        const std::vector<Rational>& s_values);

// Exponential-basis coefficients of the mapped Legendre polynomial:
//   P_n(1 - 2u) = sum_{j<=n} A_{n,j} u^j,
//   A_{n,j} = sum_{k<=n/2} (-1)^{j+k} 2^{j-n} C(n,k) C(2n-2k,n) C(n-2k,j).
Rational legendre_A(int n, int j);

// The same polynomial built the other way, by running Bonnet's recurrence on
// P_n(1 - 2u) directly; coefficient j must equal A_{n,j}.
Poly<Rational> legendre_mapped_poly(int n);

// C(2m+2, m+1) = (4m+2)/(m+1) C(2m, m), m <= m_max.
IdentityReport verify_identity_one(int m_max);

// Alternating-sum three-term relation (the j = 0 row of the mapped Bonnet
// recurrence), 1 <= m <= m_max.
IdentityReport verify_identity_two(int m_max);

// The general row with the Pascal-merged middle factor C(m-2k+1, j),
// 1 <= m <= m_max, 1 <= j <= m-1.
IdentityReport verify_identity_three(int m_max);

// Full coefficient recurrence (m+1) A_{m+1,j} = (2m+1)(A_{m,j} - 2 A_{m,j-1})
// - m A_{m-1,j} with out-of-range entries zero; covers both endpoint
// relations, 1 <= m <= m_max, 0 <= j <= m+1.
IdentityReport verify_bonnet_mapped(int m_max);

// A_{n,j} against the Bonnet-built coefficients, n <= n_max, all j.
IdentityReport verify_legendre_dual(int n_max);

// |sum_j A_{n,j} e^{-jt} - P_n(1 - 2 e^{-t})| with the Legendre value taken
// from the three-term recurrence in long double.
double legendre_mapped_eval_gap(int n, double t);

}  // namespace ltt
