#pragma once

/**
 * @file oracles.hpp
 * @brief Classical invariants computed independently of the Verma state sum:
 *        colored Jones, Alexander (reduced Burau) and ADO_r at q = zeta_{2r}.
 */

#include <map>
#include <vector>

#include "qknot/bigint.hpp"
#include "qknot/cyclotomic.hpp"
#include "qknot/knots.hpp"
#include "qknot/laurent.hpp"

namespace qknot {

/**
 * Colored Jones J_N of the closure of b from the (N+1)-dimensional module,
 * framing corrected and normalized so the unknot gives 1. Returned as a Laurent
 * polynomial in q with only even exponents (i.e. a polynomial in q^2).
 */
LaurentPoly colored_jones(const BraidWord& b, int N);

/// Same invariant for links, as a Laurent polynomial in q^{1/2}: the exponent
/// stored at k means q^{k/2}. Components other than the first are closed by a trace.
LaurentPoly colored_jones_halves(const BraidWord& b, int N);

/// Conway-normalized Alexander polynomial of a knot, in t = q^{2 alpha}.
LaurentPoly alexander(const BraidWord& b);

/// Conway-normalized Alexander polynomial of any braid closure, in t^{1/2} = q^alpha.
LaurentPoly alexander_halves(const BraidWord& b);

/// ADO_r with coefficients in Z[zeta_r], keyed by the exponent of t = q^{2 alpha}.
struct AdoPolynomial {
  int r = 2;
  std::map<int, CyclotomicInt> terms;

  CyclotomicInt coeff(int exponent) const;
  bool operator==(const AdoPolynomial&) const = default;
};

AdoPolynomial ado(const BraidWord& b, int r);

/// lambda_m for m <= M from the expansion A(1 + y) = sum lambda_m y^m.
std::vector<Int> lambda_coeffs(const LaurentPoly& alexander_t, int M);

/// sum_m lambda_m sum_k C(m,k) (-1)^{m-k} C(rk, j); needs lambda_m for m <= j.
Int lambda_tilde(const std::vector<Int>& lambda, int r, int j);
/// lambda_tilde_j for j = 0..J.
std::vector<Int> lambda_tilde_row(const std::vector<Int>& lambda, int r, int J);

struct AlexanderExpansion {
  std::vector<Int> lambda;
  std::map<int, std::vector<Int>> lambda_tilde;  // r -> row j = 0..M
};

AlexanderExpansion alexander_expansion(const LaurentPoly& alexander_t, int M, const std::vector<int>& rs);

/// True iff sum_k C(m,k) (-1)^{m-k} C(rk, j) is exactly 0. Requires m > j >= 0.
bool binomial_lemma_check(int r, int m, int j);
Int binomial_lemma_sum(int r, int m, int j);

}  // namespace qknot
