#pragma once

/**
 * @file coefficients.hpp
 * @brief c, d and CL tables, and the two-pipeline checks at roots of unity.
 *
 * For r = p^l, (zeta_r - 1)^{phi(r)} generates (p), so a coefficient known
 * modulo (zeta_r - 1)^e is known modulo r exactly when e >= l * phi(r).
 */

#include <optional>
#include <string>
#include <vector>

#include "qknot/bigint.hpp"
#include "qknot/cyclotomic.hpp"
#include "qknot/knots.hpp"
#include "qknot/oracles.hpp"
#include "qknot/series.hpp"
#include "qknot/table.hpp"

namespace qknot {

/// A knot together with the label used in reports (table name or braid text).
struct KnotInput {
  std::string label;
  BraidWord braid;
};

KnotInput named_knot(const std::string& name);
KnotInput braid_knot(const std::string& text, int strands = 0);

/// Memoized F_infinity, ADO_r and Alexander, keyed by braid word. Safe to call concurrently.
BivariateSeries cached_f_infinity(const BraidWord& b, int D);
AdoPolynomial cached_ado(const BraidWord& b, int r);
LaurentPoly cached_alexander(const BraidWord& b);

/// c_{n,m} = sum_{k<=m} lambda_tilde_k b_{n,m-k}, for n + m <= D.
CoefficientTable c_table(const CoefficientTable& b, const std::vector<Int>& lambda_tilde, int D);

/// Power series in y of an ADO polynomial: coefficient of y^m for m <= M, exact.
CycloSeries ado_series(const AdoPolynomial& a, int M);

/// d_{n,m}, 0 <= n < phi(r), m <= M. Throws NotPrimePower.
CoefficientTable d_table(const AdoPolynomial& a, int M);
/// sum_n d_{n,m} (zeta_r - 1)^n, the inverse of d_table's basis change.
CyclotomicInt d_reconstruct(const CoefficientTable& d, int m);

/**
 * CL_{j,i,m}: sum_{n < (J+1) phi} c_{n,m} (zeta - 1)^n = sum_{j<=J} sum_{i<phi} CL_{j,i,m} p^j (zeta - 1)^i,
 * with digits in [0, p) below the top level and the remainder at level J.
 * p = r when r is prime; for r = p^l the radix is p, because (zeta - 1)^{phi} generates (p).
 */
CoefficientTable cl_digits(const CoefficientTable& c, int r, int J);
CyclotomicInt cl_reconstruct(const CoefficientTable& cl, int m);

struct CheckEntry {
  int m = 0;
  int precision = 0;
  std::optional<int> margin;  // valuation excess over the precision; empty when the difference is 0
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::string check;
  std::string knot;
  int r = 0;
  bool pass = true;
  std::vector<CheckEntry> per_m;
};

/// ev_r(A(t^r) F_infinity) against ADO_r, y^m for m <= M, modulo (zeta - 1)^{D-m+1}.
CheckReport check_unified_vs_ado(const KnotInput& knot, int r, int D, int M);

/// d_{n,m} = b_{n,m} mod r for n < phi(r), m < r, n + m <= D.
CheckReport mod_r_congruence_check(const KnotInput& knot, int r, int D);

struct ValuationResult {
  std::optional<int> value;  // empty means no nonzero coefficient up to examined
  int examined = -1;         // largest m whose residue mod r was determined
};

/// Least m <= M such that F_infinity(zeta_r, y) - ADO_r has a y^m coefficient nonzero mod r.
ValuationResult valuation_mod_r(const KnotInput& knot, int r, int D, int M);
CheckReport valuation_check(const KnotInput& knot, int r, int D, int M);

/// Throws MismatchBeyondPrecision / CongruenceFailure for a failing report.
void enforce(const CheckReport& report);

}  // namespace qknot
