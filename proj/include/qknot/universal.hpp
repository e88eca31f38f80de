#pragma once

/**
 * @file universal.hpp
 * @brief The universal invariant acting on the Verma module, truncated in total
 *        degree, giving F_infinity as a BivariateSeries.
 *
 * Verma basis v_0, v_1, ...:  E v_{i+1} = v_i,  K v_i = q^{alpha - 2i} v_i,
 * F^{(n)} v_i = [n+i choose i] {alpha - i; n} v_{n+i}.
 * R = q^{H (x) H / 2} sum_n q^{n(n-1)/2} E^n (x) F^{(n)}. The scalar q^{alpha^2/2}
 * produced by every crossing is never materialized; it is counted and must cancel.
 */

#include <vector>

#include "qknot/knots.hpp"
#include "qknot/laurent.hpp"
#include "qknot/series.hpp"
#include "qknot/table.hpp"

namespace qknot {

struct TruncationPolicy {
  int D = 0;
};

/// One summand of a crossing acting on (v_i on the left lane, v_j on the right lane).
struct CrossingTerm {
  int left;
  int right;
  int level;  // n
  LaurentPoly2 coeff;
};

/// Positive sign: braiding P o R. Negative sign: R^{-1} o P. Levels n > D are dropped.
/// The q^{+-alpha^2/2} factor is omitted.
std::vector<CrossingTerm> crossing_weights(int i, int j, int sign, int D);

/// Pivotal weights on v_i: the left-up cap carries K, the right-up cup K^{-1};
/// the other two are 1.
LaurentPoly2 cap_weight(int i, Turn turn);
LaurentPoly2 cup_weight(int i, Turn turn);

/// State sum on a writhe-0 diagram. Throws NonzeroAlphaSquareCounter when the
/// writhe is not 0 and OddAlphaExponent / OddExponent on convention violations.
BivariateSeries compute_F_infinity(const LongKnotDiagram& d, const TruncationPolicy& policy);
BivariateSeries compute_F_infinity(const LongKnotDiagram& d, int D);

/// closure_to_long, normalize_writhe, compute_F_infinity.
BivariateSeries f_infinity(const BraidWord& knot, int D);

/// b_{n,m} for n + m <= D.
CoefficientTable b_table(const BraidWord& knot, int D);
CoefficientTable table_from_series(const BivariateSeries& s, TableKind kind, int r);

}  // namespace qknot
