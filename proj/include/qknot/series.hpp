#pragma once

/**
 * @file series.hpp
 * @brief Total-degree truncated power series in x = q^2 - 1 and y = q^{2 alpha} - 1.
 *
 * Coefficients of x^n y^m are stored densely for n + m <= D. Binary operations
 * on series of different orders re-truncate to the smaller order, so a result
 * never reports a coefficient that one of its inputs did not determine.
 */

#include <tuple>
#include <vector>

#include "qknot/bigint.hpp"
#include "qknot/laurent.hpp"

namespace qknot {

class BivariateSeries {
 public:
  struct Term {
    int n;
    int m;
    Int value;
  };

  explicit BivariateSeries(int order = 0);

  static BivariateSeries one(int order);
  static BivariateSeries x(int order);
  static BivariateSeries y(int order);
  static BivariateSeries from_terms(int order, const std::vector<Term>& terms);
  /// (1 + x)^a (1 + y)^b, truncated; a and b may be negative.
  static BivariateSeries unit_monomial(int order, int a, int b);

  int order() const { return order_; }
  const Int& coeff(int n, int m) const;
  void set(int n, int m, Int value);
  void add_to(int n, int m, const Int& value);
  bool is_zero() const;
  /// Nonzero coefficients, ordered by (n, m).
  std::vector<Term> terms() const;
  /// True when every nonzero coefficient has m = 0.
  bool is_univariate_in_x() const;
  /// Least total degree of a nonzero coefficient; order()+1 if zero.
  int valuation() const;

  BivariateSeries truncated(int order) const;

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  BivariateSeries& operator*=(const Int& scalar);
  BivariateSeries operator-() const;
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

  /// In-place multiplication by (1 + x).
  void mul_one_plus_x();
  /// In-place multiplication by (1 + y).
  void mul_one_plus_y();

 private:
  std::size_t index(int n, int m) const {
    return static_cast<std::size_t>(n) * (order_ + 1) - static_cast<std::size_t>(n) * (n - 1) / 2 + m;
  }
  void check_key(int n, int m) const;

  int order_;
  std::vector<Int> coeffs_;
};

BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b);

/// Expands a Laurent polynomial in q (through q^2 = 1 + x) or in t (t = 1 + y) or in
/// q^alpha (through q^{2 alpha} = 1 + y). Odd powers of q or q^alpha raise OddExponent.
BivariateSeries laurent_to_series(const LaurentPoly& p, int order);

/// Same expansion for an element of Z[q^{+-1}, (q^alpha)^{+-1}] with even exponents.
BivariateSeries laurent_to_series(const LaurentPoly2& p, int order);

/// Replaces y by (1 + x)^N - 1, i.e. specializes q^alpha = q^N.
BivariateSeries substitute_color(const BivariateSeries& s, int N);

}  // namespace qknot
