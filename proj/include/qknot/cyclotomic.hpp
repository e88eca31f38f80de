#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Cyclotomic integers Z[zeta_m] in the power basis, and series over them.
 *
 * An element of Z[zeta_m] is stored as phi(m) integer coordinates on
 * 1, zeta, ..., zeta^{phi(m)-1}; every product is reduced modulo the m-th
 * cyclotomic polynomial. For prime-power conductors the offset basis
 * 1, (zeta - 1), ..., (zeta - 1)^{phi(m)-1} is also available; it is reached
 * from the power basis by a unimodular binomial transform.
 */

#include <climits>
#include <optional>
#include <vector>

#include "qknot/bigint.hpp"

namespace qknot {

struct PrimePower {
  long prime;
  int exponent;
};

/// p and l when n = p^l with l >= 1.
std::optional<PrimePower> as_prime_power(long n);
long euler_phi(long n);
/// Coefficients (low degree first) of the m-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int m);

class CyclotomicInt {
 public:
  explicit CyclotomicInt(int conductor = 1);

  static CyclotomicInt from_int(int conductor, const Int& value);
  /// zeta_m^k for any integer k.
  static CyclotomicInt zeta_power(int conductor, long k);
  /// Reduces an arbitrary-length coefficient vector on 1, zeta, zeta^2, ...
  static CyclotomicInt from_coords(int conductor, std::vector<Int> coords);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(coords_.size()); }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(const Int& scalar);
  CyclotomicInt operator-() const;
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const Int& s) { return a *= s; }
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
  }

  CyclotomicInt pow(unsigned long e) const;
  /// Quotient by an integer when every coordinate is divisible, else nullopt.
  std::optional<CyclotomicInt> divide_exact(const Int& divisor) const;
  /// Multiplicative inverse inside Z[zeta_m] when this element is a unit.
  std::optional<CyclotomicInt> inverse() const;

  std::string to_string() const;

 private:
  void check_same_conductor(const CyclotomicInt& other) const;

  int conductor_;
  std::vector<Int> coords_;
};

/// Rewrites an element of Z[zeta_{2r}] inside Z[zeta_r], where r = target. For odd r
/// this uses zeta_{2r} = -zeta_r^{(r+1)/2}; for even r the element must involve only
/// even powers of zeta_{2r}. Throws DivisionFailed when the element is not in Z[zeta_r].
CyclotomicInt halve_conductor(const CyclotomicInt& z);

/// Coordinates d_n with c = sum d_n (zeta - 1)^n. Conductor must be a prime power.
std::vector<Int> zeta_power_to_offset_basis(const CyclotomicInt& c);
CyclotomicInt offset_basis_to_zeta_power(int conductor, const std::vector<Int>& offset);

/// (zeta - 1)-adic valuation for a prime-power conductor; INT_MAX for zero.
int zeta_minus_one_valuation(const CyclotomicInt& c);

/// Unit u with (zeta_r - 1)^{phi(r)} = p * u in Z[zeta_r], r = p^l, together with u^{-1}.
struct ZetaIdealWitness {
  int r;
  long prime;
  long phi;
  CyclotomicInt unit;
  CyclotomicInt inverse;
};

ZetaIdealWitness check_zeta_ideal(int r);

/// Coordinates (power basis) reduced into [0, r^j).
CyclotomicInt mod_r_reduce(const CyclotomicInt& c, long r, int j);
Int mod_r_reduce(const Int& value, long r, int j);

inline constexpr int kExactPrecision = INT_MAX;

/**
 * Truncated series sum_m c_m y^m with c_m in Z[zeta_r]. Coefficient m is only
 * known modulo (zeta_r - 1)^{precision(m)}; kExactPrecision marks exact values.
 */
class CycloSeries {
 public:
  CycloSeries(int conductor, int order);

  int conductor() const { return conductor_; }
  int order() const { return order_; }
  const CyclotomicInt& coeff(int m) const { return coeffs_.at(m); }
  int precision(int m) const { return precision_.at(m); }
  void set(int m, CyclotomicInt value, int precision);

  CycloSeries& operator+=(const CycloSeries& other);
  CycloSeries& operator-=(const CycloSeries& other);
  friend CycloSeries operator+(CycloSeries a, const CycloSeries& b) { return a += b; }
  friend CycloSeries operator-(CycloSeries a, const CycloSeries& b) { return a -= b; }
  friend CycloSeries operator*(const CycloSeries& a, const CycloSeries& b);

  /// True when coefficient m agrees with other's modulo the smaller of the two precisions.
  bool agrees_at(int m, const CycloSeries& other) const;

 private:
  int conductor_;
  int order_;
  std::vector<CyclotomicInt> coeffs_;
  std::vector<int> precision_;
};

class BivariateSeries;

/// Evaluates x = zeta_r - 1: the y^m coefficient becomes sum_n c_{n,m} (zeta_r - 1)^n,
/// known modulo (zeta_r - 1)^{D - m + 1}. Requires r to be a prime power.
CycloSeries eval_root(const BivariateSeries& s, int r);

}  // namespace qknot
