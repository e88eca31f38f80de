#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials with arbitrary-precision integer coefficients.
 *
 * LaurentPoly is univariate and carries a variable tag so that a polynomial in
 * q cannot be silently expanded as one in t = q^{2 alpha}. LaurentPoly2 is the
 * bivariate ring Z[q^{+-1}, (q^alpha)^{+-1}] in which R-matrix weights live.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qknot/bigint.hpp"

namespace qknot {

/// q: the quantum parameter. t: q^{2 alpha}. qa: q^alpha (so t = qa^2).
enum class Variable { q, t, qa };

const char* variable_name(Variable v);

class LaurentPoly {
 public:
  explicit LaurentPoly(Variable var = Variable::q) : var_(var) {}

  static LaurentPoly monomial(Variable var, int exponent, Int coeff = 1);
  static LaurentPoly constant(Variable var, Int coeff);

  Variable variable() const { return var_; }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int exponent, const Int& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Int& scalar);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Int& s) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// p(v) -> p(v^k).
  LaurentPoly scale_exponents(int k) const;
  /// p(v) -> v^k p(v).
  LaurentPoly shift(int k) const;
  /// p(v) -> p(v^{-1}).
  LaurentPoly mirror() const { return scale_exponents(-1); }
  /// Same coefficients, different variable tag.
  LaurentPoly retag(Variable var) const;
  Int value_at_one() const;

  /// Quotient when other divides *this exactly in Z[v^{+-1}], otherwise nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& other) const;

  std::string to_string() const;

 private:
  void check_same_variable(const LaurentPoly& other) const;

  Variable var_;
  std::map<int, Int> terms_;
};

/// Element of Z[q^{+-1}, A^{+-1}] with A standing for q^alpha.
class LaurentPoly2 {
 public:
  using Exponents = std::pair<int, int>;  // (power of q, power of A)

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(int q_exp, int a_exp, Int coeff = 1);
  static LaurentPoly2 one() { return monomial(0, 0); }

  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int q_exp, int a_exp, const Int& coeff);

  LaurentPoly2& operator+=(const LaurentPoly2& other);
  LaurentPoly2& operator-=(const LaurentPoly2& other);
  LaurentPoly2& operator*=(const LaurentPoly2& other);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out = a;
    out *= b;
    return out;
  }
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

  /// Specializes A = q^N.
  LaurentPoly specialize_alpha(int N) const;

  std::string to_string() const;

 private:
  std::map<Exponents, Int> terms_;
};

/// {k} = q^k - q^{-k} in Z[q^{+-1}].
LaurentPoly2 quantum_brace(int k);
/// Symmetric quantum binomial [n choose k] = [n]!/([k]![n-k]!) as a Laurent polynomial in q.
LaurentPoly2 quantum_binomial(int n, int k);
/// {alpha - i; n} = prod_{k<n} (q^{alpha - i - k} - q^{-alpha + i + k}).
LaurentPoly2 alpha_falling(int i, int n);

}  // namespace qknot
