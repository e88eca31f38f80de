#pragma once

/**
 * @file vassiliev.hpp
 * @brief Coefficient functionals on knots, their linear extension to knot
 *        combinations, and sampled degree-vanishing checks.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qknot/bigint.hpp"
#include "qknot/knots.hpp"

namespace qknot {

enum class FunctionalKind { b, c, d, lambda, lambda_tilde };

/**
 * Text forms (also used by the CLI):
 *   b:n,m         c:n,m,r        d:n,m,r        d:n,m,r%j  (d mod r^j)
 *   lambda:m      lambdatilde:j,r
 * A trailing %j on any descriptor reduces values modulo r^j (r = the descriptor's r).
 */
struct Functional {
  FunctionalKind kind = FunctionalKind::b;
  int n = 0;
  int m = 0;
  int r = 0;
  int mod_power = 0;  // 0: values in Z; j > 0: values in Z / r^j Z

  static Functional parse(std::string_view text);
  std::string to_string() const;
  /// Value on the closure of b, before any modular reduction.
  Int value(const BraidWord& b) const;
  /// Brings an integer into the declared ring ([0, r^j) representatives).
  Int reduce(const Int& v) const;
};

/// sum of coeff * f(K), reduced in f's ring.
Int evaluate(const Functional& f, const KnotCombination& comb);
/// Pointwise product f * g extended linearly; reduced modulo the smaller modulus when either is modular.
Int evaluate_product(const Functional& f, const Functional& g, const KnotCombination& comb);

struct SamplerConfig {
  std::uint64_t seed = 1;
  int samples = 30;
  int max_length = 8;
  int max_strands = 3;
};

/// Deterministic singular braids with exactly `marks` double points whose closures are knots.
std::vector<SingularBraidWord> sample_singular(const SamplerConfig& cfg, int marks);

struct VassilievSample {
  std::string braid;
  std::vector<std::size_t> marks;
  std::size_t terms = 0;
  Int value;
};

struct VassilievReport {
  std::string check;
  std::string functional;
  int degree = 0;
  int marks = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  std::vector<VassilievSample> samples;
};

/// f evaluated on resolutions of singular braids with degree + 1 marks; every value must be 0.
VassilievReport degree_vanishing_check(const Functional& f, int degree, const SamplerConfig& cfg);
/// f * g on resolutions with deg_f + deg_g + 1 marks.
VassilievReport product_degree_check(const Functional& f, int deg_f, const Functional& g, int deg_g,
                                     const SamplerConfig& cfg);

}  // namespace qknot
