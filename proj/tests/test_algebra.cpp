#include <doctest.h>

#include <random>

#include "qknot/bigint.hpp"
#include "qknot/cyclotomic.hpp"
#include "qknot/errors.hpp"
#include "qknot/laurent.hpp"
#include "qknot/series.hpp"

using namespace qknot;

namespace {

BivariateSeries random_series(std::mt19937_64& rng, int D) {
  BivariateSeries s(D);
  for (int n = 0; n <= D; ++n)
    for (int m = 0; n + m <= D; ++m) s.set(n, m, static_cast<long>(rng() % 21) - 10);
  return s;
}

CyclotomicInt random_cyclo(std::mt19937_64& rng, int conductor) {
  std::vector<Int> coords(euler_phi(conductor));
  for (auto& c : coords) c = static_cast<long>(rng() % 41) - 20;
  return CyclotomicInt::from_coords(conductor, coords);
}

CyclotomicInt zeta(int r) { return CyclotomicInt::zeta_power(r, 1); }
CyclotomicInt integer(int r, long v) { return CyclotomicInt::from_int(r, v); }

const std::vector<int> kPrimePowers{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};

}  // namespace

TEST_CASE("binomial and integer helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(3, 5) == 0);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(int_pow(3, 4) == 81);
  CHECK(from_decimal("-123456789012345678901234567890") * 10 == from_decimal("-1234567890123456789012345678900"));
  CHECK_THROWS_AS(from_decimal("12a"), Error);
}

TEST_CASE("Laurent polynomials") {
  LaurentPoly a = LaurentPoly::monomial(Variable::t, 1) - LaurentPoly::constant(Variable::t, 1) +
                  LaurentPoly::monomial(Variable::t, -1);
  CHECK(a.to_string() == "t - 1 + t^-1");
  CHECK(a.value_at_one() == 1);
  CHECK(a.mirror() == a);
  LaurentPoly b = a * a;
  CHECK(b.divide_exact(a).value() == a);
  CHECK_FALSE((a + LaurentPoly::constant(Variable::t, 1)).divide_exact(LaurentPoly::monomial(Variable::t, 0, 2)));
  CHECK_THROWS_AS(a + LaurentPoly::monomial(Variable::q, 1), Error);
  LaurentPoly z(Variable::t);
  z.add_term(3, 5);
  z.add_term(3, -5);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
}

TEST_CASE("quantum binomials are symmetric Laurent polynomials") {
  // [4 choose 2] = q^-4 + q^-2 + 2 + q^2 + q^4
  LaurentPoly expect(Variable::q);
  for (int e : {-4, -2, 2, 4}) expect.add_term(e, 1);
  expect.add_term(0, 2);
  CHECK(quantum_binomial(4, 2).specialize_alpha(0) == expect);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      LaurentPoly p = quantum_binomial(n, k).specialize_alpha(0);
      CHECK(p == p.mirror());
      CHECK(p.value_at_one() == binomial(n, k));
      for (const auto& [e, c] : p.terms()) CHECK((e - k * (n - k)) % 2 == 0);
    }
  // {alpha - 0; 1} at alpha = N is q^N - q^-N
  CHECK(alpha_falling(0, 1).specialize_alpha(3) == LaurentPoly::monomial(Variable::q, 3) - LaurentPoly::monomial(Variable::q, -3));
}

TEST_CASE("series_mul examples") {
  const int D = 3;
  BivariateSeries geo(D);
  for (int n = 0; n <= D; ++n) geo.set(n, 0, n % 2 ? -1 : 1);
  CHECK(series_mul(BivariateSeries::one(D) + BivariateSeries::x(D), geo) == BivariateSeries::one(D));
  std::mt19937_64 rng(1);
  BivariateSeries a = random_series(rng, D);
  CHECK(series_mul(a, BivariateSeries::one(D)) == a);
  BivariateSeries s = BivariateSeries::x(2) + BivariateSeries::y(2);
  CHECK(series_mul(s, s) == BivariateSeries::from_terms(2, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
  // mixed orders re-truncate to the smaller one
  CHECK(series_mul(BivariateSeries::one(5), BivariateSeries::x(2)).order() == 2);
  CHECK_THROWS_AS(BivariateSeries::one(2).coeff(2, 1), Error);
}

TEST_CASE("series ring axioms on random triples") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int D = 1 + static_cast<int>(rng() % 5);
    auto a = random_series(rng, D), b = random_series(rng, D), c = random_series(rng, D);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("laurent_to_series examples") {
  LaurentPoly alex = LaurentPoly::monomial(Variable::t, 1) - LaurentPoly::constant(Variable::t, 1) +
                     LaurentPoly::monomial(Variable::t, -1);
  CHECK(laurent_to_series(alex, 3) == BivariateSeries::from_terms(3, {{0, 0, 1}, {0, 2, 1}, {0, 3, -1}}));
  CHECK(laurent_to_series(LaurentPoly::constant(Variable::t, 1), 3) == BivariateSeries::one(3));
  CHECK(laurent_to_series(LaurentPoly::monomial(Variable::q, -2), 4) ==
        BivariateSeries::from_terms(4, {{0, 0, 1}, {1, 0, -1}, {2, 0, 1}, {3, 0, -1}, {4, 0, 1}}));
  CHECK_THROWS_AS(laurent_to_series(LaurentPoly::monomial(Variable::q, 3), 4), Error);
  try {
    laurent_to_series(LaurentPoly::monomial(Variable::q, 1), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddExponent);
  }
}

TEST_CASE("laurent_to_series followed by back-substitution reproduces the input") {
  // Substituting x = q^2 - 1 into the truncated series and subtracting p leaves only
  // terms divisible by (q^2 - 1)^{D+1}.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int D = 1 + static_cast<int>(rng() % 6);
    LaurentPoly p(Variable::q);
    for (int k = 0; k < 4; ++k) p.add_term(2 * (static_cast<int>(rng() % 9) - 4), static_cast<long>(rng() % 7) - 3);
    BivariateSeries s = laurent_to_series(p, D);
    CHECK(s.is_univariate_in_x());
    LaurentPoly back(Variable::q);
    LaurentPoly xpow = LaurentPoly::constant(Variable::q, 1);
    const LaurentPoly x = LaurentPoly::monomial(Variable::q, 2) - LaurentPoly::constant(Variable::q, 1);
    for (int n = 0; n <= D; ++n) {
      back += xpow * s.coeff(n, 0);
      xpow *= x;
    }
    LaurentPoly diff = p - back;
    LaurentPoly xD = LaurentPoly::constant(Variable::q, 1);
    for (int n = 0; n <= D; ++n) xD *= x;
    CHECK(diff.divide_exact(xD).has_value());
  }
}

TEST_CASE("substitute_color examples") {
  BivariateSeries y = BivariateSeries::y(2);
  CHECK(substitute_color(y, 1) == BivariateSeries::x(2));
  CHECK(substitute_color(y, 0).is_zero());
  CHECK(substitute_color(y, 2) == BivariateSeries::from_terms(2, {{1, 0, 2}, {2, 0, 1}}));
  BivariateSeries s = BivariateSeries::from_terms(3, {{0, 0, 4}, {1, 0, -1}, {0, 1, 7}, {1, 2, 3}});
  CHECK(substitute_color(s, 0) == BivariateSeries::from_terms(3, {{0, 0, 4}, {1, 0, -1}}));
  CHECK(substitute_color(s, 3).is_univariate_in_x());
}

TEST_CASE("cyclotomic polynomials and arithmetic") {
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(27) == 18);
  CHECK(as_prime_power(25)->prime == 5);
  CHECK_FALSE(as_prime_power(12));
  CHECK(zeta(5).pow(5) == integer(5, 1));
  CHECK(CyclotomicInt::zeta_power(7, -1) * zeta(7) == integer(7, 1));
  // (zeta_3 - 1)^2 = -3 zeta_3
  CHECK((zeta(3) - integer(3, 1)).pow(2) == zeta(3) * Int(-3));
  CHECK(halve_conductor(CyclotomicInt::zeta_power(6, 1)).pow(2) == zeta(3));
  CHECK(halve_conductor(CyclotomicInt::zeta_power(6, 1)).pow(3) == integer(3, -1));
  CHECK(halve_conductor(CyclotomicInt::zeta_power(8, 2)) == zeta(4));
  CHECK_THROWS_AS(halve_conductor(CyclotomicInt::zeta_power(8, 1)), Error);
}

TEST_CASE("cyclotomic ring axioms on random triples") {
  std::mt19937_64 rng(9);
  for (int r : kPrimePowers) {
    for (int trial = 0; trial < 5; ++trial) {
      auto a = random_cyclo(rng, r), b = random_cyclo(rng, r), c = random_cyclo(rng, r);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(CyclotomicInt::from_coords(r, a.coords()) == a);
    }
  }
}

TEST_CASE("offset basis examples and round trip") {
  CHECK(zeta_power_to_offset_basis(zeta(3)) == std::vector<Int>{1, 1});
  CHECK(zeta_power_to_offset_basis(integer(7, 1)) == std::vector<Int>{1, 0, 0, 0, 0, 0});
  CHECK(zeta_power_to_offset_basis(zeta(3) * Int(-3)) == std::vector<Int>{-3, -3});
  CHECK_THROWS_AS(zeta_power_to_offset_basis(integer(12, 1)), Error);
  std::mt19937_64 rng(2024);
  int count = 0;
  for (int round = 0; count < 1000; ++round)
    for (int r : kPrimePowers) {
      const CyclotomicInt c = random_cyclo(rng, r);
      REQUIRE(offset_basis_to_zeta_power(r, zeta_power_to_offset_basis(c)) == c);
      ++count;
    }
}

TEST_CASE("check_zeta_ideal finds a unit witness for prime powers up to 27") {
  const ZetaIdealWitness two = check_zeta_ideal(2);
  CHECK(two.unit == integer(2, -1));
  CHECK(check_zeta_ideal(3).unit == zeta(3) * Int(-1));
  const ZetaIdealWitness four = check_zeta_ideal(4);
  CHECK(four.unit == zeta(4) * Int(-1));
  CHECK(four.unit * four.inverse == integer(4, 1));
  for (int r : kPrimePowers) {
    const ZetaIdealWitness w = check_zeta_ideal(r);
    CHECK(w.unit * w.inverse == integer(r, 1));
    CHECK((zeta(r) - integer(r, 1)).pow(w.phi) == w.unit * Int(w.prime));
  }
  CHECK_THROWS_AS(check_zeta_ideal(6), Error);
}

TEST_CASE("for r = p^l with l >= 2, (zeta - 1)^phi is not divisible by r") {
  for (int r : {4, 8, 9, 16, 25, 27}) {
    const CyclotomicInt power = (zeta(r) - integer(r, 1)).pow(euler_phi(r));
    CHECK_FALSE(power.divide_exact(r).has_value());
  }
  for (int r : {2, 3, 5, 7, 11}) CHECK((zeta(r) - integer(r, 1)).pow(euler_phi(r)).divide_exact(r).has_value());
}

TEST_CASE("zeta minus one valuation") {
  const CyclotomicInt pi = zeta(9) - integer(9, 1);
  CHECK(zeta_minus_one_valuation(pi) == 1);
  CHECK(zeta_minus_one_valuation(pi.pow(5)) == 5);
  CHECK(zeta_minus_one_valuation(integer(9, 3)) == 6);
  CHECK(zeta_minus_one_valuation(integer(9, 7)) == 0);
  CHECK(zeta_minus_one_valuation(CyclotomicInt(9)) == kExactPrecision);
  std::mt19937_64 rng(3);
  for (int r : {3, 4, 5, 8, 9}) {
    const CyclotomicInt p = zeta(r) - integer(r, 1);
    for (int trial = 0; trial < 10; ++trial) {
      CyclotomicInt a = random_cyclo(rng, r);
      if (a.is_zero()) continue;
      const int e = static_cast<int>(rng() % 7);
      CHECK(zeta_minus_one_valuation(a * p.pow(e)) == zeta_minus_one_valuation(a) + e);
    }
  }
}

TEST_CASE("mod_r_reduce examples") {
  CHECK(mod_r_reduce(Int(7), 3, 1) == 1);
  CHECK(mod_r_reduce(zeta(3) * Int(-3), 3, 1).is_zero());
  CHECK(mod_r_reduce(CyclotomicInt::from_coords(3, {5, -4}), 9, 1) == CyclotomicInt::from_coords(3, {5, 5}));
  CHECK(mod_r_reduce(Int(-1), 2, 3) == 7);
}

TEST_CASE("eval_root examples") {
  const CycloSeries one = eval_root(BivariateSeries::one(4), 3);
  CHECK(one.coeff(0) == integer(3, 1));
  CHECK(one.precision(0) == 5);
  CHECK(eval_root(BivariateSeries::x(4), 2).coeff(0) == integer(2, -2));
  BivariateSeries x2 = BivariateSeries::from_terms(4, {{2, 0, 1}});
  CHECK(eval_root(x2, 3).coeff(0) == zeta(3) * Int(-3));
  CHECK(eval_root(BivariateSeries::y(3), 5).precision(1) == 3);
  CHECK_THROWS_AS(eval_root(BivariateSeries::one(2), 6), Error);
}

TEST_CASE("eval_root precision contract: higher order agrees within the lower precision") {
  std::mt19937_64 rng(77);
  for (int r : {2, 3, 4, 5, 9}) {
    for (int trial = 0; trial < 5; ++trial) {
      BivariateSeries big = random_series(rng, 7);
      const CycloSeries hi = eval_root(big, r);
      const CycloSeries lo = eval_root(big.truncated(4), r);
      for (int m = 0; m <= 4; ++m) CHECK(lo.agrees_at(m, hi));
    }
  }
}

TEST_CASE("CycloSeries arithmetic keeps the smaller precision") {
  CycloSeries a(3, 2), b(3, 2);
  a.set(0, integer(3, 1), 4);
  b.set(0, integer(3, 2), 2);
  a.set(1, zeta(3), kExactPrecision);
  b.set(1, integer(3, 1), 3);
  CycloSeries s = a + b;
  CHECK(s.precision(0) == 2);
  CHECK(s.coeff(0) == integer(3, 3));
  CycloSeries p = a * b;
  CHECK(p.coeff(1) == integer(3, 1) + zeta(3) * Int(2));
  CHECK(p.precision(1) == 2);
}
