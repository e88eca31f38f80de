#include <doctest.h>

#include <map>

#include "qknot/errors.hpp"
#include "qknot/oracles.hpp"
#include "qknot/universal.hpp"

using namespace qknot;

namespace {

// Composes two crossings on the same pair of lanes and collects the result by output indices.
std::map<std::pair<int, int>, LaurentPoly2> compose(int i, int j, int first, int second, int D) {
  std::map<std::pair<int, int>, LaurentPoly2> out;
  for (const auto& a : crossing_weights(i, j, first, D))
    for (const auto& b : crossing_weights(a.left, a.right, second, D)) {
      auto& slot = out[{b.left, b.right}];
      slot += a.coeff * b.coeff;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

const std::vector<std::string> kTrefoilPresentations{"1 1 1", "1 1 1 2", "1 1 1 -2", "2 1 1 1", "-2 1 1 1 2 2",
                                                     "1 1 1 2 3"};

}  // namespace

TEST_CASE("crossing_weights examples") {
  auto w = crossing_weights(0, 0, 1, 5);
  REQUIRE(w.size() == 1);
  CHECK(w[0].left == 0);
  CHECK(w[0].right == 0);
  CHECK(w[0].level == 0);
  CHECK(w[0].coeff == LaurentPoly2::one());
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int sign : {1, -1}) {
        auto d0 = crossing_weights(i, j, sign, 0);
        REQUIRE(d0.size() == 1);
        CHECK(d0[0].level == 0);
        CHECK(d0[0].left == j);
        CHECK(d0[0].right == i);
        for (const auto& t : crossing_weights(i, j, sign, 5)) {
          CHECK(t.left + t.right == i + j);
          CHECK(t.level <= 5);
        }
      }
  // positive crossing on (v_2, v_0): levels 0, 1, 2 move weight from the left lane to the right
  CHECK(crossing_weights(2, 0, 1, 5).size() == 3);
  CHECK(crossing_weights(2, 0, 1, 1).size() == 2);
}

TEST_CASE("R composed with its inverse is the identity on low indices") {
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      for (auto [first, second] : {std::pair{1, -1}, std::pair{-1, 1}}) {
        auto out = compose(i, j, first, second, 5);
        REQUIRE(out.size() == 1);
        CHECK(out.begin()->first == std::pair{i, j});
        CHECK(out.begin()->second == LaurentPoly2::one());
      }
    }
}

TEST_CASE("pivotal weights") {
  CHECK(cap_weight(0, Turn::RightUp) == LaurentPoly2::one());
  CHECK(cup_weight(3, Turn::LeftUp) == LaurentPoly2::one());
  CHECK(cap_weight(2, Turn::LeftUp) * cup_weight(2, Turn::RightUp) == LaurentPoly2::one());
  CHECK(cap_weight(1, Turn::LeftUp) == LaurentPoly2::monomial(-2, 1));
}

TEST_CASE("unknot and zigzags give 1") {
  CHECK(f_infinity(knot_table("unknot"), 5) == BivariateSeries::one(5));
  for (const char* w : {"1", "-1", "1 2", "-1 -2 -3", "1 -2", "2 1"})
    CHECK(f_infinity(BraidWord::parse(w), 4) == BivariateSeries::one(4));
  LongKnotDiagram zig({DiagramEvent::cup(1, Turn::RightUp), DiagramEvent::cap(0, Turn::LeftUp)});
  CHECK(compute_F_infinity(zig, 4) == BivariateSeries::one(4));
  LongKnotDiagram zag({DiagramEvent::cup(0, Turn::LeftUp), DiagramEvent::cap(1, Turn::RightUp)});
  CHECK(compute_F_infinity(zag, 4) == BivariateSeries::one(4));
}

TEST_CASE("nonzero writhe is refused") {
  try {
    compute_F_infinity(closure_to_long(knot_table("trefoil")), 2);
    FAIL("expected NonzeroAlphaSquareCounter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroAlphaSquareCounter);
  }
}

TEST_CASE("frozen low-order coefficients") {
  CoefficientTable t = b_table(knot_table("trefoil"), 3);
  const std::map<std::vector<int>, Int> trefoil{{{0, 0}, 1}, {{0, 2}, -1}, {{0, 3}, 1},
                                                {{1, 1}, -2}, {{1, 2}, 3}, {{2, 1}, 5}};
  CHECK(t.entries == trefoil);
  CoefficientTable f = b_table(knot_table("figure8"), 3);
  const std::map<std::vector<int>, Int> figure8{{{0, 0}, 1}, {{0, 2}, 1}, {{0, 3}, -1},
                                                {{1, 1}, 2}, {{1, 2}, -1}, {{2, 1}, -1}};
  CHECK(f.entries == figure8);
  CHECK(b_table(knot_table("unknot"), 4).entries == std::map<std::vector<int>, Int>{{{0, 0}, 1}});
}

TEST_CASE("b_00 is 1 for table knots") {
  for (const auto& name : knot_table_names()) CHECK(f_infinity(knot_table(name), 2).coeff(0, 0) == 1);
}

TEST_CASE("truncation stability") {
  for (const char* name : {"trefoil", "figure8", "5_2"}) {
    BivariateSeries hi = f_infinity(knot_table(name), 5);
    CHECK(f_infinity(knot_table(name), 2) == hi.truncated(2));
    CHECK(f_infinity(knot_table(name), 4) == hi.truncated(4));
  }
}

TEST_CASE("Markov-equivalent presentations agree") {
  const BivariateSeries ref = f_infinity(BraidWord::parse(kTrefoilPresentations[0]), 4);
  for (const auto& w : kTrefoilPresentations) CHECK(f_infinity(BraidWord::parse(w), 4) == ref);
  CHECK(f_infinity(BraidWord::parse("-2 1 -2 1"), 4) == f_infinity(knot_table("figure8"), 4));
  CHECK(f_infinity(BraidWord::parse("-1 -1 -1"), 4) != ref);
}

TEST_CASE("colour specialization matches the colored Jones oracle") {
  const int D = 4;
  for (const char* name : {"trefoil", "figure8", "5_1"}) {
    const BivariateSeries F = f_infinity(knot_table(name), D);
    for (int N = 0; N <= 3; ++N) {
      INFO(name << " N=" << N);
      CHECK(substitute_color(F, N) == laurent_to_series(colored_jones(knot_table(name), N), D));
    }
  }
}

TEST_CASE("y-part inverts the Alexander polynomial") {
  // At x = 0 the series is 1 / A(1 + y).
  for (const char* name : {"trefoil", "figure8", "6_1"}) {
    const int D = 4;
    BivariateSeries F = f_infinity(knot_table(name), D);
    BivariateSeries A = laurent_to_series(alexander(knot_table(name)), D);
    BivariateSeries prod = series_mul(F, A);
    for (int m = 0; m <= D; ++m) CHECK(prod.coeff(0, m) == (m == 0 ? 1 : 0));
  }
}

TEST_CASE("table_from_series keeps nonzero coefficients") {
  BivariateSeries s = BivariateSeries::from_terms(2, {{0, 0, 1}, {1, 1, -3}});
  CoefficientTable t = table_from_series(s, TableKind::c, 3);
  CHECK(t.kind == TableKind::c);
  CHECK(t.r == 3);
  CHECK(t.order == 2);
  CHECK(t.at(1, 1) == -3);
  CHECK(t.at(2, 0) == 0);
  CHECK(t.entries.size() == 2);
}
