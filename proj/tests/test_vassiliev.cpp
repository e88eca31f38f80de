#include <doctest.h>

#include <random>

#include "qknot/cyclotomic.hpp"
#include "qknot/errors.hpp"
#include "qknot/vassiliev.hpp"

using namespace qknot;

TEST_CASE("functional text forms") {
  for (const char* s : {"b:1,2", "c:0,1,3", "d:1,0,5", "d:0,2,3%2", "lambda:3", "lambdatilde:2,5", "b:1,1%1"}) {
    if (std::string(s) == "b:1,1%1") {
      CHECK_THROWS_AS(Functional::parse(s), Error);
      continue;
    }
    CHECK(Functional::parse(s).to_string() == s);
  }
  const Functional d = Functional::parse("d:1,0,5%2");
  CHECK(d.kind == FunctionalKind::d);
  CHECK(d.r == 5);
  CHECK(d.mod_power == 2);
  CHECK(d.reduce(-1) == 24);
  for (const char* bad : {"b", "b:1", "b:1,x", "q:1,1", "d:0,0,6", "d:2,0,3", "lambda:-1", "c:0,0,1", "d:0,0,3%0"})
    CHECK_THROWS_AS(Functional::parse(bad), Error);
}

TEST_CASE("evaluate examples and linearity") {
  const Functional b00 = Functional::parse("b:0,0");
  KnotCombination empty;
  CHECK(evaluate(b00, empty) == 0);
  KnotCombination single;
  single.add(BraidWord::parse("1 1 1"), 1);
  CHECK(evaluate(b00, single) == 1);
  KnotCombination curl;
  curl.add(BraidWord::parse("", 1), 1);
  curl.add(BraidWord::parse("1"), -1);
  CHECK(evaluate(b00, curl) == 0);

  const Functional b11 = Functional::parse("b:1,1");
  CHECK(evaluate(b11, single) == -2);
  const Functional lam2 = Functional::parse("lambda:2");
  KnotCombination f8;
  f8.add(BraidWord::parse("1 -2 1 -2"), 1);
  CHECK(evaluate(lam2, f8) == -1);

  std::mt19937_64 rng(3);
  const std::vector<std::string> words{"1 1 1", "1 -2 1 -2", "1 1 1 1 1", "1 1 1 2 -1 2", "1 2", "-1 -1 -1"};
  for (int trial = 0; trial < 5; ++trial) {
    KnotCombination X, Y;
    for (int k = 0; k < 3; ++k) {
      X.add(BraidWord::parse(words[rng() % words.size()]), static_cast<long>(rng() % 7) - 3);
      Y.add(BraidWord::parse(words[rng() % words.size()]), static_cast<long>(rng() % 7) - 3);
    }
    const Int a = static_cast<long>(rng() % 9) - 4, b = static_cast<long>(rng() % 9) - 4;
    for (const char* name : {"b:1,1", "lambda:2", "d:1,1,3", "c:1,1,2"}) {
      const Functional f = Functional::parse(name);
      CHECK(evaluate(f, X * a + Y * b) == a * evaluate(f, X) + b * evaluate(f, Y));
    }
  }
}

TEST_CASE("sampler is deterministic and yields knots") {
  SamplerConfig cfg;
  cfg.seed = 99;
  cfg.samples = 15;
  const auto a = sample_singular(cfg, 2);
  const auto b = sample_singular(cfg, 2);
  REQUIRE(a.size() == 15);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].braid == b[k].braid);
    CHECK(a[k].marks == b[k].marks);
    CHECK(a[k].marks.size() == 2);
    CHECK(a[k].braid.closes_to_knot());
    CHECK(a[k].braid.length() <= 8);
    CHECK(a[k].braid.strands() <= 3);
  }
  cfg.seed = 100;
  const auto c = sample_singular(cfg, 2);
  bool differ = false;
  for (std::size_t k = 0; k < a.size(); ++k) differ = differ || !(a[k].braid == c[k].braid);
  CHECK(differ);
}

TEST_CASE("small degree vanishing checks") {
  SamplerConfig cfg;
  cfg.seed = 5;
  cfg.samples = 10;
  CHECK(degree_vanishing_check(Functional::parse("b:0,0"), 0, cfg).pass);
  CHECK(degree_vanishing_check(Functional::parse("b:1,0"), 1, cfg).pass);
  CHECK(degree_vanishing_check(Functional::parse("b:0,2"), 2, cfg).pass);
  CHECK(degree_vanishing_check(Functional::parse("lambda:2"), 2, cfg).pass);
  CHECK(degree_vanishing_check(Functional::parse("d:1,0,3%1"), 1, cfg).pass);
  // b_{0,2} is not of degree 1: some 2-mark combination must see it
  VassilievReport low = degree_vanishing_check(Functional::parse("b:0,2"), 1, cfg);
  CHECK_FALSE(low.pass);
  CHECK(low.marks == 2);
  CHECK(low.samples.size() == 10);
}

TEST_CASE("product of Vassiliev invariants") {
  SamplerConfig cfg;
  cfg.seed = 8;
  cfg.samples = 8;
  CHECK(product_degree_check(Functional::parse("b:0,0"), 0, Functional::parse("b:0,0"), 0, cfg).pass);
  CHECK(product_degree_check(Functional::parse("lambda:1"), 1, Functional::parse("b:2,0"), 2, cfg).pass);
  CHECK(product_degree_check(Functional::parse("lambda:2"), 2, Functional::parse("b:1,0"), 1, cfg).pass);
  KnotCombination comb;
  comb.add(BraidWord::parse("1 1 1"), 2);
  CHECK(evaluate_product(Functional::parse("b:1,1"), Functional::parse("d:0,0,3%1"), comb) == mod_r_reduce(Int(-4), 3, 1));
}
