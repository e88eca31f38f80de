#include "qknot/vassiliev.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "qknot/coefficients.hpp"
#include "qknot/errors.hpp"
#include "qknot/oracles.hpp"
#include "qknot/universal.hpp"

namespace qknot {

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view piece = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw Error(ErrorCode::ParseError, "bad functional '" + std::string(whole) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Functional Functional::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "functional needs 'kind:args'");
  const std::string_view name = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);
  Functional f;
  const std::size_t pct = args.find('%');
  if (pct != std::string_view::npos) {
    auto j = parse_ints(args.substr(pct + 1), text);
    if (j.size() != 1 || j[0] < 1) throw Error(ErrorCode::ParseError, "bad modulus exponent in '" + std::string(text) + "'");
    f.mod_power = j[0];
    args = args.substr(0, pct);
  }
  const auto v = parse_ints(args, text);
  auto want = [&](std::size_t k) {
    if (v.size() != k) throw Error(ErrorCode::ParseError, "wrong argument count in '" + std::string(text) + "'");
  };
  if (name == "b") {
    want(2);
    f.kind = FunctionalKind::b;
    f.n = v[0];
    f.m = v[1];
  } else if (name == "c" || name == "d") {
    want(3);
    f.kind = name == "c" ? FunctionalKind::c : FunctionalKind::d;
    f.n = v[0];
    f.m = v[1];
    f.r = v[2];
  } else if (name == "lambda") {
    want(1);
    f.kind = FunctionalKind::lambda;
    f.m = v[0];
  } else if (name == "lambdatilde") {
    want(2);
    f.kind = FunctionalKind::lambda_tilde;
    f.m = v[0];
    f.r = v[1];
  } else {
    throw Error(ErrorCode::ParseError, "unknown functional kind '" + std::string(name) + "'");
  }
  if (f.n < 0 || f.m < 0) throw Error(ErrorCode::InvalidArgument, "negative functional index");
  if ((f.kind == FunctionalKind::c || f.kind == FunctionalKind::d || f.kind == FunctionalKind::lambda_tilde) &&
      f.r < 2)
    throw Error(ErrorCode::InvalidArgument, "functional needs r >= 2");
  if (f.mod_power > 0 && f.r < 2) throw Error(ErrorCode::InvalidArgument, "modular functional needs an r");
  if (f.kind == FunctionalKind::d) {
    if (!as_prime_power(f.r)) throw Error(ErrorCode::NotPrimePower, std::to_string(f.r) + " is not a prime power");
    if (f.n >= euler_phi(f.r)) throw Error(ErrorCode::InvalidArgument, "d needs n < phi(r)");
  }
  return f;
}

std::string Functional::to_string() const {
  std::string s;
  switch (kind) {
    case FunctionalKind::b:
      s = "b:" + std::to_string(n) + "," + std::to_string(m);
      break;
    case FunctionalKind::c:
    case FunctionalKind::d:
      s = std::string(kind == FunctionalKind::c ? "c:" : "d:") + std::to_string(n) + "," + std::to_string(m) + "," +
          std::to_string(r);
      break;
    case FunctionalKind::lambda:
      s = "lambda:" + std::to_string(m);
      break;
    case FunctionalKind::lambda_tilde:
      s = "lambdatilde:" + std::to_string(m) + "," + std::to_string(r);
      break;
  }
  if (mod_power > 0) s += "%" + std::to_string(mod_power);
  return s;
}

Int Functional::value(const BraidWord& b) const {
  switch (kind) {
    case FunctionalKind::b:
      return cached_f_infinity(b, n + m).coeff(n, m);
    case FunctionalKind::c: {
      const int D = n + m;
      const auto lambda = lambda_coeffs(cached_alexander(b), D);
      return c_table(table_from_series(cached_f_infinity(b, D), TableKind::b, 0), lambda_tilde_row(lambda, r, D), D)
          .at(n, m);
    }
    case FunctionalKind::d:
      return d_table(cached_ado(b, r), m).at(n, m);
    case FunctionalKind::lambda:
      return lambda_coeffs(cached_alexander(b), m)[m];
    case FunctionalKind::lambda_tilde:
      return lambda_tilde(lambda_coeffs(cached_alexander(b), m), r, m);
  }
  return 0;
}

Int Functional::reduce(const Int& v) const { return mod_power > 0 ? mod_r_reduce(v, r, mod_power) : v; }

Int evaluate(const Functional& f, const KnotCombination& comb) {
  Int total = 0;
  for (const auto& [b, c] : comb.terms()) total += c * f.value(b);
  return f.reduce(total);
}

Int evaluate_product(const Functional& f, const Functional& g, const KnotCombination& comb) {
  Int total = 0;
  for (const auto& [b, c] : comb.terms()) total += c * f.value(b) * g.value(b);
  const Functional* modular = nullptr;
  for (const Functional* h : {&f, &g}) {
    if (h->mod_power == 0) continue;
    if (!modular || int_pow(h->r, h->mod_power) < int_pow(modular->r, modular->mod_power)) modular = h;
  }
  return modular ? modular->reduce(total) : total;
}

std::vector<SingularBraidWord> sample_singular(const SamplerConfig& cfg, int marks) {
  if (marks < 0 || marks > cfg.max_length) throw Error(ErrorCode::InvalidArgument, "marks exceed the braid length bound");
  if (cfg.max_strands < 2) throw Error(ErrorCode::InvalidArgument, "sampler needs at least 2 strands");
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<SingularBraidWord> out;
  while (static_cast<int>(out.size()) < cfg.samples) {
    const int s = uniform(2, cfg.max_strands);
    const int len = uniform(std::max(marks, 1), cfg.max_length);
    std::vector<int> letters;
    for (int k = 0; k < len; ++k) letters.push_back(uniform(1, s - 1) * (rng() % 2 ? -1 : 1));
    BraidWord b = BraidWord::from_ints(s, letters);
    if (!b.closes_to_knot()) continue;
    std::vector<std::size_t> positions(len);
    for (int k = 0; k < len; ++k) positions[k] = k;
    for (int k = 0; k < marks; ++k) std::swap(positions[k], positions[k + uniform(0, len - 1 - k)]);
    positions.resize(marks);
    out.emplace_back(std::move(b), std::move(positions));
  }
  return out;
}

namespace {

template <class Eval>
VassilievReport run_check(std::string check, std::string name, int degree, const SamplerConfig& cfg, Eval eval) {
  VassilievReport rep;
  rep.check = std::move(check);
  rep.functional = std::move(name);
  rep.degree = degree;
  rep.marks = degree + 1;
  rep.seed = cfg.seed;
  for (const auto& sb : sample_singular(cfg, degree + 1)) {
    const KnotCombination comb = resolve_singular(sb);
    VassilievSample s;
    s.braid = sb.braid.to_string();
    s.marks = sb.marks;
    s.terms = comb.size();
    s.value = eval(comb);
    rep.pass = rep.pass && s.value == 0;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace

VassilievReport degree_vanishing_check(const Functional& f, int degree, const SamplerConfig& cfg) {
  return run_check("vassiliev", f.to_string(), degree, cfg, [&](const KnotCombination& c) { return evaluate(f, c); });
}

VassilievReport product_degree_check(const Functional& f, int deg_f, const Functional& g, int deg_g,
                                     const SamplerConfig& cfg) {
  return run_check("vassiliev-product", f.to_string() + "*" + g.to_string(), deg_f + deg_g, cfg,
                   [&](const KnotCombination& c) { return evaluate_product(f, g, c); });
}

}  // namespace qknot
