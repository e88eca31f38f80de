#include "qknot/laurent.hpp"

#include <sstream>

#include "qknot/errors.hpp"

namespace qknot {

const char* variable_name(Variable v) {
  switch (v) {
    case Variable::q: return "q";
    case Variable::t: return "t";
    case Variable::qa: return "q^alpha";
  }
  return "?";
}

LaurentPoly LaurentPoly::monomial(Variable var, int exponent, Int coeff) {
  LaurentPoly p(var);
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::constant(Variable var, Int coeff) { return monomial(var, 0, std::move(coeff)); }

Int LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_variable(const LaurentPoly& other) const {
  if (var_ != other.var_) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("variable mismatch: ") + variable_name(var_) + " vs " + variable_name(other.var_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_same_variable(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_same_variable(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  check_same_variable(other);
  LaurentPoly out(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::scale_exponents(int k) const {
  if (k == 0) return constant(var_, value_at_one());
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.add_term(e * k, c);
  return out;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::retag(Variable var) const {
  LaurentPoly out(var);
  out.terms_ = terms_;
  return out;
}

Int LaurentPoly::value_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& other) const {
  check_same_variable(other);
  if (other.is_zero()) throw Error(ErrorCode::DivisionFailed, "division by zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot(var_);
  const int lead_exp = other.max_exponent();
  const Int& lead = other.terms_.rbegin()->second;
  const int span = lead_exp - other.min_exponent();
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < span) return std::nullopt;
    const int e = rem.max_exponent();
    const Int& c = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Int qc = c / lead;
    quot.add_term(e - lead_exp, qc);
    for (const auto& [oe, oc] : other.terms_) rem.add_term(oe + e - lead_exp, -qc * oc);
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* v = variable_name(var_);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << v;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly2 LaurentPoly2::monomial(int q_exp, int a_exp, Int coeff) {
  LaurentPoly2 p;
  p.add_term(q_exp, a_exp, coeff);
  return p;
}

void LaurentPoly2::add_term(int q_exp, int a_exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, a_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& other) {
  LaurentPoly2 out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly2::specialize_alpha(int N) const {
  LaurentPoly out(Variable::q);
  for (const auto& [e, c] : terms_) out.add_term(e.first + N * e.second, c);
  return out;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*q^" << e.first << "*A^" << e.second;
  }
  return os.str();
}

LaurentPoly2 quantum_brace(int k) {
  LaurentPoly2 p = LaurentPoly2::monomial(k, 0);
  p.add_term(-k, 0, -1);
  return p;
}

LaurentPoly2 quantum_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return LaurentPoly2::one();
  // Pascal rule for the symmetric normalization:
  // [n, k] = q^{-k} [n-1, k] + q^{n-k} [n-1, k-1].
  std::map<std::pair<int, int>, LaurentPoly2> memo;
  auto rec = [&](auto&& self, int nn, int kk) -> LaurentPoly2 {
    if (kk < 0 || kk > nn) return {};
    if (kk == 0 || kk == nn) return LaurentPoly2::one();
    auto it = memo.find({nn, kk});
    if (it != memo.end()) return it->second;
    LaurentPoly2 out = LaurentPoly2::monomial(-kk, 0) * self(self, nn - 1, kk);
    out += LaurentPoly2::monomial(nn - kk, 0) * self(self, nn - 1, kk - 1);
    memo.emplace(std::make_pair(nn, kk), out);
    return out;
  };
  return rec(rec, n, k);
}

LaurentPoly2 alpha_falling(int i, int n) {
  LaurentPoly2 out = LaurentPoly2::one();
  for (int k = 0; k < n; ++k) {
    LaurentPoly2 factor = LaurentPoly2::monomial(-(i + k), 1);
    factor.add_term(i + k, -1, -1);
    out *= factor;
  }
  return out;
}

}  // namespace qknot
