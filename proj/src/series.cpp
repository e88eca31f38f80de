#include "qknot/series.hpp"

#include <algorithm>

#include "qknot/errors.hpp"

namespace qknot {

namespace {

// Coefficients of (1 + z)^a up to z^order.
std::vector<Int> binomial_row(int a, int order) {
  std::vector<Int> row(order + 1);
  for (int i = 0; i <= order; ++i) row[i] = binomial(a, i);
  return row;
}

}  // namespace

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order + 1) * (order + 2) / 2);
}

BivariateSeries BivariateSeries::one(int order) {
  BivariateSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

BivariateSeries BivariateSeries::x(int order) {
  BivariateSeries s(order);
  if (order >= 1) s.set(1, 0, 1);
  return s;
}

BivariateSeries BivariateSeries::y(int order) {
  BivariateSeries s(order);
  if (order >= 1) s.set(0, 1, 1);
  return s;
}

BivariateSeries BivariateSeries::from_terms(int order, const std::vector<Term>& terms) {
  BivariateSeries s(order);
  for (const auto& t : terms) {
    if (t.n + t.m <= order) s.add_to(t.n, t.m, t.value);
  }
  return s;
}

BivariateSeries BivariateSeries::unit_monomial(int order, int a, int b) {
  BivariateSeries s(order);
  auto rx = binomial_row(a, order);
  auto ry = binomial_row(b, order);
  for (int n = 0; n <= order; ++n)
    for (int m = 0; n + m <= order; ++m) s.coeffs_[s.index(n, m)] = rx[n] * ry[m];
  return s;
}

void BivariateSeries::check_key(int n, int m) const {
  if (n < 0 || m < 0 || n + m > order_) {
    throw Error(ErrorCode::InvalidArgument, "coefficient (" + std::to_string(n) + "," + std::to_string(m) +
                                                ") is beyond truncation order " + std::to_string(order_));
  }
}

const Int& BivariateSeries::coeff(int n, int m) const {
  check_key(n, m);
  return coeffs_[index(n, m)];
}

void BivariateSeries::set(int n, int m, Int value) {
  check_key(n, m);
  coeffs_[index(n, m)] = std::move(value);
}

void BivariateSeries::add_to(int n, int m, const Int& value) {
  check_key(n, m);
  coeffs_[index(n, m)] += value;
}

bool BivariateSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

std::vector<BivariateSeries::Term> BivariateSeries::terms() const {
  std::vector<Term> out;
  for (int n = 0; n <= order_; ++n)
    for (int m = 0; n + m <= order_; ++m) {
      const Int& c = coeffs_[index(n, m)];
      if (c != 0) out.push_back({n, m, c});
    }
  return out;
}

bool BivariateSeries::is_univariate_in_x() const {
  for (const auto& t : terms())
    if (t.m != 0) return false;
  return true;
}

int BivariateSeries::valuation() const {
  int best = order_ + 1;
  for (const auto& t : terms()) best = std::min(best, t.n + t.m);
  return best;
}

BivariateSeries BivariateSeries::truncated(int order) const {
  const int d = std::min(order, order_);
  BivariateSeries out(d);
  for (int n = 0; n <= d; ++n)
    for (int m = 0; n + m <= d; ++m) out.coeffs_[out.index(n, m)] = coeffs_[index(n, m)];
  return out;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  if (other.order_ < order_) *this = truncated(other.order_);
  for (int n = 0; n <= order_; ++n)
    for (int m = 0; n + m <= order_; ++m) coeffs_[index(n, m)] += other.coeffs_[other.index(n, m)];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  if (other.order_ < order_) *this = truncated(other.order_);
  for (int n = 0; n <= order_; ++n)
    for (int m = 0; n + m <= order_; ++m) coeffs_[index(n, m)] -= other.coeffs_[other.index(n, m)];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Int& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int d = std::min(a.order_, b.order_);
  BivariateSeries out(d);
  for (int n1 = 0; n1 <= d; ++n1)
    for (int m1 = 0; n1 + m1 <= d; ++m1) {
      const Int& ca = a.coeffs_[a.index(n1, m1)];
      if (ca == 0) continue;
      for (int n2 = 0; n1 + m1 + n2 <= d; ++n2)
        for (int m2 = 0; n1 + m1 + n2 + m2 <= d; ++m2) {
          const Int& cb = b.coeffs_[b.index(n2, m2)];
          if (cb == 0) continue;
          Int& target = out.coeffs_[out.index(n1 + n2, m1 + m2)];
          mpz_addmul(target.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
  return out;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

void BivariateSeries::mul_one_plus_x() {
  for (int n = order_; n >= 1; --n)
    for (int m = 0; n + m <= order_; ++m) coeffs_[index(n, m)] += coeffs_[index(n - 1, m)];
}

void BivariateSeries::mul_one_plus_y() {
  for (int n = 0; n <= order_; ++n)
    for (int m = order_ - n; m >= 1; --m) coeffs_[index(n, m)] += coeffs_[index(n, m - 1)];
}

BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) { return a * b; }

BivariateSeries laurent_to_series(const LaurentPoly& p, int order) {
  BivariateSeries out(order);
  for (const auto& [e, c] : p.terms()) {
    switch (p.variable()) {
      case Variable::q:
        if (e % 2 != 0)
          throw Error(ErrorCode::OddExponent, "q^" + std::to_string(e) + " has no expansion in q^2 - 1");
      {
        auto row = binomial_row(e / 2, order);
        for (int n = 0; n <= order; ++n) out.add_to(n, 0, row[n] * c);
        break;
      }
      case Variable::t: {
        auto row = binomial_row(e, order);
        for (int m = 0; m <= order; ++m) out.add_to(0, m, row[m] * c);
        break;
      }
      case Variable::qa: {
        if (e % 2 != 0)
          throw Error(ErrorCode::OddExponent,
                      "q^(" + std::to_string(e) + " alpha) has no expansion in q^(2 alpha) - 1");
        auto row = binomial_row(e / 2, order);
        for (int m = 0; m <= order; ++m) out.add_to(0, m, row[m] * c);
        break;
      }
    }
  }
  return out;
}

BivariateSeries laurent_to_series(const LaurentPoly2& p, int order) {
  BivariateSeries out(order);
  for (const auto& [e, c] : p.terms()) {
    if (e.first % 2 != 0)
      throw Error(ErrorCode::OddExponent, "q^" + std::to_string(e.first) + " has no expansion in q^2 - 1");
    if (e.second % 2 != 0)
      throw Error(ErrorCode::OddAlphaExponent,
                  "q^(" + std::to_string(e.second) + " alpha) has no expansion in q^(2 alpha) - 1");
    BivariateSeries term = BivariateSeries::unit_monomial(order, e.first / 2, e.second / 2);
    term *= c;
    out += term;
  }
  return out;
}

BivariateSeries substitute_color(const BivariateSeries& s, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "color must be nonnegative");
  const int d = s.order();
  // powers of Y = (1+x)^N - 1 as univariate series in x
  BivariateSeries Y = BivariateSeries::unit_monomial(d, N, 0) - BivariateSeries::one(d);
  BivariateSeries out(d);
  BivariateSeries Ypow = BivariateSeries::one(d);
  for (int m = 0; m <= d; ++m) {
    for (int n = 0; n + m <= d; ++n) {
      const Int& c = s.coeff(n, m);
      if (c == 0) continue;
      // c x^n Y^m
      for (int k = 0; n + k <= d; ++k) {
        const Int& yk = Ypow.coeff(k, 0);
        if (yk != 0) out.add_to(n + k, 0, c * yk);
      }
    }
    Ypow = Ypow * Y;
  }
  return out;
}

}  // namespace qknot
