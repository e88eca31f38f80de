#include "qknot/oracles.hpp"

#include <cstdlib>
#include <mutex>

#include "qknot/detail/state_sum.hpp"
#include "qknot/errors.hpp"
#include "qknot/series.hpp"
#include "qknot/universal.hpp"

namespace qknot {

// ---------------------------------------------------------------------------
// Colored Jones on V_N with basis e_0..e_N:
//   K e_i = q^{N-2i} e_i,  E e_i = [N-i+1] e_{i-1},  F e_i = [i+1] e_{i+1}.
// All polynomials below are in q^{1/2}: exponent k stands for q^{k/2}.

namespace {

LaurentPoly halves_monomial(int half_exp, Int c = 1) { return LaurentPoly::monomial(Variable::q, half_exp, std::move(c)); }

LaurentPoly qint(int k) {
  LaurentPoly p(Variable::q);
  for (int i = 0; i < k; ++i) p.add_term(2 * (k - 1 - 2 * i), 1);
  return p;
}

LaurentPoly qfactorial_ratio(int hi, int lo) {  // [hi]!/[lo]!
  LaurentPoly p = LaurentPoly::constant(Variable::q, 1);
  for (int k = lo + 1; k <= hi; ++k) p *= qint(k);
  return p;
}

LaurentPoly qbinom_halves(int n, int k) {
  auto quotient = qfactorial_ratio(n, n - k).divide_exact(qfactorial_ratio(k, 0));
  if (!quotient) throw Error(ErrorCode::DivisionFailed, "quantum binomial is not a polynomial");
  return *quotient;
}

LaurentPoly q_minus_qinv_pow(int n) {
  LaurentPoly base = halves_monomial(2) - halves_monomial(-2);
  LaurentPoly p = LaurentPoly::constant(Variable::q, 1);
  for (int k = 0; k < n; ++k) p *= base;
  return p;
}

struct KmTerm {
  int left;
  int right;
  LaurentPoly coeff;
};

std::vector<KmTerm> km_crossing(int N, int a, int b, int sign) {
  std::vector<KmTerm> out;
  if (sign > 0) {
    for (int n = 0; n <= a && b + n <= N; ++n) {
      const int a2 = a - n;
      const int b2 = b + n;
      LaurentPoly c = halves_monomial(n * (n - 1) + (N - 2 * a2) * (N - 2 * b2));
      c *= q_minus_qinv_pow(n);
      c *= qbinom_halves(N - a + n, n);
      c *= qfactorial_ratio(b + n, b);
      out.push_back({b2, a2, std::move(c)});
    }
  } else {
    for (int n = 0; n <= b && a + n <= N; ++n) {
      LaurentPoly c = halves_monomial(-n * (n - 1) - (N - 2 * b) * (N - 2 * a), n % 2 ? -1 : 1);
      c *= q_minus_qinv_pow(n);
      c *= qbinom_halves(N - b + n, n);
      c *= qfactorial_ratio(a + n, a);
      out.push_back({b - n, a + n, std::move(c)});
    }
  }
  return out;
}

// Scalar by which the braid, with positions 2..s traced against K, acts on e_0.
LaurentPoly km_partial_trace(const BraidWord& b, int N) {
  const int s = b.strands();
  // key: initial indices on positions 2..s, followed by current indices on 1..s
  using Key = std::vector<int>;
  std::map<Key, LaurentPoly> states;
  const int tail = s - 1;
  std::vector<int> idx(tail, 0);
  while (true) {
    Key k(tail + s, 0);
    for (int p = 0; p < tail; ++p) {
      k[p] = idx[p];
      k[tail + 1 + p] = idx[p];
    }
    states.emplace(k, LaurentPoly::constant(Variable::q, 1));
    int p = 0;
    while (p < tail && ++idx[p] > N) idx[p++] = 0;
    if (p == tail) break;
  }
  std::map<std::tuple<int, int, int>, std::vector<KmTerm>> cache;
  for (const auto& letter : b.letters()) {
    const int pos = tail + letter.generator - 1;
    std::map<Key, LaurentPoly> next;
    for (const auto& [key, amp] : states) {
      auto ck = std::make_tuple(key[pos], key[pos + 1], letter.sign);
      auto it = cache.find(ck);
      if (it == cache.end()) it = cache.emplace(ck, km_crossing(N, key[pos], key[pos + 1], letter.sign)).first;
      for (const auto& t : it->second) {
        Key k = key;
        k[pos] = t.left;
        k[pos + 1] = t.right;
        auto [slot, inserted] = next.try_emplace(std::move(k), Variable::q);
        slot->second += amp * t.coeff;
      }
    }
    states.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) states.emplace(k, std::move(v));
  }
  LaurentPoly total(Variable::q);
  for (const auto& [key, amp] : states) {
    if (key[tail] != 0) continue;
    bool closed = true;
    int pivot = 0;
    for (int p = 0; p < tail; ++p) {
      if (key[p] != key[tail + 1 + p]) closed = false;
      pivot += 2 * (N - 2 * key[p]);
    }
    if (closed) total += amp * halves_monomial(pivot);
  }
  return total;
}

LaurentPoly halves_to_q(const LaurentPoly& p) {
  LaurentPoly out(Variable::q);
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw Error(ErrorCode::OddExponent, "half-integer power of q in " + p.to_string());
    out.add_term(e / 2, c);
  }
  return out;
}

}  // namespace

LaurentPoly colored_jones_halves(const BraidWord& b, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "color must be >= 0");
  static std::mutex mu;
  static std::map<int, LaurentPoly> kink;
  LaurentPoly kappa(Variable::q);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = kink.find(N);
    if (it == kink.end()) it = kink.emplace(N, km_partial_trace(BraidWord::from_ints(2, {1}), N)).first;
    kappa = it->second;
  }
  if (kappa.terms().size() != 1) throw Error(ErrorCode::DivisionFailed, "kink factor is not a monomial");
  const auto& [ke, kc] = *kappa.terms().begin();
  if (kc != 1 && kc != -1) throw Error(ErrorCode::NotAUnit, "kink factor is not a unit");
  LaurentPoly raw = km_partial_trace(b, N);
  const int w = b.writhe();
  LaurentPoly out = raw.shift(-w * ke);
  if (kc == -1 && w % 2 != 0) out = -out;
  return out;
}

LaurentPoly colored_jones(const BraidWord& b, int N) {
  if (!b.closes_to_knot()) throw Error(ErrorCode::NotAKnot, "closure of '" + b.to_string() + "' is a link");
  LaurentPoly j = halves_to_q(colored_jones_halves(b, N));
  for (const auto& [e, c] : j.terms())
    if (e % 2 != 0) throw Error(ErrorCode::OddExponent, "odd power of q in J_N: " + j.to_string());
  return j;
}

// ---------------------------------------------------------------------------
// Alexander polynomial from the reduced Burau representation.

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

LaurentPoly tpoly(int e, Int c = 1) { return LaurentPoly::monomial(Variable::t, e, std::move(c)); }

Matrix identity(int k) {
  Matrix m(k, std::vector<LaurentPoly>(k, LaurentPoly(Variable::t)));
  for (int i = 0; i < k; ++i) m[i][i] = tpoly(0);
  return m;
}

// Reduced Burau image of sigma_i^{+1}, (s-1) x (s-1).
Matrix burau_generator(int s, int i) {
  const int k = s - 1;
  Matrix m = identity(k);
  const int c = i - 1;  // 0-based diagonal position of the -t entry
  m[c][c] = tpoly(1, -1);
  if (c - 1 >= 0) m[c - 1][c] = tpoly(1);
  if (c + 1 < k) m[c + 1][c] = tpoly(0);
  return m;
}

Matrix burau_generator_inverse(int s, int i) {
  const int k = s - 1;
  Matrix m = identity(k);
  const int c = i - 1;
  m[c][c] = tpoly(-1, -1);
  if (c - 1 >= 0) m[c - 1][c] = tpoly(0);
  if (c + 1 < k) m[c + 1][c] = tpoly(-1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t k = a.size();
  Matrix out(k, std::vector<LaurentPoly>(k, LaurentPoly(Variable::t)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

// Fraction-free Bareiss elimination; every division is exact in Z[t^{+-1}].
LaurentPoly determinant(Matrix m) {
  const std::size_t k = m.size();
  if (k == 0) return tpoly(0);
  LaurentPoly prev = tpoly(0);
  int sign = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p].is_zero()) {
      std::size_t swap = p + 1;
      while (swap < k && m[swap][p].is_zero()) ++swap;
      if (swap == k) return LaurentPoly(Variable::t);
      std::swap(m[p], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j) {
        auto q = (m[i][j] * m[p][p] - m[i][p] * m[p][j]).divide_exact(prev);
        if (!q) throw Error(ErrorCode::DivisionFailed, "Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
    prev = m[p][p];
  }
  LaurentPoly d = m[k - 1][k - 1];
  return sign > 0 ? d : -d;
}

}  // namespace

LaurentPoly alexander_halves(const BraidWord& b) {
  const int s = b.strands();
  const int k = s - 1;
  Matrix rho = identity(k);
  for (const auto& l : b.letters())
    rho = multiply(rho, l.sign > 0 ? burau_generator(s, l.generator) : burau_generator_inverse(s, l.generator));
  Matrix diff = identity(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) diff[i][j] -= rho[i][j];
  LaurentPoly det = determinant(std::move(diff));
  LaurentPoly geometric(Variable::t);
  for (int i = 0; i < s; ++i) geometric.add_term(i, 1);
  auto quotient = det.divide_exact(geometric);
  if (!quotient) throw Error(ErrorCode::DivisionFailed, "det(I - Burau) not divisible by 1 + t + ... + t^{s-1}");
  const int e = b.writhe();
  // (-1)^{e+s+1} t^{-(e-s+1)/2} det(I - rho) / (1 + ... + t^{s-1}), written in t^{1/2}
  LaurentPoly out = quotient->scale_exponents(2).retag(Variable::qa).shift(-(e - s + 1));
  if ((std::abs(e + s + 1)) % 2 == 1) out = -out;
  return out;
}

LaurentPoly alexander(const BraidWord& b) {
  if (!b.closes_to_knot()) throw Error(ErrorCode::NotAKnot, "closure of '" + b.to_string() + "' is a link");
  LaurentPoly h = alexander_halves(b);
  LaurentPoly out(Variable::t);
  for (const auto& [e, c] : h.terms()) {
    if (e % 2 != 0) throw Error(ErrorCode::OddExponent, "half-integer power of t in " + h.to_string());
    out.add_term(e / 2, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ADO_r: the Verma weights evaluated at q = zeta_{2r}, indices restricted to 0..r-1.

CyclotomicInt AdoPolynomial::coeff(int exponent) const {
  auto it = terms.find(exponent);
  return it == terms.end() ? CyclotomicInt(r) : it->second;
}

namespace {

using APoly = std::map<int, CyclotomicInt>;  // A-exponent -> coefficient in Z[zeta_{2r}]

class AdoPolicy {
 public:
  using Amp = APoly;
  using Weight = APoly;
  struct Out {
    int left;
    int right;
    const Weight& weight;
  };

  explicit AdoPolicy(int r) : r_(r), conductor_(2 * r) {}

  Amp zero() const { return {}; }
  Amp unit() const { return {{0, CyclotomicInt::from_int(conductor_, 1)}}; }
  int max_index() const { return r_ - 1; }

  void crossing(int i, int j, int sign, std::vector<Out>& out) {
    auto key = std::make_tuple(i, j, sign);
    auto it = crossings_.find(key);
    if (it == crossings_.end()) {
      Terms terms;
      for (const auto& t : crossing_weights(i, j, sign, r_)) {
        APoly w = evaluate(t.coeff);
        if (t.left >= r_ || t.right >= r_) {
          if (!w.empty())
            throw Error(ErrorCode::InvalidArgument, "span of v_0..v_{r-1} is not preserved at q = zeta_2r");
          continue;
        }
        if (!w.empty()) terms.emplace_back(t.left, t.right, std::move(w));
      }
      it = crossings_.emplace(key, std::move(terms)).first;
    }
    for (const auto& [l, rr, w] : it->second) out.push_back({l, rr, w});
  }
  // Pivot K^{1-r} = A^{-r} K on this module; with K alone the result depends on the braid presentation.
  const Weight& cap(int i, Turn turn) {
    return cached(caps_, i, turn, turn == Turn::LeftUp ? LaurentPoly2::monomial(-2 * i * (1 - r_), 1 - r_) : LaurentPoly2::one());
  }
  const Weight& cup(int i, Turn turn) {
    return cached(cups_, i, turn, turn == Turn::LeftUp ? LaurentPoly2::one() : LaurentPoly2::monomial(2 * i * (1 - r_), r_ - 1));
  }

  void accumulate(Amp& target, const Amp& amp, const Weight& w) const {
    for (const auto& [ea, ca] : amp)
      for (const auto& [ew, cw] : w) {
        auto [it, inserted] = target.try_emplace(ea + ew, conductor_);
        it->second += ca * cw;
      }
  }
  bool is_zero(Amp& a) const {
    for (auto it = a.begin(); it != a.end();) {
      if (it->second.is_zero()) {
        it = a.erase(it);
      } else {
        ++it;
      }
    }
    return a.empty();
  }

 private:
  using Terms = std::vector<std::tuple<int, int, Weight>>;

  APoly evaluate(const LaurentPoly2& p) const {
    APoly out;
    for (const auto& [e, c] : p.terms()) {
      auto [it, inserted] = out.try_emplace(e.second, conductor_);
      it->second += CyclotomicInt::zeta_power(conductor_, e.first) * c;
    }
    for (auto it = out.begin(); it != out.end();) {
      if (it->second.is_zero()) {
        it = out.erase(it);
      } else {
        ++it;
      }
    }
    return out;
  }

  const Weight& cached(std::map<std::pair<int, Turn>, Weight>& cache, int i, Turn turn, const LaurentPoly2& w) {
    auto key = std::make_pair(i, turn);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, evaluate(w)).first;
    return it->second;
  }

  int r_;
  int conductor_;
  std::map<std::tuple<int, int, int>, Terms> crossings_;
  std::map<std::pair<int, Turn>, Weight> caps_;
  std::map<std::pair<int, Turn>, Weight> cups_;
};

}  // namespace

AdoPolynomial ado(const BraidWord& b, int r) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "ADO needs r >= 2");
  LongKnotDiagram d = normalize_writhe(closure_to_long(b));
  AdoPolicy policy(r);
  APoly amp = detail::run_state_sum(d, policy);
  AdoPolynomial out;
  out.r = r;
  for (const auto& [e, c] : amp) {
    if (c.is_zero()) continue;
    if (e % 2 != 0) throw Error(ErrorCode::OddAlphaExponent, "odd power of q^alpha in ADO_" + std::to_string(r));
    out.terms.emplace(e / 2, halve_conductor(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Int> lambda_coeffs(const LaurentPoly& alexander_t, int M) {
  if (alexander_t.variable() != Variable::t) throw Error(ErrorCode::InvalidArgument, "expected a polynomial in t");
  BivariateSeries s = laurent_to_series(alexander_t, M);
  std::vector<Int> out;
  for (int m = 0; m <= M; ++m) out.push_back(s.coeff(0, m));
  return out;
}

Int binomial_lemma_sum(int r, int m, int j) {
  Int total = 0;
  for (int k = 0; k <= m; ++k) {
    Int term = binomial(m, k) * binomial(static_cast<long>(r) * k, j);
    if ((m - k) % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

bool binomial_lemma_check(int r, int m, int j) {
  if (!(m > j && j >= 0)) throw Error(ErrorCode::InvalidArgument, "binomial lemma needs m > j >= 0");
  return binomial_lemma_sum(r, m, j) == 0;
}

Int lambda_tilde(const std::vector<Int>& lambda, int r, int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative index");
  if (static_cast<int>(lambda.size()) <= j)
    throw Error(ErrorCode::InvalidArgument, "lambda table too short for lambda_tilde_" + std::to_string(j));
  Int total = 0;
  for (int m = 0; m <= j; ++m) total += lambda[m] * binomial_lemma_sum(r, m, j);
  return total;
}

std::vector<Int> lambda_tilde_row(const std::vector<Int>& lambda, int r, int J) {
  std::vector<Int> row;
  for (int j = 0; j <= J; ++j) row.push_back(lambda_tilde(lambda, r, j));
  return row;
}

AlexanderExpansion alexander_expansion(const LaurentPoly& alexander_t, int M, const std::vector<int>& rs) {
  AlexanderExpansion out;
  out.lambda = lambda_coeffs(alexander_t, M);
  for (int r : rs) out.lambda_tilde[r] = lambda_tilde_row(out.lambda, r, M);
  return out;
}

}  // namespace qknot
