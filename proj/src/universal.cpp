#include "qknot/universal.hpp"

#include <array>
#include <map>
#include <mutex>
#include <tuple>

#include "qknot/detail/state_sum.hpp"
#include "qknot/errors.hpp"

namespace qknot {

std::vector<CrossingTerm> crossing_weights(int i, int j, int sign, int D) {
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative Verma index");
  std::vector<CrossingTerm> out;
  if (sign > 0) {
    // E^n on the left input, F^{(n)} on the right input, then q^{HH/2} and the flip.
    for (int n = 0; n <= std::min(i, D); ++n) {
      LaurentPoly2 c = LaurentPoly2::monomial(n * (n - 1) / 2 + 2 * (i - n) * (j + n), -(i + j));
      c *= quantum_binomial(n + j, j);
      c *= alpha_falling(j, n);
      out.push_back({j + n, i - n, n, std::move(c)});
    }
  } else {
    // flip, q^{-HH/2}, then E^n on the (new) left and F^{(n)} on the right.
    for (int n = 0; n <= std::min(j, D); ++n) {
      LaurentPoly2 c = LaurentPoly2::monomial(-2 * i * j - n * (n - 1) / 2, i + j, n % 2 ? -1 : 1);
      c *= quantum_binomial(n + i, i);
      c *= alpha_falling(i, n);
      out.push_back({j - n, i + n, n, std::move(c)});
    }
  }
  return out;
}

LaurentPoly2 cap_weight(int i, Turn turn) {
  return turn == Turn::LeftUp ? LaurentPoly2::monomial(-2 * i, 1) : LaurentPoly2::one();
}

LaurentPoly2 cup_weight(int i, Turn turn) {
  return turn == Turn::LeftUp ? LaurentPoly2::one() : LaurentPoly2::monomial(2 * i, -1);
}

namespace {

// q^{pq} A^{pa} s(x, y), with pq, pa in {0, 1}; a monomial q^a A^b becomes
// q^{a mod 2} A^{b mod 2} (1+x)^{floor(a/2)} (1+y)^{floor(b/2)}.
struct ParitySeries {
  int pq = 0;
  int pa = 0;
  BivariateSeries s;
};

int parity(int e) { return ((e % 2) + 2) % 2; }

ParitySeries to_parity_series(const LaurentPoly2& p, int D) {
  ParitySeries out{0, 0, BivariateSeries(D)};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const int pq = parity(e.first);
    const int pa = parity(e.second);
    if (first) {
      out.pq = pq;
      out.pa = pa;
      first = false;
    } else if (pq != out.pq || pa != out.pa) {
      throw Error(ErrorCode::OddExponent, "weight mixes exponent parities: " + p.to_string());
    }
    BivariateSeries term = BivariateSeries::unit_monomial(D, (e.first - pq) / 2, (e.second - pa) / 2);
    term *= c;
    out.s += term;
  }
  return out;
}

class VermaPolicy {
 public:
  // Amplitude split by (q parity, A parity): index 2*pq + pa.
  using Amp = std::array<BivariateSeries, 4>;
  using Weight = ParitySeries;
  struct Out {
    int left;
    int right;
    const Weight& weight;
  };

  explicit VermaPolicy(int D) : D_(D) {}

  Amp zero() const { return {BivariateSeries(D_), BivariateSeries(D_), BivariateSeries(D_), BivariateSeries(D_)}; }
  Amp unit() const {
    Amp a = zero();
    a[0] = BivariateSeries::one(D_);
    return a;
  }
  int max_index() const { return D_; }

  void crossing(int i, int j, int sign, std::vector<Out>& out) {
    const auto& terms = crossing_cached(i, j, sign);
    for (const auto& [l, r, w] : terms) out.push_back({l, r, w});
  }
  const Weight& cap(int i, Turn turn) { return pivot_cached(cap_cache_, i, turn, cap_weight(i, turn)); }
  const Weight& cup(int i, Turn turn) { return pivot_cached(cup_cache_, i, turn, cup_weight(i, turn)); }

  void accumulate(Amp& target, const Amp& amp, const Weight& w) const {
    for (int p = 0; p < 4; ++p) {
      if (amp[p].is_zero()) continue;
      const int pq = p >> 1;
      const int pa = p & 1;
      BivariateSeries prod = amp[p] * w.s;
      if (pq && w.pq) prod.mul_one_plus_x();
      if (pa && w.pa) prod.mul_one_plus_y();
      target[((pq ^ w.pq) << 1) | (pa ^ w.pa)] += prod;
    }
  }
  bool is_zero(const Amp& a) const {
    for (const auto& s : a)
      if (!s.is_zero()) return false;
    return true;
  }

 private:
  using Terms = std::vector<std::tuple<int, int, Weight>>;

  const Terms& crossing_cached(int i, int j, int sign) {
    auto key = std::make_tuple(i, j, sign);
    auto it = crossing_cache_.find(key);
    if (it != crossing_cache_.end()) return it->second;
    Terms terms;
    for (auto& t : crossing_weights(i, j, sign, D_)) {
      // indices above D only occur in terms of order > D
      if (t.left > D_ || t.right > D_) continue;
      ParitySeries w = to_parity_series(t.coeff, D_);
      if (!w.s.is_zero()) terms.emplace_back(t.left, t.right, std::move(w));
    }
    return crossing_cache_.emplace(key, std::move(terms)).first->second;
  }

  const Weight& pivot_cached(std::map<std::pair<int, Turn>, Weight>& cache, int i, Turn turn,
                             const LaurentPoly2& w) {
    auto key = std::make_pair(i, turn);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, to_parity_series(w, D_)).first->second;
  }

  int D_;
  std::map<std::tuple<int, int, int>, Terms> crossing_cache_;
  std::map<std::pair<int, Turn>, Weight> cap_cache_;
  std::map<std::pair<int, Turn>, Weight> cup_cache_;
};

}  // namespace

BivariateSeries compute_F_infinity(const LongKnotDiagram& d, const TruncationPolicy& policy) {
  if (policy.D < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be >= 0");
  VermaPolicy verma(policy.D);
  auto amp = detail::run_state_sum(d, verma);
  if (!amp[1].is_zero() || !amp[3].is_zero())
    throw Error(ErrorCode::OddAlphaExponent, "odd power of q^alpha survives the state sum");
  if (!amp[2].is_zero()) throw Error(ErrorCode::OddExponent, "odd power of q survives the state sum");
  return amp[0];
}

BivariateSeries compute_F_infinity(const LongKnotDiagram& d, int D) { return compute_F_infinity(d, TruncationPolicy{D}); }

BivariateSeries f_infinity(const BraidWord& knot, int D) {
  return compute_F_infinity(normalize_writhe(closure_to_long(knot)), D);
}

CoefficientTable table_from_series(const BivariateSeries& s, TableKind kind, int r) {
  CoefficientTable t;
  t.kind = kind;
  t.r = r;
  t.order = s.order();
  for (const auto& term : s.terms()) t.set({term.n, term.m}, term.value);
  return t;
}

CoefficientTable b_table(const BraidWord& knot, int D) { return table_from_series(f_infinity(knot, D), TableKind::b, 0); }

}  // namespace qknot
