#include "qknot/coefficients.hpp"

#include <map>
#include <mutex>

#include "qknot/errors.hpp"
#include "qknot/universal.hpp"

namespace qknot {

KnotInput named_knot(const std::string& name) { return {name, knot_table(name)}; }

KnotInput braid_knot(const std::string& text, int strands) {
  BraidWord b = BraidWord::parse(text, strands);
  return {b.to_string(), b};
}

namespace {

std::mutex cache_mutex;
std::map<BraidWord, BivariateSeries> f_cache;
std::map<std::pair<BraidWord, int>, AdoPolynomial> ado_cache;
std::map<BraidWord, LaurentPoly> alexander_cache;

}  // namespace

BivariateSeries cached_f_infinity(const BraidWord& b, int D) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = f_cache.find(b);
    if (it != f_cache.end() && it->second.order() >= D) return it->second.truncated(D);
  }
  BivariateSeries s = f_infinity(b, D);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = f_cache.try_emplace(b, s);
  if (!inserted && it->second.order() < D) it->second = s;
  return s;
}

AdoPolynomial cached_ado(const BraidWord& b, int r) {
  const auto key = std::make_pair(b, r);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = ado_cache.find(key);
    if (it != ado_cache.end()) return it->second;
  }
  AdoPolynomial a = ado(b, r);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return ado_cache.try_emplace(key, std::move(a)).first->second;
}

LaurentPoly cached_alexander(const BraidWord& b) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = alexander_cache.find(b);
    if (it != alexander_cache.end()) return it->second;
  }
  LaurentPoly a = alexander(b);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return alexander_cache.try_emplace(b, std::move(a)).first->second;
}

CoefficientTable c_table(const CoefficientTable& b, const std::vector<Int>& lambda_tilde, int D) {
  if (b.kind != TableKind::b) throw Error(ErrorCode::InvalidArgument, "c_table expects a b table");
  if (D > b.order) throw Error(ErrorCode::InvalidArgument, "b table truncated below the requested order");
  if (static_cast<int>(lambda_tilde.size()) <= D)
    throw Error(ErrorCode::InvalidArgument, "lambda_tilde row shorter than D + 1");
  CoefficientTable c;
  c.kind = TableKind::c;
  c.order = D;
  c.r = b.r;
  for (int n = 0; n <= D; ++n)
    for (int m = 0; n + m <= D; ++m) {
      Int sum = 0;
      for (int k = 0; k <= m; ++k) sum += lambda_tilde[k] * b.at(n, m - k);
      c.set({n, m}, sum);
    }
  return c;
}

CycloSeries ado_series(const AdoPolynomial& a, int M) {
  CycloSeries out(a.r, M);
  std::vector<CyclotomicInt> coeffs(M + 1, CyclotomicInt(a.r));
  for (const auto& [e, c] : a.terms)
    for (int m = 0; m <= M; ++m) coeffs[m] += c * binomial(e, m);
  for (int m = 0; m <= M; ++m) out.set(m, std::move(coeffs[m]), kExactPrecision);
  return out;
}

CoefficientTable d_table(const AdoPolynomial& a, int M) {
  if (!as_prime_power(a.r)) throw Error(ErrorCode::NotPrimePower, std::to_string(a.r) + " is not a prime power");
  CycloSeries s = ado_series(a, M);
  CoefficientTable d;
  d.kind = TableKind::d;
  d.r = a.r;
  d.order = M;
  for (int m = 0; m <= M; ++m) {
    const auto offset = zeta_power_to_offset_basis(s.coeff(m));
    for (std::size_t n = 0; n < offset.size(); ++n) d.set({static_cast<int>(n), m}, offset[n]);
  }
  return d;
}

CyclotomicInt d_reconstruct(const CoefficientTable& d, int m) {
  const long phi = euler_phi(d.r);
  std::vector<Int> offset;
  for (int n = 0; n < phi; ++n) offset.push_back(d.at(n, m));
  return offset_basis_to_zeta_power(d.r, offset);
}

CoefficientTable cl_digits(const CoefficientTable& c, int r, int J) {
  if (J < 0) throw Error(ErrorCode::InvalidArgument, "J must be >= 0");
  const ZetaIdealWitness w = check_zeta_ideal(r);
  const int phi = static_cast<int>(w.phi);
  const Int p = w.prime;
  const int needed = (J + 1) * phi;
  const CyclotomicInt pi = CyclotomicInt::zeta_power(r, 1) - CyclotomicInt::from_int(r, 1);
  const CyclotomicInt pu = w.unit * p;

  CoefficientTable cl;
  cl.kind = TableKind::CL;
  cl.r = r;
  cl.levels = J;
  cl.order = c.order - needed + 1;
  if (cl.order < 0) throw Error(ErrorCode::InvalidArgument, "c table too short for the requested level");
  for (int m = 0; m <= cl.order; ++m) {
    // (zeta - 1)^{j phi + i} = (p u)^j (zeta - 1)^i
    CyclotomicInt z(r);
    CyclotomicInt level_factor = CyclotomicInt::from_int(r, 1);
    for (int j = 0; j <= J; ++j) {
      CyclotomicInt block(r);
      for (int i = phi - 1; i >= 0; --i) {
        block *= pi;
        block += CyclotomicInt::from_int(r, c.at(j * phi + i, m));
      }
      z += level_factor * block;
      level_factor *= pu;
    }
    for (int j = 0; j <= J; ++j) {
      auto offset = zeta_power_to_offset_basis(z);
      if (j == J) {
        for (int i = 0; i < phi; ++i) cl.set({j, i, m}, offset[i]);
        break;
      }
      std::vector<Int> digits(phi);
      for (int i = 0; i < phi; ++i) {
        digits[i] = floor_mod(offset[i], p);
        cl.set({j, i, m}, digits[i]);
        offset[i] -= digits[i];
        mpz_divexact(offset[i].get_mpz_t(), offset[i].get_mpz_t(), p.get_mpz_t());
      }
      z = offset_basis_to_zeta_power(r, offset);
    }
  }
  return cl;
}

CyclotomicInt cl_reconstruct(const CoefficientTable& cl, int m) {
  const auto pp = as_prime_power(cl.r);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(cl.r));
  const long phi = euler_phi(cl.r);
  CyclotomicInt out(cl.r);
  for (int j = cl.levels; j >= 0; --j) {
    out *= Int(pp->prime);
    std::vector<Int> offset;
    for (int i = 0; i < phi; ++i) offset.push_back(cl.at(j, i, m));
    out += offset_basis_to_zeta_power(cl.r, offset);
  }
  return out;
}

namespace {

CycloSeries unified_side(const BraidWord& b, int r, int D) {
  const LaurentPoly a_r = cached_alexander(b).scale_exponents(r);
  return eval_root(series_mul(laurent_to_series(a_r, D), cached_f_infinity(b, D)), r);
}

bool divisible_by(const CyclotomicInt& z, long r) {
  const Int rr = r;
  for (const auto& c : z.coords())
    if (!mpz_divisible_p(c.get_mpz_t(), rr.get_mpz_t())) return false;
  return true;
}

}  // namespace

CheckReport check_unified_vs_ado(const KnotInput& knot, int r, int D, int M) {
  if (!as_prime_power(r)) throw Error(ErrorCode::NotPrimePower, std::to_string(r) + " is not a prime power");
  if (M > D || M < 0) throw Error(ErrorCode::InvalidArgument, "need 0 <= M <= D");
  CheckReport rep{"factorization", knot.label, r, true, {}};
  const CycloSeries right = unified_side(knot.braid, r, D);
  const CoefficientTable d = d_table(cached_ado(knot.braid, r), M);
  for (int m = 0; m <= M; ++m) {
    CheckEntry e;
    e.m = m;
    e.precision = right.precision(m);
    const CyclotomicInt diff = d_reconstruct(d, m) - right.coeff(m);
    if (!diff.is_zero()) {
      const int v = zeta_minus_one_valuation(diff);
      e.margin = v - e.precision;
      e.pass = v >= e.precision;
      if (!e.pass) e.detail = "difference has (zeta-1)-valuation " + std::to_string(v);
    }
    rep.pass = rep.pass && e.pass;
    rep.per_m.push_back(std::move(e));
  }
  return rep;
}

CheckReport mod_r_congruence_check(const KnotInput& knot, int r, int D) {
  if (!as_prime_power(r)) throw Error(ErrorCode::NotPrimePower, std::to_string(r) + " is not a prime power");
  CheckReport rep{"congruence", knot.label, r, true, {}};
  const int phi = static_cast<int>(euler_phi(r));
  const int M = std::min(r - 1, D);
  const BivariateSeries b = cached_f_infinity(knot.braid, D);
  const CoefficientTable d = d_table(cached_ado(knot.braid, r), M);
  const Int rr = r;
  for (int m = 0; m <= M; ++m) {
    CheckEntry e;
    e.m = m;
    const int top = std::min(phi - 1, D - m);
    e.precision = top + 1;
    for (int n = 0; n <= top; ++n) {
      if (floor_mod(d.at(n, m) - b.coeff(n, m), rr) != 0) {
        e.pass = false;
        e.detail += (e.detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + ": d=" +
                    to_decimal(d.at(n, m)) + " b=" + to_decimal(b.coeff(n, m));
      }
    }
    rep.pass = rep.pass && e.pass;
    rep.per_m.push_back(std::move(e));
  }
  return rep;
}

ValuationResult valuation_mod_r(const KnotInput& knot, int r, int D, int M) {
  auto pp = as_prime_power(r);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(r) + " is not a prime power");
  const long needed = pp->exponent * euler_phi(r);  // (zeta - 1)^needed generates (r)
  const CycloSeries f = eval_root(cached_f_infinity(knot.braid, D), r);
  const CycloSeries a = ado_series(cached_ado(knot.braid, r), std::min(M, D));
  ValuationResult out;
  for (int m = 0; m <= std::min(M, D); ++m) {
    if (f.precision(m) < needed) break;
    out.examined = m;
    if (!divisible_by(f.coeff(m) - a.coeff(m), r)) {
      out.value = m;
      break;
    }
  }
  return out;
}

CheckReport valuation_check(const KnotInput& knot, int r, int D, int M) {
  CheckReport rep{"valuation", knot.label, r, true, {}};
  const ValuationResult v = valuation_mod_r(knot, r, D, M);
  const int bound = std::min(r - 1, M);
  rep.pass = v.value ? *v.value >= r : v.examined >= bound;
  for (int m = 0; m <= std::min(M, D); ++m) {
    CheckEntry e;
    e.m = m;
    e.precision = D - m + 1;
    if (m > v.examined) {
      e.detail = "undetermined mod r";
      e.pass = m >= r;
    } else if (v.value && *v.value == m) {
      e.detail = "nonzero mod r";
      e.pass = m >= r;
    } else {
      e.detail = "zero mod r";
    }
    rep.per_m.push_back(std::move(e));
  }
  return rep;
}

void enforce(const CheckReport& report) {
  if (report.pass) return;
  const ErrorCode code = report.check == "factorization" ? ErrorCode::MismatchBeyondPrecision : ErrorCode::CongruenceFailure;
  throw Error(code, report.check + " failed for " + report.knot + " at r=" + std::to_string(report.r));
}

}  // namespace qknot
