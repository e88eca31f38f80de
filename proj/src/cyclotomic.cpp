#include "qknot/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "qknot/errors.hpp"
#include "qknot/series.hpp"

namespace qknot {

std::optional<PrimePower> as_prime_power(long n) {
  if (n < 2) return std::nullopt;
  long p = 0;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  int l = 0;
  while (n % p == 0) {
    n /= p;
    ++l;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, l};
}

long euler_phi(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "phi of nonpositive integer");
  long result = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials (low degree first) by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return quot;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    // recursion would re-lock; compute divisors' polynomials iteratively through the cache
    auto found = cache.find(d);
    std::vector<long> phi_d;
    if (found != cache.end()) {
      phi_d = found->second;
    } else {
      // build bottom-up: every divisor of d is smaller and handled by this loop order
      std::vector<long> p(d + 1, 0);
      p[0] = -1;
      p[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) p = divide_monic(p, cache.at(e));
      cache.emplace(d, p);
      phi_d = p;
    }
    poly = divide_monic(poly, phi_d);
  }
  return cache.emplace(m, poly).first->second;
}

CyclotomicInt::CyclotomicInt(int conductor) : conductor_(conductor) {
  coords_.resize(static_cast<std::size_t>(euler_phi(conductor)));
}

CyclotomicInt CyclotomicInt::from_int(int conductor, const Int& value) {
  CyclotomicInt z(conductor);
  z.coords_[0] = value;
  return z;
}

CyclotomicInt CyclotomicInt::zeta_power(int conductor, long k) {
  long e = ((k % conductor) + conductor) % conductor;
  std::vector<Int> coords(static_cast<std::size_t>(e) + 1);
  coords[e] = 1;
  return from_coords(conductor, std::move(coords));
}

CyclotomicInt CyclotomicInt::from_coords(int conductor, std::vector<Int> coords) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coords.size(); i-- > deg;) {
    if (coords[i] == 0) continue;
    Int c = coords[i];
    for (std::size_t k = 0; k < deg; ++k)
      if (phi[k] != 0) coords[i - deg + k] -= c * phi[k];
    coords[i] = 0;
  }
  coords.resize(deg);
  CyclotomicInt z(conductor);
  z.coords_ = std::move(coords);
  return z;
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

void CyclotomicInt::check_same_conductor(const CyclotomicInt& other) const {
  if (conductor_ != other.conductor_)
    throw Error(ErrorCode::InvalidArgument, "conductor mismatch: " + std::to_string(conductor_) + " vs " +
                                                std::to_string(other.conductor_));
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  check_same_conductor(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  check_same_conductor(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& other) {
  check_same_conductor(other);
  std::vector<Int> prod(coords_.size() * 2);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coords_.size(); ++j) {
      if (other.coords_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), coords_[i].get_mpz_t(), other.coords_[j].get_mpz_t());
    }
  }
  *this = from_coords(conductor_, std::move(prod));
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const Int& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CyclotomicInt CyclotomicInt::pow(unsigned long e) const {
  CyclotomicInt result = from_int(conductor_, 1);
  CyclotomicInt base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<CyclotomicInt> CyclotomicInt::divide_exact(const Int& divisor) const {
  if (divisor == 0) return std::nullopt;
  CyclotomicInt out = *this;
  for (auto& c : out.coords_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  }
  return out;
}

std::optional<CyclotomicInt> CyclotomicInt::inverse() const {
  // Solve (multiplication-by-this matrix) * v = e_0 over Q, then test integrality.
  const std::size_t n = coords_.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    CyclotomicInt col = *this * zeta_power(conductor_, static_cast<long>(k));
    for (std::size_t i = 0; i < n; ++i) a[i][k] = col.coords_[i];
  }
  a[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      mpq_class f = a[row][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<Int> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class v = a[i][n] / a[i][i];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    coords[i] = v.get_num();
  }
  CyclotomicInt inv(conductor_);
  inv.coords_ = std::move(coords);
  return inv;
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << "]_" << conductor_;
  return os.str();
}

CyclotomicInt halve_conductor(const CyclotomicInt& z) {
  const int m = z.conductor();
  if (m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "conductor is odd");
  const int r = m / 2;
  std::vector<Int> coords;
  if (r % 2 != 0) {
    // zeta_{2r}^k = (-1)^k zeta_r^{k (r+1)/2}
    CyclotomicInt out(r);
    for (std::size_t k = 0; k < z.coords().size(); ++k) {
      if (z.coords()[k] == 0) continue;
      long e = static_cast<long>(k) * ((r + 1) / 2);
      CyclotomicInt term = CyclotomicInt::zeta_power(r, e) * z.coords()[k];
      if (k % 2 != 0) term = -term;
      out += term;
    }
    return out;
  }
  coords.resize((z.coords().size() + 1) / 2);
  for (std::size_t k = 0; k < z.coords().size(); ++k) {
    if (k % 2 == 0) {
      coords[k / 2] = z.coords()[k];
    } else if (z.coords()[k] != 0) {
      throw Error(ErrorCode::DivisionFailed, z.to_string() + " is not in Z[zeta_" + std::to_string(r) + "]");
    }
  }
  return CyclotomicInt::from_coords(r, std::move(coords));
}

std::vector<Int> zeta_power_to_offset_basis(const CyclotomicInt& c) {
  if (!as_prime_power(c.conductor()))
    throw Error(ErrorCode::NotPrimePower, "conductor " + std::to_string(c.conductor()));
  // zeta^k = sum_n C(k, n) (zeta - 1)^n
  const auto& a = c.coords();
  std::vector<Int> d(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t k = n; k < a.size(); ++k)
      if (a[k] != 0) d[n] += binomial(static_cast<long>(k), static_cast<long>(n)) * a[k];
  return d;
}

CyclotomicInt offset_basis_to_zeta_power(int conductor, const std::vector<Int>& offset) {
  if (!as_prime_power(conductor)) throw Error(ErrorCode::NotPrimePower, "conductor " + std::to_string(conductor));
  // (zeta - 1)^n = sum_k C(n, k) (-1)^{n-k} zeta^k; the input may be longer than phi.
  std::vector<Int> coords(offset.size());
  for (std::size_t n = 0; n < offset.size(); ++n) {
    if (offset[n] == 0) continue;
    for (std::size_t k = 0; k <= n; ++k) {
      Int b = binomial(static_cast<long>(n), static_cast<long>(k)) * offset[n];
      if ((n - k) % 2 != 0) b = -b;
      coords[k] += b;
    }
  }
  return CyclotomicInt::from_coords(conductor, std::move(coords));
}

int zeta_minus_one_valuation(const CyclotomicInt& c) {
  auto pp = as_prime_power(c.conductor());
  if (!pp) throw Error(ErrorCode::NotPrimePower, "conductor " + std::to_string(c.conductor()));
  const long phi = euler_phi(c.conductor());
  const auto d = zeta_power_to_offset_basis(c);
  // (p) = (zeta - 1)^{phi}, and the terms d_n (zeta-1)^n have distinct valuations mod phi.
  int best = INT_MAX;
  const Int p = pp->prime;
  for (std::size_t n = 0; n < d.size(); ++n) {
    if (d[n] == 0) continue;
    Int rest = d[n];
    long vp = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++vp;
    }
    best = std::min<long>(best, vp * phi + static_cast<long>(n));
  }
  return best;
}

ZetaIdealWitness check_zeta_ideal(int r) {
  auto pp = as_prime_power(r);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(r) + " is not a prime power");
  const long phi = euler_phi(r);
  CyclotomicInt pi = CyclotomicInt::zeta_power(r, 1) - CyclotomicInt::from_int(r, 1);
  CyclotomicInt power = pi.pow(static_cast<unsigned long>(phi));
  auto unit = power.divide_exact(pp->prime);
  if (!unit)
    throw Error(ErrorCode::DivisionFailed,
                "(zeta_" + std::to_string(r) + " - 1)^" + std::to_string(phi) + " not divisible by " +
                    std::to_string(pp->prime));
  auto inv = unit->inverse();
  if (!inv) throw Error(ErrorCode::NotAUnit, unit->to_string() + " has no inverse in Z[zeta]");
  if (!(*unit * *inv == CyclotomicInt::from_int(r, 1)))
    throw Error(ErrorCode::NotAUnit, "inverse check failed for " + unit->to_string());
  return {r, pp->prime, phi, *unit, *inv};
}

Int mod_r_reduce(const Int& value, long r, int j) { return floor_mod(value, int_pow(r, static_cast<unsigned>(j))); }

CyclotomicInt mod_r_reduce(const CyclotomicInt& c, long r, int j) {
  const Int modulus = int_pow(r, static_cast<unsigned>(j));
  std::vector<Int> coords = c.coords();
  for (auto& v : coords) v = floor_mod(v, modulus);
  return CyclotomicInt::from_coords(c.conductor(), std::move(coords));
}

CycloSeries::CycloSeries(int conductor, int order)
    : conductor_(conductor),
      order_(order),
      coeffs_(static_cast<std::size_t>(order + 1), CyclotomicInt(conductor)),
      precision_(static_cast<std::size_t>(order + 1), kExactPrecision) {}

void CycloSeries::set(int m, CyclotomicInt value, int precision) {
  if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  coeffs_.at(m) = std::move(value);
  precision_.at(m) = precision;
}

CycloSeries& CycloSeries::operator+=(const CycloSeries& other) {
  const int d = std::min(order_, other.order_);
  coeffs_.resize(d + 1, CyclotomicInt(conductor_));
  precision_.resize(d + 1);
  order_ = d;
  for (int m = 0; m <= d; ++m) {
    coeffs_[m] += other.coeffs_[m];
    precision_[m] = std::min(precision_[m], other.precision_[m]);
  }
  return *this;
}

CycloSeries& CycloSeries::operator-=(const CycloSeries& other) {
  const int d = std::min(order_, other.order_);
  coeffs_.resize(d + 1, CyclotomicInt(conductor_));
  precision_.resize(d + 1);
  order_ = d;
  for (int m = 0; m <= d; ++m) {
    coeffs_[m] -= other.coeffs_[m];
    precision_[m] = std::min(precision_[m], other.precision_[m]);
  }
  return *this;
}

CycloSeries operator*(const CycloSeries& a, const CycloSeries& b) {
  const int d = std::min(a.order_, b.order_);
  CycloSeries out(a.conductor_, d);
  for (int m = 0; m <= d; ++m) {
    CyclotomicInt acc(a.conductor_);
    int prec = kExactPrecision;
    for (int i = 0; i <= m; ++i) {
      acc += a.coeffs_[i] * b.coeffs_[m - i];
      prec = std::min({prec, a.precision_[i], b.precision_[m - i]});
    }
    out.set(m, std::move(acc), prec);
  }
  return out;
}

bool CycloSeries::agrees_at(int m, const CycloSeries& other) const {
  const int prec = std::min(precision_.at(m), other.precision_.at(m));
  CyclotomicInt diff = coeffs_.at(m) - other.coeffs_.at(m);
  return zeta_minus_one_valuation(diff) >= prec;
}

CycloSeries eval_root(const BivariateSeries& s, int r) {
  if (!as_prime_power(r))
    throw Error(ErrorCode::NotPrimePower, std::to_string(r) + ": (zeta_r - 1) is invertible, completion is trivial");
  const int d = s.order();
  CycloSeries out(r, d);
  const CyclotomicInt pi = CyclotomicInt::zeta_power(r, 1) - CyclotomicInt::from_int(r, 1);
  for (int m = 0; m <= d; ++m) {
    // Horner in (zeta - 1)
    CyclotomicInt acc(r);
    for (int n = d - m; n >= 0; --n) {
      acc *= pi;
      acc += CyclotomicInt::from_int(r, s.coeff(n, m));
    }
    out.set(m, std::move(acc), d - m + 1);
  }
  return out;
}

}  // namespace qknot
