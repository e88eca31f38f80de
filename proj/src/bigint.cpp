#include "qknot/bigint.hpp"

#include "qknot/errors.hpp"

namespace qknot {

Int binomial(long n, long k) {
  if (k < 0) return 0;
  Int out;
  if (n >= 0) {
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  // C(n, k) = (-1)^k C(k - n - 1, k)
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  if (k % 2 != 0) out = -out;
  return out;
}

Int floor_mod(const Int& a, const Int& m) {
  Int out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

Int int_pow(long base, unsigned long exponent) {
  Int out;
  Int b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

std::string to_decimal(const Int& value) { return value.get_str(10); }

Int from_decimal(std::string_view text) {
  Int out;
  std::string s(text);
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a decimal integer: '" + s + "'");
  }
  return out;
}

}  // namespace qknot
