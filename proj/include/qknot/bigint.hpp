#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qknot {

/// Arbitrary-precision integer used for every coefficient in the library.
using Int = mpz_class;

/// Binomial coefficient C(n, k) for any integer n and k >= 0 (generalized for n < 0).
Int binomial(long n, long k);

/// Representative of a in [0, m) for m > 0.
Int floor_mod(const Int& a, const Int& m);

Int int_pow(long base, unsigned long exponent);

std::string to_decimal(const Int& value);
Int from_decimal(std::string_view text);

}  // namespace qknot
