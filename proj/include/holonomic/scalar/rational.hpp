#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace holo {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "a", "a/b", or a decimal such as "-12.5e-3" into an exact rational.
// Throws ParseError (line 0) on malformed input.
BigRational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

// "num/den", or "num" when den == 1.
std::string rational_to_string(const BigRational& q);

// Number of bits of |v| (0 for v == 0).
inline size_t bit_length(const BigInt& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace holo
