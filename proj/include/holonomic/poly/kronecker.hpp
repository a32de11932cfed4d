#pragma once

#include <vector>

#include "holonomic/scalar/rational.hpp"

namespace holo {

// Signed Kronecker substitution: sum c_i 2^(bits*i).  Requires
// |c_i| < 2^(bits-1) for unpacking to be exact.
BigInt kronecker_pack(const std::vector<BigInt>& coeffs, mp_bitcnt_t bits);
std::vector<BigInt> kronecker_unpack(BigInt value, size_t count, mp_bitcnt_t bits);

// Coefficient list of the product of two integer coefficient lists.
std::vector<BigInt> kronecker_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

}  // namespace holo
