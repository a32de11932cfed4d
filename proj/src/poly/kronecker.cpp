#include <algorithm>

#include "holonomic/poly/kronecker.hpp"
#include "holonomic/poly/unipoly.hpp"

namespace holo {

namespace {

void pack_range(BigInt& out, const std::vector<BigInt>& c, size_t lo, size_t hi, mp_bitcnt_t bits) {
  if (hi - lo == 1) {
    out = c[lo];
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  BigInt high;
  pack_range(out, c, lo, mid, bits);
  pack_range(high, c, mid, hi, bits);
  mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), bits * (mid - lo));
  out += high;
}

// `v` holds sum c_i 2^(bits*i) with |c_i| < 2^(bits-1); peel off `count`
// signed digits into out[lo..lo+count).
void unpack_range(BigInt& v, std::vector<BigInt>& out, size_t lo, size_t count, mp_bitcnt_t bits) {
  if (count == 1) {
    out[lo] = std::move(v);
    return;
  }
  size_t half = count / 2;
  mp_bitcnt_t split = bits * half;
  BigInt low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), v.get_mpz_t(), split);
  mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), split);
  if (mpz_sizeinbase(low.get_mpz_t(), 2) >= split && sgn(low) != 0) {
    // low >= 2^(split-1): its signed value is negative.
    BigInt full;
    mpz_setbit(full.get_mpz_t(), split);
    low -= full;
    v += 1;
  }
  unpack_range(low, out, lo, half, bits);
  unpack_range(v, out, lo + half, count - half, bits);
}

size_t max_bits(const std::vector<BigInt>& c) {
  size_t m = 0;
  for (const auto& x : c) m = std::max(m, bit_length(x));
  return m;
}

}  // namespace

BigInt kronecker_pack(const std::vector<BigInt>& coeffs, mp_bitcnt_t bits) {
  BigInt out;
  if (!coeffs.empty()) pack_range(out, coeffs, 0, coeffs.size(), bits);
  return out;
}

std::vector<BigInt> kronecker_unpack(BigInt value, size_t count, mp_bitcnt_t bits) {
  std::vector<BigInt> out(count);
  if (count > 0) unpack_range(value, out, 0, count, bits);
  return out;
}

std::vector<BigInt> kronecker_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  size_t ba = max_bits(a);
  size_t bb = max_bits(b);
  if (ba == 0 || bb == 0) return std::vector<BigInt>(a.size() + b.size() - 1);
  size_t terms = std::min(a.size(), b.size());
  size_t log_terms = 0;
  while ((size_t{1} << log_terms) < terms) ++log_terms;
  // |c_k| < terms * 2^(ba+bb) <= 2^(bits-2)
  mp_bitcnt_t bits = ba + bb + log_terms + 2;
  BigInt pa = kronecker_pack(a, bits);
  BigInt prod;
  if (&a == &b) {
    prod = pa * pa;
  } else {
    BigInt pb = kronecker_pack(b, bits);
    prod = pa * pb;
  }
  return kronecker_unpack(std::move(prod), a.size() + b.size() - 1, bits);
}

ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ZPoly(kronecker_product(a.coeffs, b.coeffs));
}

ZPoly taylor_shift_convolution(const ZPoly& p, const BigInt& c) {
  if (sgn(c) == 0 || p.length() < 2) return p;
  size_t n = p.length();
  size_t d = n - 1;
  std::vector<BigInt> fact(n);
  fact[0] = 1;
  for (size_t i = 1; i < n; ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);

  // a reversed: rev[d - i] = p_i * i!
  std::vector<BigInt> rev(n);
  for (size_t i = 0; i < n; ++i) rev[d - i] = p[i] * fact[i];
  // b_j = c^j * d! / j!, integral.
  std::vector<BigInt> b(n);
  BigInt cpow = 1;
  for (size_t j = 0; j < n; ++j) {
    BigInt ratio;
    mpz_divexact(ratio.get_mpz_t(), fact[d].get_mpz_t(), fact[j].get_mpz_t());
    b[j] = cpow * ratio;
    cpow *= c;
  }
  std::vector<BigInt> h = kronecker_product(rev, b);
  std::vector<BigInt> q(n);
  for (size_t k = 0; k < n; ++k) {
    BigInt denom = fact[k] * fact[d];
    mpz_divexact(q[k].get_mpz_t(), h[d - k].get_mpz_t(), denom.get_mpz_t());
  }
  return ZPoly(std::move(q));
}

std::string to_string(const ZPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < p.length(); ++i) {
    if (sgn(p[i]) == 0) continue;
    BigInt mag = abs(p[i]);
    if (out.empty()) {
      if (sgn(p[i]) < 0) out += "-";
    } else {
      out += sgn(p[i]) < 0 ? " - " : " + ";
    }
    out += mag.get_str();
    if (i >= 1) out += std::string("*") + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace holo
