#pragma once

#include <algorithm>
#include <cstdint>

namespace holo {

// Per-evaluation instrumentation.  "Nonscalar" counts products of two
// parameter-ring elements (H x H), "scalar" counts products of an exact
// integer with an H element, and "additions" counts H additions.
struct OpCounters {
  uint64_t nonscalar = 0;
  uint64_t scalar = 0;
  uint64_t additions = 0;
  // Exact-coefficient (BigInt) multiplications inside polynomial arithmetic.
  uint64_t coeff_ops = 0;
  // Largest number of simultaneously live exact coefficients plus H values
  // held by the algorithm's working set, sampled at block boundaries.
  uint64_t peak_coeffs = 0;

  void observe_live(uint64_t live) { peak_coeffs = std::max(peak_coeffs, live); }

  OpCounters& operator+=(const OpCounters& o) {
    nonscalar += o.nonscalar;
    scalar += o.scalar;
    additions += o.additions;
    coeff_ops += o.coeff_ops;
    peak_coeffs = std::max(peak_coeffs, o.peak_coeffs);
    return *this;
  }
};

}  // namespace holo
