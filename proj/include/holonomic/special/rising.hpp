#pragma once

#include <cstdint>
#include <vector>

#include "holonomic/engines/engines.hpp"

namespace holo {

// Unsigned Stirling numbers of the first kind [m, j] for j = 0..m.
std::vector<BigInt> stirling1_row(uint64_t m);

// Coefficients of (x+k+m)^(m) - (x+k)^(m) = sum_v x^v sum_i k^i C(v, i),
// for v + i <= m - 1.
struct RisingDeltaCoeffs {
  uint64_t m = 0;
  // c[v][i]; row v has m - v entries.
  std::vector<std::vector<BigInt>> c;

  const BigInt& operator()(size_t v, size_t i) const { return c[v][i]; }
  BiPoly as_bipoly() const;
};

// Row v = 0 from the closed form, remaining rows from
// (v+1) C(v+1, i) = (i+1) C(v, i+1).
RisingDeltaCoeffs rising_delta_coeffs(uint64_t m);
// Every row from the closed form; used to cross-check the recurrence.
RisingDeltaCoeffs rising_delta_coeffs_closed_form(uint64_t m);

// z (z+1) ... (z+n-1).  Uses the closed-form difference when the plan
// selects rect-delta.
template <class H>
EvalResult<H> rising_factorial(const H& z, uint64_t n, prec_t p, const EvalOptions& opt = {});

}  // namespace holo
