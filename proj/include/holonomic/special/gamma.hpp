#pragma once

#include <cstdint>
#include <optional>

#include "holonomic/engines/plan.hpp"
#include "holonomic/recmat/recmat.hpp"

namespace holo {

inline constexpr double kStirlingBeta = 0.11031780007632579;  // log(2) / (2 pi)

struct StirlingParams {
  prec_t p = 0;
  // Shift: Gamma(x) = Gamma(x + n) / x^(n).
  uint64_t n = 0;
  // Series terms k = 1 .. N-1; R_N bounds the rest.
  uint64_t N = 1;
  double beta = kStirlingBeta;
};

// n is the least shift with mid(x) + n >= shift_scale * beta * p, N the
// least term count for which stirling_remainder_log2(N, X) < -(p + 2) at
// X = x + n; the exact remainder |B_2N| / (2N (2N-1) X^(2N-1)) is then below
// 2^-p.  Throws DomainError if x contains a pole.
StirlingParams stirling_params(const Ball& x, prec_t p, double shift_scale = 2.0);

// log2 of an upper bound for the Stirling remainder after N-1 terms at real
// X > 0, using |B_2N| < 4 (2N)! / (2 pi)^(2N).
double stirling_remainder_log2(uint64_t N, double X);

struct GammaOptions {
  // Shift override in multiples of beta * p, or as an explicit n.
  double shift_scale = 2.0;
  std::optional<uint64_t> shift;
  // Engine options for the rising factorial or the 1F1 matrix product.
  EvalOptions engine;
  // 1F1 only: overrides for the integration limit N and the term count.
  std::optional<uint64_t> limit;
  std::optional<uint64_t> terms;
};

struct GammaResult {
  Ball value;
  long accuracy_bits = 0;
  // Stirling: shift n and series length N.  1F1: limit N and term count n.
  uint64_t n = 0;
  uint64_t N = 0;
  OpCounters counters;
};

GammaResult gamma_stirling(const Ball& x, prec_t p, const GammaOptions& opt = {});
GammaResult gamma_1f1(const Ball& x, prec_t p, const GammaOptions& opt = {});

// matrix [[1+k+x, 1+k+x], [0, N]] with unit denominator.
RecMatrix incomplete_gamma_matrix(uint64_t N);

// Throws DomainError if x may contain 0, -1, -2, ...
void check_not_pole(const Ball& x);

}  // namespace holo
