#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "holonomic/scalar/ball.hpp"

namespace holo {

enum class Algorithm {
  naive,
  binsplit_exact,
  multipoint,
  rect_ps,
  rect_split,
  rect_split_taylor,
  rect_delta,
};

std::string_view algorithm_name(Algorithm a);
// Accepts the names printed by algorithm_name ("rect-split", ...).
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Automatic selection: naive below `naive_below`, rect-delta up to
// `rect_split_from`, rect-split from there on.
struct DispatchPolicy {
  uint64_t naive_below = 32;
  uint64_t rect_split_from = 1000;
};

Algorithm default_algorithm(uint64_t n, const DispatchPolicy& policy = {});

// Step length m, clamped to [1, n] (1 when n == 0).  For rect-ps this is the
// Paterson-Stockmeyer step for one subproduct.
uint64_t choose_m(Algorithm a, uint64_t n, prec_t p);
// Subproduct length used by rect-ps.
uint64_t choose_subproduct(uint64_t n, prec_t p);
long default_guard_bits(uint64_t n);

struct EvalPlan {
  Algorithm algorithm = Algorithm::naive;
  uint64_t m = 1;
  uint64_t subproduct = 1;
  long guard_bits = 0;
  prec_t prec = 53;

  prec_t working_prec() const { return prec + guard_bits; }
};

struct EvalOptions {
  std::optional<Algorithm> algorithm;
  std::optional<uint64_t> m;
  std::optional<uint64_t> subproduct;
  std::optional<long> guard_bits;
  DispatchPolicy policy;
};

EvalPlan make_plan(uint64_t n, prec_t p, const EvalOptions& opt);

}  // namespace holo
