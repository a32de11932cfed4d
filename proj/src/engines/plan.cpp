#include "holonomic/engines/plan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace holo {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames{{
    {Algorithm::naive, "naive"},
    {Algorithm::binsplit_exact, "binsplit-exact"},
    {Algorithm::multipoint, "multipoint"},
    {Algorithm::rect_ps, "rect-ps"},
    {Algorithm::rect_split, "rect-split"},
    {Algorithm::rect_split_taylor, "rect-split-taylor"},
    {Algorithm::rect_delta, "rect-delta"},
}};

uint64_t clamp_step(double v, uint64_t n) {
  if (n == 0) return 1;
  auto m = static_cast<uint64_t>(std::floor(v));
  return std::clamp<uint64_t>(m, 1, n);
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  for (const auto& [alg, name] : kNames) {
    if (alg == a) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [alg, n] : kNames) {
    if (n == name) return alg;
  }
  return std::nullopt;
}

Algorithm default_algorithm(uint64_t n, const DispatchPolicy& policy) {
  if (n < policy.naive_below) return Algorithm::naive;
  if (n < policy.rect_split_from) return Algorithm::rect_delta;
  return Algorithm::rect_split;
}

uint64_t choose_subproduct(uint64_t n, prec_t p) {
  double sn = std::sqrt(static_cast<double>(n));
  return clamp_step(std::min(2.0 * sn, 10.0 * std::pow(static_cast<double>(p), 0.25)), n);
}

uint64_t choose_m(Algorithm a, uint64_t n, prec_t p) {
  double sn = std::sqrt(static_cast<double>(n));
  switch (a) {
    case Algorithm::naive:
    case Algorithm::binsplit_exact:
      return 1;
    case Algorithm::multipoint:
      return clamp_step(sn, n);
    case Algorithm::rect_ps:
      return clamp_step(std::ceil(std::sqrt(static_cast<double>(choose_subproduct(n, p)))), n);
    case Algorithm::rect_split:
    case Algorithm::rect_split_taylor:
    case Algorithm::rect_delta:
      return clamp_step(std::min(0.2 * std::pow(static_cast<double>(p), 0.4), sn), n);
  }
  return 1;
}

long default_guard_bits(uint64_t n) {
  return 10 + 2 * static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 2.0)));
}

EvalPlan make_plan(uint64_t n, prec_t p, const EvalOptions& opt) {
  EvalPlan plan;
  plan.prec = p;
  plan.algorithm = opt.algorithm.value_or(default_algorithm(n, opt.policy));
  plan.m = opt.m.value_or(choose_m(plan.algorithm, n, p));
  if (plan.m == 0) plan.m = 1;
  plan.subproduct = opt.subproduct.value_or(choose_subproduct(n, p));
  if (plan.subproduct == 0) plan.subproduct = 1;
  plan.guard_bits = opt.guard_bits.value_or(default_guard_bits(n));
  return plan;
}

}  // namespace holo
