#pragma once

#include <cstdint>
#include <vector>

#include "holonomic/engines/plan.hpp"
#include "holonomic/recmat/recmat.hpp"

namespace holo {

// Each engine returns the numerator product M(z, n-1) ... M(z, 0) at
// precision plan.working_prec(), ignoring M.den(); the identity for n = 0.
template <class H>
HMatrix<H> eval_naive(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr);
// Requires an exact (dyadic) z; all arithmetic is exact until the final
// division.  Other rationals go through EvalExtras::exact_z.
template <class H>
HMatrix<H> eval_binsplit_exact(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr);
template <class H>
HMatrix<H> eval_multipoint(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr);
template <class H>
HMatrix<H> eval_rect_ps(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr);
template <class H>
HMatrix<H> eval_rect_split(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr);
// Throws InvalidArgument unless M(x, k + m) = M(x + m, k).
template <class H>
HMatrix<H> eval_rect_split_taylor(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan,
                                  OpCounters& ctr);
// `delta`, when given, must equal delta_matrix(M, plan.m).
template <class H>
HMatrix<H> eval_rect_delta(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr,
                           const Matrix<BiPoly>* delta = nullptr);

// W_m(x, k) = M(x, k+m-1) ... M(x, k) by bivariate binary splitting.
Matrix<BiPoly> block_matrix(const RecMatrix& M, uint64_t m);
// W_m(x, k + m) - W_m(x, k).
Matrix<BiPoly> delta_matrix(const RecMatrix& M, uint64_t m);
bool shift_symmetric(const RecMatrix& M, uint64_t m);

template <class H>
struct EvalResult {
  // Full quotient P(z, n) / Q(z, n).
  HMatrix<H> matrix;
  EvalPlan plan;
  OpCounters counters;
  long accuracy_bits = 0;
};

struct EvalExtras {
  const Matrix<BiPoly>* delta = nullptr;
  // Exact rational value of a real z; binsplit-exact uses it instead of z.
  const BigRational* exact_z = nullptr;
};

// Runs the selected (or default) algorithm at working precision p + g and
// divides by the denominator product once at the end.  Throws
// DenominatorError if a denominator vanishes for some 0 <= i < n.
template <class H>
EvalResult<H> evaluate(const RecMatrix& M, const H& z, uint64_t n, prec_t p, const EvalOptions& opt = {},
                       const EvalExtras& extras = {});

template <class H>
long accuracy_bits(const HMatrix<H>& m, prec_t p);
template <class H>
long accuracy_bits(const std::vector<H>& v, prec_t p);

template <class H>
std::vector<H> apply(const HMatrix<H>& m, const std::vector<H>& v, prec_t prec);

}  // namespace holo
