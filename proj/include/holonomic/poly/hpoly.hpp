#pragma once

#include <vector>

#include "holonomic/counters.hpp"
#include "holonomic/scalar/complex_ball.hpp"

namespace holo {

// Polynomials with ball coefficients (ascending degree, not trimmed).  Used
// where the parameter has been substituted before polynomial arithmetic in
// the auxiliary variable.
template <class H>
using HPoly = std::vector<H>;

// Product of ball polynomials.  Short operands use schoolbook ball
// arithmetic; longer ones are scaled to integer polynomials with a common
// exponent per operand, multiplied exactly by Kronecker substitution and
// rescaled, with the radius bounded by a magnitude-only product.  Counts one
// nonscalar multiplication per output coefficient for the fast path.
HPoly<Ball> hpoly_mul(const HPoly<Ball>& a, const HPoly<Ball>& b, prec_t prec, OpCounters& ctr);
HPoly<ComplexBall> hpoly_mul(const HPoly<ComplexBall>& a, const HPoly<ComplexBall>& b, prec_t prec,
                             OpCounters& ctr);

template <class H>
HPoly<H> hpoly_add(const HPoly<H>& a, const HPoly<H>& b, prec_t prec, OpCounters& ctr) {
  const HPoly<H>& lo = a.size() >= b.size() ? b : a;
  HPoly<H> r = a.size() >= b.size() ? a : b;
  for (size_t i = 0; i < lo.size(); ++i) {
    add(r[i], r[i], lo[i], prec);
    ++ctr.additions;
  }
  return r;
}

inline constexpr size_t kHPolySchoolbookThreshold = 4;

}  // namespace holo
