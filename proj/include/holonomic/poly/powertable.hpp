#pragma once

#include <vector>

#include "holonomic/counters.hpp"
#include "holonomic/errors.hpp"
#include "holonomic/poly/unipoly.hpp"
#include "holonomic/scalar/complex_ball.hpp"

namespace holo {

// [z^0, ..., z^D]; z^0 is an exact one.
template <class H>
struct PowerTable {
  std::vector<H> powers;

  long max_exponent() const { return static_cast<long>(powers.size()) - 1; }
  const H& operator[](size_t j) const { return powers[j]; }

  static PowerTable build(const H& z, long max_exp, prec_t prec, OpCounters& ctr) {
    PowerTable t;
    t.powers.reserve(static_cast<size_t>(std::max(0L, max_exp)) + 1);
    H one(prec);
    set_one(one, prec);
    t.powers.push_back(std::move(one));
    if (max_exp >= 1) t.powers.push_back(z);
    for (long j = 2; j <= max_exp; ++j) {
      H next(prec);
      // Squaring for even exponents keeps the multiplication depth logarithmic.
      if (j % 2 == 0) {
        mul(next, t.powers[static_cast<size_t>(j / 2)], t.powers[static_cast<size_t>(j / 2)], prec);
      } else {
        mul(next, t.powers[static_cast<size_t>(j - 1)], z, prec);
      }
      ++ctr.nonscalar;
      t.powers.push_back(std::move(next));
    }
    return t;
  }
};

// sum c_i z^i using only integer-times-H products and H additions.
template <class H>
H uni_eval_powertable(const ZPoly& p, const PowerTable<H>& table, prec_t prec, OpCounters& ctr) {
  if (p.degree() > table.max_exponent()) {
    throw InvalidArgument("polynomial degree " + std::to_string(p.degree()) +
                          " exceeds power table size " + std::to_string(table.max_exponent()));
  }
  H acc(prec);
  if (p.is_zero()) return acc;
  set_int(acc, p[0], prec);
  for (size_t i = 1; i < p.length(); ++i) {
    if (sgn(p[i]) == 0) continue;
    addmul_z(acc, p[i], table[i], prec);
    ++ctr.scalar;
    ++ctr.additions;
  }
  return acc;
}

}  // namespace holo
