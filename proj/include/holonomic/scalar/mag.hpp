#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include <gmpxx.h>
#include <mpfr.h>

namespace holo {

// Nonnegative magnitude bound: man * 2^exp with man in [0.5, 1), or zero, or
// +infinity.  Every operation suffixed _up returns a value >= the exact
// result, _lower returns a value <= the exact result.  The exponent is kept
// separately from the double so products of 10^5 large factors stay in range.
class Mag {
 public:
  constexpr Mag() = default;

  static Mag zero() { return Mag(); }
  static Mag inf() {
    Mag m;
    m.inf_ = true;
    return m;
  }
  // Exactly 2^e.
  static Mag pow2(int64_t e) {
    Mag m;
    m.man_ = 0.5;
    m.exp_ = e + 1;
    return m;
  }
  // Upper bound for |d|.
  static Mag from_double(double d);
  // Lower bound for |d|.
  static Mag from_double_lower(double d);
  // Upper bound for |x|.
  static Mag from_mpfr(const mpfr_t x);
  // Lower bound for |x|.
  static Mag from_mpfr_lower(const mpfr_t x);
  static Mag from_mpz(const mpz_class& z);
  static Mag from_mpz_lower(const mpz_class& z);

  bool is_zero() const { return !inf_ && man_ == 0.0; }
  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  double mantissa() const { return man_; }
  int64_t exponent() const { return exp_; }

  // Upper bound for log2 of the value; -inf for zero.
  double log2() const;

  // Exact conversion.
  void to_mpfr(mpfr_t out) const;
  mpq_class to_mpq() const;

  friend Mag add_up(const Mag& a, const Mag& b);
  friend Mag mul_up(const Mag& a, const Mag& b);
  friend Mag div_up(const Mag& a, const Mag& b);
  friend Mag mul_lower(const Mag& a, const Mag& b);
  friend Mag add_lower(const Mag& a, const Mag& b);
  // max(a - b, 0), rounded down.
  friend Mag sub_lower(const Mag& a, const Mag& b);
  friend Mag mul_2exp(const Mag& a, int64_t e);

  friend int compare(const Mag& a, const Mag& b);
  friend bool operator<(const Mag& a, const Mag& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Mag& a, const Mag& b) { return compare(a, b) <= 0; }
  friend bool operator==(const Mag& a, const Mag& b) { return compare(a, b) == 0; }

 private:
  static Mag make(double man, int64_t exp);

  double man_ = 0.0;
  int64_t exp_ = 0;
  bool inf_ = false;
};

Mag add_up(const Mag& a, const Mag& b);
Mag mul_up(const Mag& a, const Mag& b);
Mag div_up(const Mag& a, const Mag& b);
Mag mul_lower(const Mag& a, const Mag& b);
Mag add_lower(const Mag& a, const Mag& b);
Mag sub_lower(const Mag& a, const Mag& b);
Mag mul_2exp(const Mag& a, int64_t e);
int compare(const Mag& a, const Mag& b);

inline Mag max(const Mag& a, const Mag& b) { return compare(a, b) >= 0 ? a : b; }

}  // namespace holo
