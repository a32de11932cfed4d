#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "holonomic/errors.hpp"
#include "holonomic/scalar/mag.hpp"
#include "holonomic/scalar/rational.hpp"

namespace holo {

using prec_t = mpfr_prec_t;

// Midpoint-radius real ball [mid - rad, mid + rad].  The midpoint is an MPFR
// float whose precision is set by the last operation that wrote it; the
// radius is an upward-rounded Mag.  All arithmetic is containment preserving:
// the output set contains f(a, b) for every a, b in the input sets.
class Ball {
 public:
  Ball();
  explicit Ball(prec_t prec);
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  static Ball from_int(const BigInt& v, prec_t prec);
  static Ball from_si(long v, prec_t prec);
  static Ball from_rational(const BigRational& q, prec_t prec);
  static Ball from_double(double d);
  // Accepts "q", "m ± r", "m +/- r", optionally wrapped in brackets, where q,
  // m and r are integers, fractions "a/b" or decimals with optional exponent.
  static Ball from_string(std::string_view text, prec_t prec);

  mpfr_srcptr mid() const { return mid_; }
  mpfr_ptr mid_mut() { return mid_; }
  const Mag& rad() const { return rad_; }
  void set_rad(const Mag& r) { rad_ = r; }
  void add_error(const Mag& e) { rad_ = add_up(rad_, e); }
  prec_t precision() const { return mpfr_get_prec(mid_); }

  bool is_exact() const { return rad_.is_zero(); }
  bool is_exact_zero() const { return rad_.is_zero() && mpfr_zero_p(mid_); }
  bool is_finite() const { return rad_.is_finite() && mpfr_number_p(mid_); }
  bool contains_zero() const;
  // Every member is > 0 (resp. < 0).
  bool is_positive() const;
  bool is_negative() const;

  Mag abs_upper() const;
  Mag abs_lower() const;

  // Lower bound of mid - rad and upper bound of mid + rad as doubles.
  double lower_double() const;
  double upper_double() const;
  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

  // Relative accuracy -log2(rad / |mid|), rounded down; `cap` for exact
  // nonzero balls; a large negative number when mid is zero and rad is not.
  long rel_accuracy_bits(long cap) const;

  // "m ± r" with enough midpoint digits for the ball's accuracy; exact balls
  // print as the shortest decimal that converts back to the same midpoint.
  std::string to_string(int digits = 0) const;

  // Round the midpoint to `prec` bits, absorbing the error into the radius.
  void round_to(prec_t prec);

  void swap(Ball& other) noexcept {
    mpfr_swap(mid_, other.mid_);
    std::swap(rad_, other.rad_);
  }

 private:
  mpfr_t mid_;
  Mag rad_;
};

inline void swap(Ball& a, Ball& b) noexcept { a.swap(b); }

// Upper bound on half an ulp-scale error after an inexact MPFR operation that
// wrote `x` with ternary result `ternary`.
Mag rounding_error(mpfr_srcptr x, int ternary);

// Output-parameter forms; `r` may alias an input.
void add(Ball& r, const Ball& a, const Ball& b, prec_t prec);
void sub(Ball& r, const Ball& a, const Ball& b, prec_t prec);
void mul(Ball& r, const Ball& a, const Ball& b, prec_t prec);
void mul_z(Ball& r, const BigInt& c, const Ball& b, prec_t prec);
void mul_si(Ball& r, long c, const Ball& b, prec_t prec);
// r += c * b
void addmul_z(Ball& r, const BigInt& c, const Ball& b, prec_t prec);
void add_z(Ball& r, const Ball& a, const BigInt& c, prec_t prec);
void div(Ball& r, const Ball& a, const Ball& b, prec_t prec);
void div_z(Ball& r, const Ball& a, const BigInt& c, prec_t prec);
void neg(Ball& r, const Ball& a);
void mul_2exp(Ball& r, const Ball& a, long e);
void set_int(Ball& r, const BigInt& v, prec_t prec);
void set_one(Ball& r, prec_t prec);

Ball ball_add(const Ball& a, const Ball& b, prec_t prec);
Ball ball_sub(const Ball& a, const Ball& b, prec_t prec);
Ball ball_mul(const Ball& a, const Ball& b, prec_t prec);
Ball ball_div(const Ball& a, const Ball& b, prec_t prec);
Ball ball_scalar_mul(const BigInt& c, const Ball& b, prec_t prec);

// Exact membership test: |mid - x| <= rad evaluated in rational arithmetic.
bool ball_contains(const Ball& a, const BigRational& x);
// b is a subset of a.
bool ball_contains(const Ball& a, const Ball& b);
bool ball_overlaps(const Ball& a, const Ball& b);

Ball ball_exp(const Ball& a, prec_t prec);
// Requires a > 0; throws DomainError otherwise.
Ball ball_log(const Ball& a, prec_t prec);
// Requires a >= 0.
Ball ball_sqrt(const Ball& a, prec_t prec);
// a^b = exp(b log a) for a > 0.
Ball ball_pow(const Ball& a, const Ball& b, prec_t prec);
Ball ball_const_pi(prec_t prec);
Ball ball_const_log2(prec_t prec);

}  // namespace holo
