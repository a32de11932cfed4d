#pragma once

#include <string>
#include <string_view>

#include "holonomic/scalar/ball.hpp"

namespace holo {

// Rectangular complex ball: independent real balls for both components.
struct ComplexBall {
  Ball re;
  Ball im;

  ComplexBall() = default;
  explicit ComplexBall(prec_t prec) : re(prec), im(prec) {}
  ComplexBall(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexBall from_rational(const BigRational& r, const BigRational& i, prec_t prec) {
    return {Ball::from_rational(r, prec), Ball::from_rational(i, prec)};
  }
  // "a", "a+bi", "a-bi", "bi" with rational/decimal components.
  static ComplexBall from_string(std::string_view text, prec_t prec);

  prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  bool is_exact_zero() const { return re.is_exact_zero() && im.is_exact_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  long rel_accuracy_bits(long cap) const;
  std::string to_string(int digits = 0) const;

  void swap(ComplexBall& o) noexcept {
    re.swap(o.re);
    im.swap(o.im);
  }
};

void add(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec);
void sub(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec);
void mul(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec);
void mul_z(ComplexBall& r, const BigInt& c, const ComplexBall& b, prec_t prec);
void addmul_z(ComplexBall& r, const BigInt& c, const ComplexBall& b, prec_t prec);
void add_z(ComplexBall& r, const ComplexBall& a, const BigInt& c, prec_t prec);
void div(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec);
void neg(ComplexBall& r, const ComplexBall& a);
void set_int(ComplexBall& r, const BigInt& v, prec_t prec);
void set_one(ComplexBall& r, prec_t prec);

bool ball_contains(const ComplexBall& a, const BigRational& re, const BigRational& im);
bool ball_overlaps(const ComplexBall& a, const ComplexBall& b);

}  // namespace holo
