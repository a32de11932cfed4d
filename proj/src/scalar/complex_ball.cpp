#include "holonomic/scalar/complex_ball.hpp"

#include <algorithm>

namespace holo {

ComplexBall ComplexBall::from_string(std::string_view text, prec_t prec) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty complex number", 0);
  if (s.back() != 'i') return {Ball::from_string(s, prec), Ball(prec)};
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  return {Ball::from_string(re_text, prec), Ball::from_string(im_text, prec)};
}

long ComplexBall::rel_accuracy_bits(long cap) const {
  if (im.is_exact_zero()) return re.rel_accuracy_bits(cap);
  if (re.is_exact_zero()) return im.rel_accuracy_bits(cap);
  // Accuracy relative to the larger component.
  const Ball& big = mpfr_cmpabs(re.mid(), im.mid()) >= 0 ? re : im;
  Mag rad = max(re.rad(), im.rad());
  Ball probe = big;
  probe.set_rad(rad);
  return probe.rel_accuracy_bits(cap);
}

std::string ComplexBall::to_string(int digits) const {
  if (im.is_exact_zero()) return re.to_string(digits);
  return "(" + re.to_string(digits) + ") + (" + im.to_string(digits) + ")i";
}

void add(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec) {
  add(r.re, a.re, b.re, prec);
  add(r.im, a.im, b.im, prec);
}

void sub(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec) {
  sub(r.re, a.re, b.re, prec);
  sub(r.im, a.im, b.im, prec);
}

void mul(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec) {
  if (a.im.is_exact_zero() && b.im.is_exact_zero()) {
    mul(r.re, a.re, b.re, prec);
    r.im = Ball(prec);
    return;
  }
  Ball ac, bd, ad, bc;
  mul(ac, a.re, b.re, prec);
  mul(bd, a.im, b.im, prec);
  mul(ad, a.re, b.im, prec);
  mul(bc, a.im, b.re, prec);
  sub(r.re, ac, bd, prec);
  add(r.im, ad, bc, prec);
}

void mul_z(ComplexBall& r, const BigInt& c, const ComplexBall& b, prec_t prec) {
  mul_z(r.re, c, b.re, prec);
  mul_z(r.im, c, b.im, prec);
}

void addmul_z(ComplexBall& r, const BigInt& c, const ComplexBall& b, prec_t prec) {
  addmul_z(r.re, c, b.re, prec);
  addmul_z(r.im, c, b.im, prec);
}

void add_z(ComplexBall& r, const ComplexBall& a, const BigInt& c, prec_t prec) {
  add_z(r.re, a.re, c, prec);
  if (&r != &a) r.im = a.im;
  r.im.round_to(prec);
}

void div(ComplexBall& r, const ComplexBall& a, const ComplexBall& b, prec_t prec) {
  if (b.im.is_exact_zero()) {
    div(r.re, a.re, b.re, prec);
    div(r.im, a.im, b.re, prec);
    return;
  }
  prec_t wp = prec + 8;
  Ball c2, d2, den;
  mul(c2, b.re, b.re, wp);
  mul(d2, b.im, b.im, wp);
  add(den, c2, d2, wp);
  // a * conj(b) / |b|^2
  Ball ac, bd, bc, ad, nre, nim;
  mul(ac, a.re, b.re, wp);
  mul(bd, a.im, b.im, wp);
  mul(bc, a.im, b.re, wp);
  mul(ad, a.re, b.im, wp);
  add(nre, ac, bd, wp);
  sub(nim, bc, ad, wp);
  div(r.re, nre, den, prec);
  div(r.im, nim, den, prec);
}

void neg(ComplexBall& r, const ComplexBall& a) {
  neg(r.re, a.re);
  neg(r.im, a.im);
}

void set_int(ComplexBall& r, const BigInt& v, prec_t prec) {
  set_int(r.re, v, prec);
  r.im = Ball(prec);
}

void set_one(ComplexBall& r, prec_t prec) {
  set_one(r.re, prec);
  r.im = Ball(prec);
}

bool ball_contains(const ComplexBall& a, const BigRational& re, const BigRational& im) {
  return ball_contains(a.re, re) && ball_contains(a.im, im);
}

bool ball_overlaps(const ComplexBall& a, const ComplexBall& b) {
  return ball_overlaps(a.re, b.re) && ball_overlaps(a.im, b.im);
}

}  // namespace holo
