#include "holonomic/scalar/mag.hpp"

namespace holo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double next_up(double d) { return std::nextafter(d, kInf); }
double next_down(double d) { return std::nextafter(d, 0.0); }

// Beyond this exponent gap the smaller operand is below one ulp of the larger.
constexpr int64_t kNegligibleGap = 1100;

}  // namespace

Mag Mag::make(double man, int64_t exp) {
  if (man == 0.0) return Mag();
  if (!std::isfinite(man)) return inf();
  int e = 0;
  Mag m;
  m.man_ = std::frexp(man, &e);
  m.exp_ = exp + e;
  return m;
}

Mag Mag::from_double(double d) { return make(std::fabs(d), 0); }

Mag Mag::from_double_lower(double d) { return make(std::fabs(d), 0); }

Mag Mag::from_mpfr(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Mag();
  if (!mpfr_number_p(x)) return inf();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x, MPFR_RNDA);
  return make(std::fabs(d), e);
}

Mag Mag::from_mpfr_lower(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Mag();
  if (!mpfr_number_p(x)) return inf();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x, MPFR_RNDZ);
  return make(std::fabs(d), e);
}

Mag Mag::from_mpz(const mpz_class& z) {
  if (sgn(z) == 0) return Mag();
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  // mpz_get_d_2exp truncates toward zero.
  return make(next_up(std::fabs(d)), e);
}

Mag Mag::from_mpz_lower(const mpz_class& z) {
  if (sgn(z) == 0) return Mag();
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return make(std::fabs(d), e);
}

double Mag::log2() const {
  if (inf_) return kInf;
  if (man_ == 0.0) return -kInf;
  return static_cast<double>(exp_) + std::log2(man_);
}

void Mag::to_mpfr(mpfr_t out) const {
  mpfr_set_prec(out, 53);
  if (inf_) {
    mpfr_set_inf(out, 1);
  } else if (man_ == 0.0) {
    mpfr_set_zero(out, 1);
  } else {
    mpfr_set_d(out, man_, MPFR_RNDN);
    mpfr_mul_2si(out, out, static_cast<long>(exp_), MPFR_RNDN);
  }
}

mpq_class Mag::to_mpq() const {
  if (man_ == 0.0) return mpq_class(0);
  auto scaled = static_cast<int64_t>(std::ldexp(man_, 53));
  mpz_class num(static_cast<long>(scaled));
  mpq_class q(num);
  int64_t shift = exp_ - 53;
  if (shift >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return q;
}

Mag add_up(const Mag& a, const Mag& b) {
  if (a.inf_ || b.inf_) return Mag::inf();
  if (a.man_ == 0.0) return b;
  if (b.man_ == 0.0) return a;
  const Mag& hi = a.exp_ >= b.exp_ ? a : b;
  const Mag& lo = a.exp_ >= b.exp_ ? b : a;
  int64_t gap = hi.exp_ - lo.exp_;
  double s = hi.man_;
  if (gap <= kNegligibleGap) s += std::ldexp(lo.man_, static_cast<int>(-gap));
  return Mag::make(next_up(s), hi.exp_);
}

Mag add_lower(const Mag& a, const Mag& b) {
  if (a.inf_ || b.inf_) return Mag::inf();
  if (a.man_ == 0.0) return b;
  if (b.man_ == 0.0) return a;
  const Mag& hi = a.exp_ >= b.exp_ ? a : b;
  const Mag& lo = a.exp_ >= b.exp_ ? b : a;
  int64_t gap = hi.exp_ - lo.exp_;
  if (gap > kNegligibleGap) return hi;
  double s = hi.man_ + std::ldexp(lo.man_, static_cast<int>(-gap));
  return Mag::make(next_down(s), hi.exp_);
}

Mag mul_up(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) return Mag();
  if (a.inf_ || b.inf_) return Mag::inf();
  return Mag::make(next_up(a.man_ * b.man_), a.exp_ + b.exp_);
}

Mag mul_lower(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) return Mag();
  if (a.inf_ || b.inf_) return Mag::inf();
  return Mag::make(next_down(a.man_ * b.man_), a.exp_ + b.exp_);
}

Mag div_up(const Mag& a, const Mag& b) {
  if (a.is_zero()) return Mag();
  if (a.inf_ || b.is_zero()) return Mag::inf();
  if (b.inf_) return Mag();
  return Mag::make(next_up(a.man_ / b.man_), a.exp_ - b.exp_);
}

Mag sub_lower(const Mag& a, const Mag& b) {
  if (b.is_zero()) return a;
  if (b.inf_) return Mag();
  if (a.inf_) return Mag::inf();
  if (compare(a, b) <= 0) return Mag();
  int64_t gap = a.exp_ - b.exp_;
  double s = a.man_;
  if (gap <= kNegligibleGap) s -= std::ldexp(b.man_, static_cast<int>(-gap));
  s = next_down(s);
  if (s <= 0.0) return Mag();
  return Mag::make(s, a.exp_);
}

Mag mul_2exp(const Mag& a, int64_t e) {
  if (a.is_zero() || a.inf_) return a;
  Mag m = a;
  m.exp_ += e;
  return m;
}

int compare(const Mag& a, const Mag& b) {
  if (a.inf_ || b.inf_) return (a.inf_ ? 1 : 0) - (b.inf_ ? 1 : 0);
  bool az = a.man_ == 0.0;
  bool bz = b.man_ == 0.0;
  if (az || bz) return (az ? 0 : 1) - (bz ? 0 : 1);
  if (a.exp_ != b.exp_) return a.exp_ < b.exp_ ? -1 : 1;
  if (a.man_ == b.man_) return 0;
  return a.man_ < b.man_ ? -1 : 1;
}

}  // namespace holo
