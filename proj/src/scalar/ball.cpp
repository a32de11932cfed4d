#include "holonomic/scalar/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace holo {

namespace {

constexpr prec_t kMinPrec = 2;

prec_t clamp_prec(prec_t p) { return std::max(p, kMinPrec); }

// Per-thread scratch float used for exact intermediate products.  Grown on
// demand and resized with mpfr_set_prec_raw, which never reallocates.
struct Scratch {
  mpfr_t v;
  prec_t alloc = 0;
  Scratch() { mpfr_init2(v, 64), alloc = 64; }
  ~Scratch() { mpfr_clear(v); }
  mpfr_ptr get(prec_t p) {
    if (p > alloc) {
      mpfr_set_prec(v, p);
      alloc = p;
    } else {
      mpfr_set_prec_raw(v, p);
    }
    return v;
  }
};

mpfr_ptr scratch(prec_t p) {
  thread_local Scratch s;
  return s.get(p);
}

// Exact comparison of |x| against the value of m.
int cmpabs_mag(mpfr_srcptr x, const Mag& m) {
  if (m.is_inf()) return -1;
  mpfr_t r;
  mpfr_init2(r, 53);
  m.to_mpfr(r);
  int c = mpfr_cmpabs(x, r);
  mpfr_clear(r);
  return c;
}

// Upper bound for expm1(m).
Mag expm1_up(const Mag& m) {
  if (m.is_zero()) return Mag();
  if (m.is_inf()) return Mag::inf();
  mpfr_t t;
  mpfr_init2(t, 53);
  m.to_mpfr(t);
  mpfr_expm1(t, t, MPFR_RNDU);
  Mag r = Mag::from_mpfr(t);
  mpfr_clear(t);
  return r;
}

// Writes into `r` through a temporary when it aliases an input.
template <class F>
void with_output(Ball& r, bool aliased, prec_t prec, F&& f) {
  if (aliased) {
    Ball t(prec);
    f(t);
    r.swap(t);
  } else {
    mpfr_set_prec(r.mid_mut(), prec);
    f(r);
  }
}

}  // namespace

Ball::Ball() : Ball(kMinPrec) {}

Ball::Ball(prec_t prec) {
  mpfr_init2(mid_, clamp_prec(prec));
  mpfr_set_zero(mid_, 1);
}

Ball::Ball(const Ball& other) : rad_(other.rad_) {
  mpfr_init2(mid_, other.precision());
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
}

Ball::Ball(Ball&& other) noexcept : Ball(kMinPrec) { swap(other); }

Ball& Ball::operator=(const Ball& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, other.precision());
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    rad_ = other.rad_;
  }
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  swap(other);
  return *this;
}

Ball::~Ball() { mpfr_clear(mid_); }

Mag rounding_error(mpfr_srcptr x, int ternary) {
  if (ternary == 0) return Mag();
  if (!mpfr_number_p(x)) return Mag::inf();
  if (mpfr_zero_p(x)) return Mag::pow2(mpfr_get_emin());
  return Mag::pow2(static_cast<int64_t>(mpfr_get_exp(x)) - mpfr_get_prec(x));
}

Ball Ball::from_int(const BigInt& v, prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN);
  b.rad_ = rounding_error(b.mid_, t);
  return b;
}

Ball Ball::from_si(long v, prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
  b.rad_ = rounding_error(b.mid_, t);
  return b;
}

Ball Ball::from_rational(const BigRational& q, prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
  b.rad_ = rounding_error(b.mid_, t);
  return b;
}

Ball Ball::from_double(double d) {
  Ball b(53);
  mpfr_set_d(b.mid_, d, MPFR_RNDN);
  return b;
}

Ball Ball::from_string(std::string_view text, prec_t prec) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t[");
  auto last = s.find_last_not_of(" \t]");
  if (first == std::string::npos) throw ParseError("empty ball string", 0);
  s = s.substr(first, last - first + 1);

  std::string mid_text = s;
  std::string rad_text;
  for (std::string_view sep : {"±", "+/-"}) {
    if (auto pos = s.find(sep); pos != std::string::npos) {
      mid_text = s.substr(0, pos);
      rad_text = s.substr(pos + sep.size());
      break;
    }
  }
  Ball b = from_rational(parse_rational(mid_text), prec);
  if (!rad_text.empty()) {
    BigRational r = parse_rational(rad_text);
    if (sgn(r) < 0) throw ParseError("negative radius in '" + std::string(text) + "'", 0);
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDU);
    b.add_error(Mag::from_mpfr(t));
    mpfr_clear(t);
  }
  return b;
}

bool Ball::contains_zero() const { return cmpabs_mag(mid_, rad_) <= 0; }

bool Ball::is_positive() const { return mpfr_sgn(mid_) > 0 && cmpabs_mag(mid_, rad_) > 0; }

bool Ball::is_negative() const { return mpfr_sgn(mid_) < 0 && cmpabs_mag(mid_, rad_) > 0; }

Mag Ball::abs_upper() const { return add_up(Mag::from_mpfr(mid_), rad_); }

Mag Ball::abs_lower() const { return sub_lower(Mag::from_mpfr_lower(mid_), rad_); }

double Ball::lower_double() const {
  double m = mpfr_get_d(mid_, MPFR_RNDD);
  double r = std::ldexp(rad_.mantissa(), static_cast<int>(std::clamp<int64_t>(rad_.exponent(), -2000, 2000)));
  if (rad_.is_inf()) return -std::numeric_limits<double>::infinity();
  return m - r;
}

double Ball::upper_double() const {
  double m = mpfr_get_d(mid_, MPFR_RNDU);
  double r = std::ldexp(rad_.mantissa(), static_cast<int>(std::clamp<int64_t>(rad_.exponent(), -2000, 2000)));
  if (rad_.is_inf()) return std::numeric_limits<double>::infinity();
  return m + r;
}

long Ball::rel_accuracy_bits(long cap) const {
  constexpr long kNone = -(1L << 40);
  if (rad_.is_zero()) return cap;
  if (rad_.is_inf() || !mpfr_number_p(mid_) || mpfr_zero_p(mid_)) return kNone;
  double lr = rad_.log2();
  long bits = static_cast<long>(mpfr_get_exp(mid_)) - 1 - static_cast<long>(std::ceil(lr));
  return std::min(cap, bits);
}

void Ball::round_to(prec_t prec) {
  int t = mpfr_prec_round(mid_, clamp_prec(prec), MPFR_RNDN);
  add_error(rounding_error(mid_, t));
}

namespace {

// Formats 0.DIGITS * 10^exp10 (DIGITS may carry a leading '-').
std::string format_decimal(std::string digits, long exp10, bool strip_zeros) {
  bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.erase(0, 1);
  long n = static_cast<long>(digits.size());
  std::string out;
  if (exp10 > -6 && exp10 <= 40) {
    if (exp10 <= 0) {
      out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else if (exp10 >= n) {
      out = digits + std::string(static_cast<size_t>(exp10 - n), '0');
    } else {
      out = digits.substr(0, static_cast<size_t>(exp10)) + "." + digits.substr(static_cast<size_t>(exp10));
    }
    if (strip_zeros && out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  } else {
    if (strip_zeros) {
      while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    }
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exp10 - 1);
  }
  return negative ? "-" + out : out;
}

std::string mpfr_decimal(mpfr_srcptr x, size_t ndigits, mpfr_rnd_t rnd, bool strip_zeros) {
  if (mpfr_zero_p(x)) return "0";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(x)) return "nan";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, ndigits, x, rnd);
  std::string digits(s);
  mpfr_free_str(s);
  return format_decimal(std::move(digits), static_cast<long>(e), strip_zeros);
}

}  // namespace

std::string Ball::to_string(int digits) const {
  if (rad_.is_zero()) {
    if (mpfr_integer_p(mid_) && mpfr_get_exp(mid_) < 4096) {
      mpz_class z;
      mpfr_get_z(z.get_mpz_t(), mid_, MPFR_RNDN);
      return z.get_str();
    }
    return mpfr_decimal(mid_, 0, MPFR_RNDN, true);
  }
  if (rad_.is_inf()) return mpfr_decimal(mid_, 6, MPFR_RNDN, false) + " ± inf";
  long nd = digits;
  if (nd <= 0) {
    long acc = rel_accuracy_bits(precision());
    nd = acc > 0 ? static_cast<long>(std::floor(static_cast<double>(acc) * 0.30102999566398120)) + 1 : 3;
    long maxd = static_cast<long>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
    nd = std::clamp(nd, 1L, std::max(1L, maxd));
  }
  mpfr_t r;
  mpfr_init2(r, 53);
  rad_.to_mpfr(r);
  std::string rs = mpfr_decimal(r, 3, MPFR_RNDU, false);
  mpfr_clear(r);
  return mpfr_decimal(mid_, static_cast<size_t>(nd), MPFR_RNDN, false) + " ± " + rs;
}

void add(Ball& r, const Ball& a, const Ball& b, prec_t prec) {
  prec = clamp_prec(prec);
  Mag rad = add_up(a.rad(), b.rad());
  with_output(r, &r == &a || &r == &b, prec, [&](Ball& out) {
    int t = mpfr_add(out.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void sub(Ball& r, const Ball& a, const Ball& b, prec_t prec) {
  prec = clamp_prec(prec);
  Mag rad = add_up(a.rad(), b.rad());
  with_output(r, &r == &a || &r == &b, prec, [&](Ball& out) {
    int t = mpfr_sub(out.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void mul(Ball& r, const Ball& a, const Ball& b, prec_t prec) {
  prec = clamp_prec(prec);
  Mag rad;
  if (!a.rad().is_zero() || !b.rad().is_zero()) {
    Mag am = Mag::from_mpfr(a.mid());
    Mag bm = Mag::from_mpfr(b.mid());
    rad = add_up(add_up(mul_up(am, b.rad()), mul_up(bm, a.rad())), mul_up(a.rad(), b.rad()));
  }
  with_output(r, &r == &a || &r == &b, prec, [&](Ball& out) {
    int t = mpfr_mul(out.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void mul_z(Ball& r, const BigInt& c, const Ball& b, prec_t prec) {
  prec = clamp_prec(prec);
  Mag rad = mul_up(Mag::from_mpz(c), b.rad());
  with_output(r, &r == &b, prec, [&](Ball& out) {
    int t = mpfr_mul_z(out.mid_mut(), b.mid(), c.get_mpz_t(), MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void mul_si(Ball& r, long c, const Ball& b, prec_t prec) {
  prec = clamp_prec(prec);
  Mag rad = mul_up(Mag::from_double(static_cast<double>(c)), b.rad());
  with_output(r, &r == &b, prec, [&](Ball& out) {
    int t = mpfr_mul_si(out.mid_mut(), b.mid(), c, MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void addmul_z(Ball& r, const BigInt& c, const Ball& b, prec_t prec) {
  if (sgn(c) == 0) {
    if (r.precision() != prec) r.round_to(prec);
    return;
  }
  prec = clamp_prec(prec);
  // c * mid(b) is formed exactly, so only the final addition rounds.
  prec_t exact = b.precision() + static_cast<prec_t>(bit_length(c)) + 1;
  mpfr_ptr prod = scratch(exact);
  mpfr_mul_z(prod, b.mid(), c.get_mpz_t(), MPFR_RNDN);
  Mag rad = add_up(r.rad(), mul_up(Mag::from_mpz(c), b.rad()));
  if (r.precision() == prec) {
    int t = mpfr_add(r.mid_mut(), r.mid(), prod, MPFR_RNDN);
    r.set_rad(add_up(rad, rounding_error(r.mid(), t)));
  } else {
    Ball out(prec);
    int t = mpfr_add(out.mid_mut(), r.mid(), prod, MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
    r.swap(out);
  }
}

void add_z(Ball& r, const Ball& a, const BigInt& c, prec_t prec) {
  prec = clamp_prec(prec);
  Mag rad = a.rad();
  with_output(r, &r == &a, prec, [&](Ball& out) {
    int t = mpfr_add_z(out.mid_mut(), a.mid(), c.get_mpz_t(), MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void div(Ball& r, const Ball& a, const Ball& b, prec_t prec) {
  prec = clamp_prec(prec);
  Mag bl = b.abs_lower();
  if (bl.is_zero()) {
    Ball out(prec);
    out.set_rad(Mag::inf());
    r.swap(out);
    return;
  }
  Mag rad;
  if (!a.rad().is_zero() || !b.rad().is_zero()) {
    Mag am = Mag::from_mpfr(a.mid());
    Mag bm = Mag::from_mpfr(b.mid());
    Mag bml = Mag::from_mpfr_lower(b.mid());
    Mag num = add_up(mul_up(am, b.rad()), mul_up(bm, a.rad()));
    rad = div_up(num, mul_lower(bml, bl));
  }
  with_output(r, &r == &a || &r == &b, prec, [&](Ball& out) {
    int t = mpfr_div(out.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void div_z(Ball& r, const Ball& a, const BigInt& c, prec_t prec) {
  prec = clamp_prec(prec);
  if (sgn(c) == 0) {
    Ball out(prec);
    out.set_rad(Mag::inf());
    r.swap(out);
    return;
  }
  Mag rad = div_up(a.rad(), Mag::from_mpz_lower(c));
  with_output(r, &r == &a, prec, [&](Ball& out) {
    int t = mpfr_div_z(out.mid_mut(), a.mid(), c.get_mpz_t(), MPFR_RNDN);
    out.set_rad(add_up(rad, rounding_error(out.mid(), t)));
  });
}

void neg(Ball& r, const Ball& a) {
  if (&r != &a) r = a;
  mpfr_neg(r.mid_mut(), r.mid(), MPFR_RNDN);
}

void mul_2exp(Ball& r, const Ball& a, long e) {
  if (&r != &a) r = a;
  mpfr_mul_2si(r.mid_mut(), r.mid(), e, MPFR_RNDN);
  r.set_rad(holo::mul_2exp(r.rad(), e));
}

void set_int(Ball& r, const BigInt& v, prec_t prec) { r = Ball::from_int(v, prec); }

void set_one(Ball& r, prec_t prec) {
  mpfr_set_prec(r.mid_mut(), clamp_prec(prec));
  mpfr_set_ui(r.mid_mut(), 1, MPFR_RNDN);
  r.set_rad(Mag());
}

Ball ball_add(const Ball& a, const Ball& b, prec_t prec) {
  Ball r;
  add(r, a, b, prec);
  return r;
}

Ball ball_sub(const Ball& a, const Ball& b, prec_t prec) {
  Ball r;
  sub(r, a, b, prec);
  return r;
}

Ball ball_mul(const Ball& a, const Ball& b, prec_t prec) {
  Ball r;
  mul(r, a, b, prec);
  return r;
}

Ball ball_div(const Ball& a, const Ball& b, prec_t prec) {
  Ball r;
  div(r, a, b, prec);
  return r;
}

Ball ball_scalar_mul(const BigInt& c, const Ball& b, prec_t prec) {
  Ball r;
  mul_z(r, c, b, prec);
  return r;
}

namespace {

mpq_class mid_to_mpq(mpfr_srcptr x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

}  // namespace

bool ball_contains(const Ball& a, const BigRational& x) {
  if (a.rad().is_inf()) return true;
  if (!mpfr_number_p(a.mid())) return false;
  mpq_class d = mid_to_mpq(a.mid()) - x;
  return abs(d) <= a.rad().to_mpq();
}

bool ball_contains(const Ball& a, const Ball& b) {
  if (a.rad().is_inf()) return true;
  if (!b.is_finite() || !a.is_finite()) return false;
  mpq_class d = abs(mid_to_mpq(a.mid()) - mid_to_mpq(b.mid()));
  return d + b.rad().to_mpq() <= a.rad().to_mpq();
}

bool ball_overlaps(const Ball& a, const Ball& b) {
  if (a.rad().is_inf() || b.rad().is_inf()) return true;
  if (!a.is_finite() || !b.is_finite()) return false;
  mpq_class d = abs(mid_to_mpq(a.mid()) - mid_to_mpq(b.mid()));
  return d <= a.rad().to_mpq() + b.rad().to_mpq();
}

Ball ball_exp(const Ball& a, prec_t prec) {
  Ball r(prec);
  if (!a.is_finite()) {
    r.set_rad(Mag::inf());
    return r;
  }
  int t = mpfr_exp(r.mid_mut(), a.mid(), MPFR_RNDN);
  Mag err = rounding_error(r.mid(), t);
  Mag rad = err;
  if (!a.rad().is_zero()) {
    Mag ym = add_up(Mag::from_mpfr(r.mid()), err);
    rad = add_up(rad, mul_up(ym, expm1_up(a.rad())));
  }
  r.set_rad(rad);
  return r;
}

Ball ball_log(const Ball& a, prec_t prec) {
  if (!a.is_finite() || !a.is_positive()) throw DomainError("log of a ball not strictly positive");
  Ball r(prec);
  int t = mpfr_log(r.mid_mut(), a.mid(), MPFR_RNDN);
  Mag rad = rounding_error(r.mid(), t);
  if (!a.rad().is_zero()) rad = add_up(rad, div_up(a.rad(), a.abs_lower()));
  r.set_rad(rad);
  return r;
}

Ball ball_sqrt(const Ball& a, prec_t prec) {
  if (!a.is_finite() || a.is_negative() || mpfr_sgn(a.mid()) < 0) {
    throw DomainError("sqrt of a ball with negative members");
  }
  if (a.is_exact_zero()) return Ball(prec);
  Ball r(prec);
  if (!a.is_positive()) {
    // Interval [0, mid + rad] when mid <= rad.
    mpfr_t hi;
    mpfr_init2(hi, 53);
    a.abs_upper().to_mpfr(hi);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_div_2ui(hi, hi, 1, MPFR_RNDU);
    mpfr_set(r.mid_mut(), hi, MPFR_RNDN);
    r.set_rad(Mag::from_mpfr(hi));
    r.add_error(rounding_error(r.mid(), 1));
    mpfr_clear(hi);
    return r;
  }
  int t = mpfr_sqrt(r.mid_mut(), a.mid(), MPFR_RNDN);
  Mag rad = rounding_error(r.mid(), t);
  if (!a.rad().is_zero()) {
    // |sqrt(t) - sqrt(m)| <= r / sqrt(m)
    mpfr_t lo;
    mpfr_init2(lo, 53);
    mpfr_sqrt(lo, a.mid(), MPFR_RNDD);
    rad = add_up(rad, div_up(a.rad(), Mag::from_mpfr_lower(lo)));
    mpfr_clear(lo);
  }
  r.set_rad(rad);
  return r;
}

Ball ball_pow(const Ball& a, const Ball& b, prec_t prec) {
  long extra = std::max<long>(0, static_cast<long>(mpfr_get_exp(b.mid())));
  prec_t wp = prec + 16 + extra;
  Ball l = ball_log(a, wp);
  Ball e;
  mul(e, b, l, wp);
  long ex = mpfr_zero_p(e.mid()) ? 0 : std::max<long>(0, static_cast<long>(mpfr_get_exp(e.mid())));
  if (ex > 0) {
    l = ball_log(a, wp + ex);
    mul(e, b, l, wp + ex);
  }
  return ball_exp(e, prec);
}

Ball ball_const_pi(prec_t prec) {
  Ball r(prec);
  int t = mpfr_const_pi(r.mid_mut(), MPFR_RNDN);
  r.set_rad(rounding_error(r.mid(), t));
  return r;
}

Ball ball_const_log2(prec_t prec) {
  Ball r(prec);
  int t = mpfr_const_log2(r.mid_mut(), MPFR_RNDN);
  r.set_rad(rounding_error(r.mid(), t));
  return r;
}

}  // namespace holo
