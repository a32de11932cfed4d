#include "holonomic/special/gamma.hpp"

#include <cmath>

#include "holonomic/engines/engines.hpp"
#include "holonomic/special/bernoulli.hpp"
#include "holonomic/special/rising.hpp"

namespace holo {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

Mag mag_pow(Mag b, uint64_t e) {
  Mag r = Mag::pow2(0);
  while (e > 0) {
    if (e & 1) r = mul_up(r, b);
    b = mul_up(b, b);
    e >>= 1;
  }
  return r;
}

// Least N >= 1 with the remainder bound below 2^-target, or 0 if the bound
// starts growing first.
uint64_t stirling_terms(double X, double target) {
  double prev = INFINITY;
  for (uint64_t N = 1;; ++N) {
    double b = stirling_remainder_log2(N, X);
    if (b < -target) return N;
    if (b > prev) return 0;
    prev = b;
  }
}

Ball shift_ball(const Ball& x, long j, prec_t prec) {
  Ball r(prec);
  add_z(r, x, BigInt(j), prec);
  return r;
}

GammaResult finish(Ball value, prec_t p, GammaResult r) {
  r.accuracy_bits = std::min<long>(value.rel_accuracy_bits(static_cast<long>(p)), static_cast<long>(p));
  r.value = std::move(value);
  return r;
}

}  // namespace

void check_not_pole(const Ball& x) {
  if (!x.is_finite()) throw DomainError("argument is not finite");
  double lo = x.lower_double();
  double hi = x.upper_double();
  if (lo > 0) return;
  if (std::ceil(lo) <= std::min(hi, 0.0)) throw DomainError("argument contains a pole of the gamma function");
}

double stirling_remainder_log2(uint64_t N, double X) {
  double n2 = 2.0 * static_cast<double>(N);
  double ln = std::log(4.0) + std::lgamma(n2 + 1.0) - n2 * std::log(2.0 * M_PI) - std::log(n2 * (n2 - 1.0)) -
              (n2 - 1.0) * std::log(X);
  return ln / kLn2;
}

StirlingParams stirling_params(const Ball& x, prec_t p, double shift_scale) {
  if (p < 2) throw InvalidArgument("precision must be at least 2 bits");
  check_not_pole(x);
  StirlingParams s;
  s.p = p;
  double target = shift_scale * kStirlingBeta * static_cast<double>(p);
  double mid = x.mid_double();
  s.n = mid >= target ? 0 : static_cast<uint64_t>(std::ceil(target - mid));
  while (true) {
    double X = x.lower_double() + static_cast<double>(s.n);
    if (X > 0.5) {
      uint64_t N = stirling_terms(X, static_cast<double>(p) + 2.0);
      if (N > 0) {
        s.N = N;
        return s;
      }
    }
    s.n += 1 + s.n / 8;
  }
}

GammaResult gamma_stirling(const Ball& x, prec_t p, const GammaOptions& opt) {
  StirlingParams sp = stirling_params(x, p, opt.shift_scale);
  if (opt.shift) {
    sp.n = *opt.shift;
    double X = x.lower_double() + static_cast<double>(sp.n);
    uint64_t N = X > 0.5 ? stirling_terms(X, static_cast<double>(p) + 2.0) : 0;
    if (N == 0) throw InvalidArgument("shift too small for the requested precision");
    sp.N = N;
  }
  GammaResult out;
  out.n = sp.n;
  out.N = sp.N;
  double Xd = x.mid_double() + static_cast<double>(sp.n);
  prec_t wp = p + 24 + static_cast<prec_t>(std::ceil(std::log2(Xd * std::log(Xd + 1.0) + 2.0)));

  Ball X = shift_ball(x, static_cast<long>(sp.n), wp);
  Ball logX = ball_log(X, wp);
  Ball L = ball_mul(ball_sub(X, Ball::from_rational(BigRational(1, 2), wp), wp), logX, wp);
  L = ball_sub(L, X, wp);
  Ball two_pi(wp);
  mul_2exp(two_pi, ball_const_pi(wp), 1);
  Ball half_log(wp);
  mul_2exp(half_log, ball_log(two_pi, wp), -1);
  L = ball_add(L, half_log, wp);

  auto bern = bernoulli_even(2 * sp.N);
  auto coeff = [&](uint64_t k) {
    BigRational c = (*bern)[k] / BigRational(BigInt(static_cast<unsigned long>(2 * k * (2 * k - 1))));
    return c;
  };
  Ball y = ball_div(Ball::from_si(1, wp), X, wp);
  if (sp.N >= 2) {
    Ball y2 = ball_mul(y, y, wp);
    Ball acc = Ball::from_rational(coeff(sp.N - 1), wp);
    for (uint64_t k = sp.N - 1; k-- > 1;) {
      mul(acc, acc, y2, wp);
      add(acc, acc, Ball::from_rational(coeff(k), wp), wp);
      ++out.counters.nonscalar;
    }
    mul(acc, acc, y, wp);
    L = ball_add(L, acc, wp);
  }
  BigRational cN = coeff(sp.N);
  Mag cn = div_up(Mag::from_mpz(cN.get_num()), Mag::from_mpz_lower(cN.get_den()));
  L.add_error(mul_up(cn, mag_pow(y.abs_upper(), 2 * sp.N - 1)));

  Ball g = ball_exp(L, wp);
  if (sp.n > 0) {
    EvalResult<Ball> rf = rising_factorial(x, sp.n, wp, opt.engine);
    out.counters += rf.counters;
    g = ball_div(g, rf.matrix.a[0], wp);
  }
  return finish(std::move(g), p, std::move(out));
}

RecMatrix incomplete_gamma_matrix(uint64_t N) {
  BiPoly q = BiPoly::constant(1) + BiPoly::k() + BiPoly::x();
  return RecMatrix(2, {q, q, BiPoly(), BiPoly::constant(BigInt(static_cast<unsigned long>(N)))});
}

GammaResult gamma_1f1(const Ball& x, prec_t p, const GammaOptions& opt) {
  if (p < 2) throw InvalidArgument("precision must be at least 2 bits");
  check_not_pole(x);
  prec_t wp = p + 32 + 2 * static_cast<prec_t>(std::ceil(std::log2(static_cast<double>(p) + 2.0)));
  long j = static_cast<long>(std::floor(x.mid_double())) - 1;
  Ball y = shift_ball(x, -j, wp);
  double s_hi = std::max(y.upper_double(), 1.0);
  double z_lo = y.lower_double();
  if (!(z_lo > 0)) throw DomainError("argument too wide for the 1F1 method");

  double target = (static_cast<double>(p) + 10.0) * kLn2;
  uint64_t N = std::max<uint64_t>(2, static_cast<uint64_t>(target));
  auto upper_tail = [&](double Nd) { return (s_hi - 1.0) * std::log(Nd) - Nd - std::log1p(-(s_hi - 1.0) / Nd); };
  while (upper_tail(static_cast<double>(N)) > -target) ++N;
  if (opt.limit) N = *opt.limit;
  double Nd = static_cast<double>(N);
  auto series_tail = [&](double nd) {
    return s_hi * std::log(Nd) - Nd + std::log(2.0) + nd * std::log(Nd) - std::lgamma(nd + 1.0) - std::log(z_lo);
  };
  uint64_t n = std::max<uint64_t>(static_cast<uint64_t>(std::ceil(M_E * Nd)), 2 * N);
  while (series_tail(static_cast<double>(n)) > -target) ++n;
  if (opt.terms) n = std::max(*opt.terms, 2 * N);

  GammaResult out;
  out.n = n;
  out.N = N;
  EvalResult<Ball> res = evaluate(incomplete_gamma_matrix(N), y, n, wp, opt.engine);
  out.counters = res.counters;
  Ball s = ball_div(res.matrix(0, 1), ball_mul(y, res.matrix(0, 0), wp), wp);

  BigInt Nn, nfac;
  mpz_ui_pow_ui(Nn.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
  mpz_fac_ui(nfac.get_mpz_t(), static_cast<unsigned long>(n));
  Mag tail = div_up(mul_2exp(Mag::from_mpz(Nn), 1), mul_lower(Mag::from_mpz_lower(nfac), Mag::from_double_lower(z_lo)));
  s.add_error(tail);

  Ball logN = ball_log(Ball::from_si(static_cast<long>(N), wp), wp);
  Ball e = ball_sub(ball_mul(y, logN, wp), Ball::from_si(static_cast<long>(N), wp), wp);
  Ball g = ball_mul(ball_exp(e, wp), s, wp);

  Ball a = Ball::from_double(s_hi - 1.0);
  Ball bnd = ball_exp(ball_sub(ball_mul(a, ball_log(Ball::from_si(static_cast<long>(N), 64), 64), 64),
                               Ball::from_si(static_cast<long>(N), 64), 64),
                      64);
  bnd = ball_div(bnd, ball_sub(Ball::from_si(1, 64), ball_div(a, Ball::from_si(static_cast<long>(N), 64), 64), 64), 64);
  g.add_error(bnd.abs_upper());

  if (j > 0) {
    EvalOptions naive;
    naive.algorithm = Algorithm::naive;
    g = ball_mul(g, rising_factorial(y, static_cast<uint64_t>(j), wp, naive).matrix.a[0], wp);
  } else if (j < 0) {
    EvalOptions naive;
    naive.algorithm = Algorithm::naive;
    g = ball_div(g, rising_factorial(x, static_cast<uint64_t>(-j), wp, naive).matrix.a[0], wp);
  }
  return finish(std::move(g), p, std::move(out));
}

}  // namespace holo
