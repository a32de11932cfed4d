#include "holonomic/poly/hpoly.hpp"

#include <algorithm>
#include <limits>

#include "holonomic/poly/kronecker.hpp"

namespace holo {

namespace {

HPoly<Ball> mul_schoolbook(const HPoly<Ball>& a, const HPoly<Ball>& b, prec_t prec, OpCounters& ctr) {
  HPoly<Ball> c(a.size() + b.size() - 1, Ball(prec));
  Ball t(prec);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exact_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_exact_zero()) continue;
      mul(t, a[i], b[j], prec);
      add(c[i + j], c[i + j], t, prec);
      ++ctr.nonscalar;
      ++ctr.additions;
    }
  }
  return c;
}

// mid_i ~ ints[i] * 2^shift with |mid_i - ints[i] 2^shift| <= err[i].
struct Scaled {
  std::vector<BigInt> ints;
  std::vector<Mag> err;
  std::vector<Mag> mag;
  long shift = 0;
};

Scaled scale_to_integers(const HPoly<Ball>& a, prec_t prec) {
  Scaled s;
  long top = std::numeric_limits<long>::min();
  for (const auto& c : a) {
    if (!mpfr_zero_p(c.mid())) top = std::max(top, static_cast<long>(mpfr_get_exp(c.mid())));
  }
  s.ints.resize(a.size());
  s.err.resize(a.size());
  s.mag.resize(a.size());
  if (top == std::numeric_limits<long>::min()) {
    for (size_t i = 0; i < a.size(); ++i) s.err[i] = a[i].rad();
    return s;
  }
  s.shift = top - static_cast<long>(prec) - 16;
  mpfr_t t;
  mpfr_init2(t, 64);
  for (size_t i = 0; i < a.size(); ++i) {
    s.err[i] = a[i].rad();
    if (mpfr_zero_p(a[i].mid())) continue;
    mpfr_set_prec(t, mpfr_get_prec(a[i].mid()));
    mpfr_mul_2si(t, a[i].mid(), -s.shift, MPFR_RNDN);
    if (!mpfr_integer_p(t)) s.err[i] = add_up(s.err[i], Mag::pow2(s.shift - 1));
    mpfr_get_z(s.ints[i].get_mpz_t(), t, MPFR_RNDN);
    s.mag[i] = mul_2exp(Mag::from_mpz(s.ints[i]), s.shift);
  }
  mpfr_clear(t);
  return s;
}

HPoly<Ball> mul_scaled(const HPoly<Ball>& a, const HPoly<Ball>& b, prec_t prec, OpCounters& ctr) {
  Scaled sa = scale_to_integers(a, prec);
  Scaled sb = scale_to_integers(b, prec);
  size_t n = a.size() + b.size() - 1;
  std::vector<BigInt> prod = kronecker_product(sa.ints, sb.ints);
  prod.resize(n);
  std::vector<Mag> rad(n);
  bool any_err_a = std::any_of(sa.err.begin(), sa.err.end(), [](const Mag& m) { return !m.is_zero(); });
  bool any_err_b = std::any_of(sb.err.begin(), sb.err.end(), [](const Mag& m) { return !m.is_zero(); });
  if (any_err_a || any_err_b) {
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < b.size(); ++j) {
        Mag e = add_up(mul_up(sa.mag[i], sb.err[j]), mul_up(sa.err[i], sb.mag[j]));
        e = add_up(e, mul_up(sa.err[i], sb.err[j]));
        rad[i + j] = add_up(rad[i + j], e);
      }
    }
  }
  HPoly<Ball> c(n, Ball(prec));
  for (size_t k = 0; k < n; ++k) {
    int t = mpfr_set_z(c[k].mid_mut(), prod[k].get_mpz_t(), MPFR_RNDN);
    mpfr_mul_2si(c[k].mid_mut(), c[k].mid(), sa.shift + sb.shift, MPFR_RNDN);
    c[k].set_rad(add_up(rad[k], rounding_error(c[k].mid(), t)));
  }
  ctr.nonscalar += n;
  ctr.additions += n;
  return c;
}

bool all_exact_zero(const HPoly<Ball>& a) {
  return std::all_of(a.begin(), a.end(), [](const Ball& b) { return b.is_exact_zero(); });
}

}  // namespace

HPoly<Ball> hpoly_mul(const HPoly<Ball>& a, const HPoly<Ball>& b, prec_t prec, OpCounters& ctr) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kHPolySchoolbookThreshold) return mul_schoolbook(a, b, prec, ctr);
  return mul_scaled(a, b, prec, ctr);
}

HPoly<ComplexBall> hpoly_mul(const HPoly<ComplexBall>& a, const HPoly<ComplexBall>& b, prec_t prec,
                             OpCounters& ctr) {
  if (a.empty() || b.empty()) return {};
  auto split = [](const HPoly<ComplexBall>& p, HPoly<Ball>& re, HPoly<Ball>& im) {
    re.reserve(p.size());
    im.reserve(p.size());
    for (const auto& c : p) {
      re.push_back(c.re);
      im.push_back(c.im);
    }
  };
  HPoly<Ball> ar, ai, br, bi;
  split(a, ar, ai);
  split(b, br, bi);
  size_t n = a.size() + b.size() - 1;
  OpCounters inner;
  HPoly<Ball> re = hpoly_mul(ar, br, prec, inner);
  HPoly<Ball> im(n, Ball(prec));
  bool a_real = all_exact_zero(ai);
  bool b_real = all_exact_zero(bi);
  if (!a_real && !b_real) {
    HPoly<Ball> t = hpoly_mul(ai, bi, prec, inner);
    for (size_t k = 0; k < n; ++k) sub(re[k], re[k], t[k], prec);
  }
  if (!b_real) im = hpoly_add(im, hpoly_mul(ar, bi, prec, inner), prec, inner);
  if (!a_real) im = hpoly_add(im, hpoly_mul(ai, br, prec, inner), prec, inner);
  ctr.nonscalar += std::min(a.size(), b.size()) <= kHPolySchoolbookThreshold ? a.size() * b.size() : n;
  ctr.additions += inner.additions;
  HPoly<ComplexBall> c;
  c.reserve(n);
  for (size_t k = 0; k < n; ++k) c.emplace_back(std::move(re[k]), std::move(im[k]));
  return c;
}

}  // namespace holo
