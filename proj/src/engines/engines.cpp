#include "holonomic/engines/engines.hpp"

#include <algorithm>
#include <optional>

#include "holonomic/poly/hpoly.hpp"
#include "holonomic/poly/multipoint.hpp"

namespace holo {

namespace {

std::optional<BigRational> exact_value(const Ball& z) {
  if (!z.is_exact() || !mpfr_number_p(z.mid())) return std::nullopt;
  BigRational q;
  mpfr_get_q(q.get_mpq_t(), z.mid());
  return q;
}

std::optional<BigRational> exact_value(const ComplexBall& z) {
  if (!z.im.is_exact_zero()) return std::nullopt;
  return exact_value(z.re);
}

void div_int(Ball& r, const BigInt& c, prec_t prec) { div_z(r, r, c, prec); }

void div_int(ComplexBall& r, const BigInt& c, prec_t prec) {
  div_z(r.re, r.re, c, prec);
  div_z(r.im, r.im, c, prec);
}

template <class H>
void push_left(std::optional<HMatrix<H>>& V, HMatrix<H> S, prec_t prec, OpCounters& ctr) {
  if (!V) {
    V = std::move(S);
  } else {
    V = matmul_h(S, *V, prec, ctr);
  }
}

template <class H>
HMatrix<H> finish(std::optional<HMatrix<H>>& V, size_t r, prec_t prec) {
  return V ? std::move(*V) : identity_h<H>(r, prec);
}

template <class H>
HMatrix<H> eval_zpoly_matrix(const ZPolyMatrix& U, const PowerTable<H>& powers, prec_t prec, OpCounters& ctr) {
  HMatrix<H> S(U.r, H(prec));
  for (size_t e = 0; e < U.a.size(); ++e) {
    if (!U.a[e].is_zero()) S.a[e] = uni_eval_powertable(U.a[e], powers, prec, ctr);
  }
  return S;
}

size_t coeff_count(const ZPolyMatrix& U) {
  size_t c = 0;
  for (const auto& p : U.a) c += p.length();
  return c;
}

// M(x, start + len - 1) ... M(x, start) over Z[x].
ZPolyMatrix block_product(const RecMatrix& M, uint64_t start, uint64_t len) {
  std::vector<ZPolyMatrix> f;
  f.reserve(len);
  for (uint64_t j = 0; j < len; ++j) f.push_back(eval_factor(M, BigInt(static_cast<unsigned long>(start + j))).m);
  return product_binsplit_exact(f);
}

template <class H>
void naive_tail(std::optional<HMatrix<H>>& V, const RecMatrix& M, uint64_t from, uint64_t to,
                const PowerTable<H>& powers, prec_t prec, OpCounters& ctr) {
  for (uint64_t i = from; i < to; ++i) {
    push_left(V, eval_factor_h(M, BigInt(static_cast<unsigned long>(i)), powers, prec, ctr), prec, ctr);
  }
}

long xdeg(const RecMatrix& M) { return std::max(M.degree_x(), 0L); }

template <class H>
H ps_eval(const ZPoly& p, const PowerTable<H>& powers, uint64_t s, prec_t prec, OpCounters& ctr) {
  if (p.is_zero()) return H(prec);
  size_t chunks = (p.length() + s - 1) / s;
  auto chunk = [&](size_t j) {
    size_t lo = j * s;
    size_t hi = std::min(p.length(), lo + s);
    ZPoly c(std::vector<BigInt>(p.coeffs.begin() + static_cast<long>(lo), p.coeffs.begin() + static_cast<long>(hi)));
    return uni_eval_powertable(c, powers, prec, ctr);
  };
  H acc = chunk(chunks - 1);
  for (size_t j = chunks - 1; j-- > 0;) {
    mul(acc, acc, powers[s], prec);
    ++ctr.nonscalar;
    add(acc, acc, chunk(j), prec);
    ++ctr.additions;
  }
  return acc;
}

template <class H>
Matrix<HPoly<H>> hpoly_matmul(const Matrix<HPoly<H>>& x, const Matrix<HPoly<H>>& y, prec_t prec, OpCounters& ctr) {
  Matrix<HPoly<H>> z(x.r, HPoly<H>());
  for (size_t i = 0; i < x.r; ++i) {
    for (size_t j = 0; j < x.r; ++j) {
      for (size_t k = 0; k < x.r; ++k) {
        if (x(i, k).empty() || y(k, j).empty()) continue;
        z(i, j) = hpoly_add(z(i, j), hpoly_mul(x(i, k), y(k, j), prec, ctr), prec, ctr);
      }
    }
  }
  return z;
}

template <class H>
HMatrix<H> binsplit_rational(const RecMatrix& M, const BigRational& q, uint64_t n, const EvalPlan& plan,
                             OpCounters& ctr) {
  prec_t prec = plan.working_prec();
  if (n == 0) return identity_h<H>(M.order(), prec);
  const BigInt& a = q.get_num();
  const BigInt& b = q.get_den();
  size_t d = static_cast<size_t>(xdeg(M));
  std::vector<BigInt> apow(d + 1, BigInt(1)), bpow(d + 1, BigInt(1));
  for (size_t j = 1; j <= d; ++j) {
    apow[j] = apow[j - 1] * a;
    bpow[j] = bpow[j - 1] * b;
  }
  std::vector<IntMatrix> factors;
  factors.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    EvaluatedFactor f = eval_factor(M, BigInt(static_cast<unsigned long>(i)));
    IntMatrix F(M.order(), BigInt(0));
    for (size_t e = 0; e < F.a.size(); ++e) {
      const ZPoly& p = f.m.a[e];
      for (size_t j = 0; j < p.length(); ++j) F.a[e] += p[j] * apow[j] * bpow[d - j];
      ctr.coeff_ops += p.length();
    }
    factors.push_back(std::move(F));
  }
  IntMatrix P = product_binsplit_exact(factors);
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(d * n));
  HMatrix<H> out(M.order(), H(prec));
  for (size_t e = 0; e < P.a.size(); ++e) {
    set_int(out.a[e], P.a[e], prec);
    if (scale != 1) div_int(out.a[e], scale, prec);
  }
  return out;
}

template <class H>
HMatrix<H> run_engine(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr,
                      const EvalExtras& extras) {
  switch (plan.algorithm) {
    case Algorithm::naive:
      return eval_naive(M, z, n, plan, ctr);
    case Algorithm::binsplit_exact:
      if (extras.exact_z) return binsplit_rational<H>(M, *extras.exact_z, n, plan, ctr);
      return eval_binsplit_exact(M, z, n, plan, ctr);
    case Algorithm::multipoint:
      return eval_multipoint(M, z, n, plan, ctr);
    case Algorithm::rect_ps:
      return eval_rect_ps(M, z, n, plan, ctr);
    case Algorithm::rect_split:
      return eval_rect_split(M, z, n, plan, ctr);
    case Algorithm::rect_split_taylor:
      return eval_rect_split_taylor(M, z, n, plan, ctr);
    case Algorithm::rect_delta:
      return eval_rect_delta(M, z, n, plan, ctr, extras.delta);
  }
  throw InvalidArgument("unknown algorithm");
}

BigInt product_range(std::vector<BigInt>& v, size_t lo, size_t hi) {
  if (hi - lo == 1) return v[lo];
  size_t mid = lo + (hi - lo) / 2;
  return product_range(v, lo, mid) * product_range(v, mid, hi);
}

// prod_{i<n} den(i) for a denominator free of x, checking each factor.
BigInt exact_den_product(const BiPoly& den, uint64_t n) {
  ZPoly dk = den.eval_x(BigInt(0));
  std::vector<BigInt> vals;
  vals.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    BigInt v = horner(dk, BigInt(static_cast<unsigned long>(i)));
    if (sgn(v) == 0) throw DenominatorError("denominator vanishes at index " + std::to_string(i), i);
    vals.push_back(std::move(v));
  }
  if (vals.empty()) return BigInt(1);
  return product_range(vals, 0, vals.size());
}

}  // namespace

template <class H>
HMatrix<H> eval_naive(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr) {
  return product_naive(M.numerator(), z, 0, n, plan.working_prec(), ctr).num;
}

template <class H>
HMatrix<H> eval_binsplit_exact(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr) {
  auto q = exact_value(z);
  if (!q) throw InvalidArgument("binsplit-exact needs an exact rational parameter");
  return binsplit_rational<H>(M, *q, n, plan, ctr);
}

template <class H>
HMatrix<H> eval_multipoint(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr) {
  prec_t prec = plan.working_prec();
  RecMatrix A = M.numerator();
  size_t r = A.order();
  uint64_t m = std::max<uint64_t>(1, plan.m);
  uint64_t w = n / m;
  long d = xdeg(A);
  PowerTable<H> powers = PowerTable<H>::build(z, d, prec, ctr);
  std::optional<HMatrix<H>> V;
  if (w > 0) {
    std::vector<Matrix<HPoly<H>>> T;
    T.reserve(m);
    for (uint64_t j = 0; j < m; ++j) {
      RecMatrix S = A.shift_k(BigInt(static_cast<unsigned long>(j)));
      Matrix<HPoly<H>> t(r, HPoly<H>());
      for (size_t e = 0; e < r * r; ++e) {
        const BiPoly& p = S.entries()[e];
        HPoly<H> hp;
        for (size_t b = 0; b < p.cols(); ++b) hp.push_back(uni_eval_powertable(p.k_column(b), powers, prec, ctr));
        t.a[e] = std::move(hp);
      }
      T.push_back(std::move(t));
    }
    Matrix<HPoly<H>> U = product_binsplit(T, 0, T.size(), [&](const Matrix<HPoly<H>>& l, const Matrix<HPoly<H>>& rr) {
      return hpoly_matmul(l, rr, prec, ctr);
    });
    T.clear();
    std::vector<BigInt> points;
    points.reserve(w);
    for (uint64_t i = 0; i < w; ++i) points.emplace_back(static_cast<unsigned long>(i * m));
    ProductTree tree(points);
    BallCoeffOps<H> ops{prec, &ctr};
    std::vector<std::vector<H>> vals(r * r);
    uint64_t live = 0;
    for (size_t e = 0; e < r * r; ++e) {
      live += U.a[e].size();
      if (!U.a[e].empty()) vals[e] = multipoint_eval(U.a[e], tree, ops);
    }
    ctr.observe_live(live + w * r * r);
    for (uint64_t i = 0; i < w; ++i) {
      HMatrix<H> S(r, H(prec));
      for (size_t e = 0; e < r * r; ++e) {
        if (!vals[e].empty()) S.a[e] = std::move(vals[e][i]);
      }
      push_left(V, std::move(S), prec, ctr);
    }
  }
  naive_tail(V, A, w * m, n, powers, prec, ctr);
  return finish(V, r, prec);
}

template <class H>
HMatrix<H> eval_rect_ps(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr) {
  prec_t prec = plan.working_prec();
  RecMatrix A = M.numerator();
  uint64_t s = std::max<uint64_t>(1, plan.m);
  uint64_t len = std::max<uint64_t>(1, plan.subproduct);
  PowerTable<H> powers = PowerTable<H>::build(z, static_cast<long>(s), prec, ctr);
  std::optional<HMatrix<H>> V;
  for (uint64_t b0 = 0; b0 < n; b0 += len) {
    ZPolyMatrix U = block_product(A, b0, std::min(len, n - b0));
    ctr.observe_live(coeff_count(U) + powers.powers.size());
    HMatrix<H> S(A.order(), H(prec));
    for (size_t e = 0; e < U.a.size(); ++e) S.a[e] = ps_eval(U.a[e], powers, s, prec, ctr);
    push_left(V, std::move(S), prec, ctr);
  }
  return finish(V, A.order(), prec);
}

template <class H>
HMatrix<H> eval_rect_split(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr) {
  prec_t prec = plan.working_prec();
  RecMatrix A = M.numerator();
  uint64_t m = std::max<uint64_t>(1, plan.m);
  uint64_t w = n / m;
  PowerTable<H> powers = PowerTable<H>::build(z, static_cast<long>(m) * xdeg(A), prec, ctr);
  std::optional<HMatrix<H>> V;
  for (uint64_t i = 0; i < w; ++i) {
    ZPolyMatrix U = block_product(A, i * m, m);
    ctr.observe_live(2 * coeff_count(U) + powers.powers.size() + 2 * A.order() * A.order());
    push_left(V, eval_zpoly_matrix(U, powers, prec, ctr), prec, ctr);
  }
  naive_tail(V, A, w * m, n, powers, prec, ctr);
  return finish(V, A.order(), prec);
}

template <class H>
HMatrix<H> eval_rect_split_taylor(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan,
                                  OpCounters& ctr) {
  prec_t prec = plan.working_prec();
  RecMatrix A = M.numerator();
  uint64_t m = std::max<uint64_t>(1, plan.m);
  if (!shift_symmetric(A, m)) {
    throw InvalidArgument("matrix does not satisfy M(x, k+m) = M(x+m, k); use rect-split");
  }
  uint64_t w = n / m;
  PowerTable<H> powers = PowerTable<H>::build(z, static_cast<long>(m) * xdeg(A), prec, ctr);
  std::optional<HMatrix<H>> V;
  ZPolyMatrix U;
  BigInt shift(static_cast<unsigned long>(m));
  for (uint64_t i = 0; i < w; ++i) {
    if (i == 0) {
      U = block_product(A, 0, m);
    } else {
      for (auto& p : U.a) p = taylor_shift(p, shift);
    }
    ctr.observe_live(coeff_count(U) + powers.powers.size() + 2 * A.order() * A.order());
    push_left(V, eval_zpoly_matrix(U, powers, prec, ctr), prec, ctr);
  }
  naive_tail(V, A, w * m, n, powers, prec, ctr);
  return finish(V, A.order(), prec);
}

template <class H>
HMatrix<H> eval_rect_delta(const RecMatrix& M, const H& z, uint64_t n, const EvalPlan& plan, OpCounters& ctr,
                           const Matrix<BiPoly>* delta) {
  prec_t prec = plan.working_prec();
  RecMatrix A = M.numerator();
  size_t r = A.order();
  uint64_t m = std::max<uint64_t>(1, plan.m);
  uint64_t w = n / m;
  PowerTable<H> powers = PowerTable<H>::build(z, static_cast<long>(m) * xdeg(A), prec, ctr);
  std::optional<HMatrix<H>> V;
  if (w > 0) {
    ZPolyMatrix W0;
    Matrix<BiPoly> D;
    if (delta) {
      if (delta->r != r) throw InvalidArgument("precomputed difference has the wrong order");
      D = *delta;
      W0 = block_product(A, 0, m);
    } else {
      Matrix<BiPoly> W = block_matrix(A, m);
      W0 = ZPolyMatrix(r, ZPoly());
      D = Matrix<BiPoly>(r, BiPoly());
      for (size_t e = 0; e < r * r; ++e) {
        W0.a[e] = W.a[e].eval_k(BigInt(0));
        D.a[e] = W.a[e].shift_k(BigInt(static_cast<unsigned long>(m))) - W.a[e];
      }
    }
    uint64_t live = coeff_count(W0) + powers.powers.size() + 2 * r * r;
    for (const auto& p : D.a) live += p.rows() * p.cols();
    ctr.observe_live(live);
    HMatrix<H> S = eval_zpoly_matrix(W0, powers, prec, ctr);
    V = S;
    for (uint64_t i = 1; i < w; ++i) {
      BigInt k0(static_cast<unsigned long>((i - 1) * m));
      for (size_t e = 0; e < r * r; ++e) {
        if (D.a[e].is_zero()) continue;
        ZPoly de = D.a[e].eval_k(k0);
        if (de.is_zero()) continue;
        add(S.a[e], S.a[e], uni_eval_powertable(de, powers, prec, ctr), prec);
        ++ctr.additions;
      }
      V = matmul_h(S, *V, prec, ctr);
    }
  }
  naive_tail(V, A, w * m, n, powers, prec, ctr);
  return finish(V, r, prec);
}

Matrix<BiPoly> block_matrix(const RecMatrix& M, uint64_t m) {
  if (m == 0) throw InvalidArgument("block length must be positive");
  std::vector<Matrix<BiPoly>> f;
  f.reserve(m);
  for (uint64_t j = 0; j < m; ++j) f.push_back(M.numerator().shift_k(BigInt(static_cast<unsigned long>(j))).as_bipoly_matrix());
  return product_binsplit_exact(f);
}

Matrix<BiPoly> delta_matrix(const RecMatrix& M, uint64_t m) {
  Matrix<BiPoly> W = block_matrix(M, m);
  Matrix<BiPoly> D(W.r, BiPoly());
  for (size_t e = 0; e < W.a.size(); ++e) D.a[e] = W.a[e].shift_k(BigInt(static_cast<unsigned long>(m))) - W.a[e];
  return D;
}

bool shift_symmetric(const RecMatrix& M, uint64_t m) {
  BigInt c(static_cast<unsigned long>(m));
  for (const auto& e : M.entries()) {
    if (e.shift_k(c) != e.shift_x(c)) return false;
  }
  return true;
}

template <class H>
long accuracy_bits(const std::vector<H>& v, prec_t p) {
  long acc = static_cast<long>(p);
  for (const auto& e : v) {
    if (e.is_exact_zero()) continue;
    acc = std::min(acc, e.rel_accuracy_bits(static_cast<long>(p)));
  }
  return acc;
}

template <class H>
long accuracy_bits(const HMatrix<H>& m, prec_t p) {
  return accuracy_bits(m.a, p);
}

template <class H>
std::vector<H> apply(const HMatrix<H>& m, const std::vector<H>& v, prec_t prec) {
  if (v.size() != m.r) throw InvalidArgument("vector length does not match matrix order");
  std::vector<H> out(m.r, H(prec));
  H t(prec);
  for (size_t i = 0; i < m.r; ++i) {
    for (size_t j = 0; j < m.r; ++j) {
      if (m(i, j).is_exact_zero() || v[j].is_exact_zero()) continue;
      mul(t, m(i, j), v[j], prec);
      add(out[i], out[i], t, prec);
    }
  }
  return out;
}

template <class H>
EvalResult<H> evaluate(const RecMatrix& M, const H& z, uint64_t n, prec_t p, const EvalOptions& opt,
                       const EvalExtras& extras) {
  if (p < 2) throw InvalidArgument("precision must be at least 2 bits");
  EvalResult<H> res;
  res.plan = make_plan(n, p, opt);
  prec_t wp = res.plan.working_prec();
  OpCounters& ctr = res.counters;
  HMatrix<H> P = run_engine(M, z, n, res.plan, ctr, extras);
  if (!M.den_is_one() && n > 0) {
    H Q(wp);
    if (!M.den_depends_on_x()) {
      set_int(Q, exact_den_product(M.den(), n), wp);
    } else {
      RecMatrix D(1, {M.den()});
      EvalPlan dplan = res.plan;
      if (dplan.algorithm == Algorithm::rect_split_taylor && !shift_symmetric(D, dplan.m)) {
        dplan.algorithm = Algorithm::rect_split;
      }
      Q = run_engine(D, z, n, dplan, ctr, EvalExtras{nullptr, extras.exact_z}).a[0];
      if (Q.contains_zero()) {
        PowerTable<H> powers = PowerTable<H>::build(z, M.den().degree_x(), wp, ctr);
        for (uint64_t i = 0; i < n; ++i) {
          H q = uni_eval_powertable(M.den().eval_k(BigInt(static_cast<unsigned long>(i))), powers, wp, ctr);
          if (q.contains_zero()) throw DenominatorError("denominator vanishes at index " + std::to_string(i), i);
        }
      }
    }
    for (auto& e : P.a) {
      if (!e.is_exact_zero()) div(e, e, Q, wp);
    }
  }
  res.accuracy_bits = accuracy_bits(P, p);
  res.matrix = std::move(P);
  return res;
}

#define HOLO_INSTANTIATE(H)                                                                                  \
  template HMatrix<H> eval_naive(const RecMatrix&, const H&, uint64_t, const EvalPlan&, OpCounters&);        \
  template HMatrix<H> eval_binsplit_exact(const RecMatrix&, const H&, uint64_t, const EvalPlan&, OpCounters&); \
  template HMatrix<H> eval_multipoint(const RecMatrix&, const H&, uint64_t, const EvalPlan&, OpCounters&);   \
  template HMatrix<H> eval_rect_ps(const RecMatrix&, const H&, uint64_t, const EvalPlan&, OpCounters&);      \
  template HMatrix<H> eval_rect_split(const RecMatrix&, const H&, uint64_t, const EvalPlan&, OpCounters&);   \
  template HMatrix<H> eval_rect_split_taylor(const RecMatrix&, const H&, uint64_t, const EvalPlan&,          \
                                             OpCounters&);                                                   \
  template HMatrix<H> eval_rect_delta(const RecMatrix&, const H&, uint64_t, const EvalPlan&, OpCounters&,    \
                                      const Matrix<BiPoly>*);                                                \
  template EvalResult<H> evaluate(const RecMatrix&, const H&, uint64_t, prec_t, const EvalOptions&,          \
                                  const EvalExtras&);                                                        \
  template long accuracy_bits(const HMatrix<H>&, prec_t);                                                    \
  template long accuracy_bits(const std::vector<H>&, prec_t);                                                \
  template std::vector<H> apply(const HMatrix<H>&, const std::vector<H>&, prec_t);

HOLO_INSTANTIATE(Ball)
HOLO_INSTANTIATE(ComplexBall)

#undef HOLO_INSTANTIATE

}  // namespace holo
