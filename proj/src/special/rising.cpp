#include "holonomic/special/rising.hpp"

namespace holo {

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt closed_form(uint64_t m, uint64_t v, uint64_t i, const std::vector<BigInt>& s) {
  BigInt acc = 0;
  BigInt mp;
  for (uint64_t j = i + 1; j <= m - v; ++j) {
    mpz_ui_pow_ui(mp.get_mpz_t(), m, j - i);
    acc += mp * s[v + j] * binomial(v + j, v) * binomial(j, i);
  }
  return acc;
}

}  // namespace

std::vector<BigInt> stirling1_row(uint64_t m) {
  // [n+1, j] = n [n, j] + [n, j-1]
  std::vector<BigInt> row{BigInt(1)};
  for (uint64_t n = 0; n < m; ++n) {
    std::vector<BigInt> next(row.size() + 1, BigInt(0));
    for (size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j] * n;
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

RisingDeltaCoeffs rising_delta_coeffs_closed_form(uint64_t m) {
  if (m == 0) throw InvalidArgument("step length must be positive");
  std::vector<BigInt> s = stirling1_row(m);
  RisingDeltaCoeffs t{m, {}};
  for (uint64_t v = 0; v < m; ++v) {
    std::vector<BigInt> row;
    for (uint64_t i = 0; i + v < m; ++i) row.push_back(closed_form(m, v, i, s));
    t.c.push_back(std::move(row));
  }
  return t;
}

RisingDeltaCoeffs rising_delta_coeffs(uint64_t m) {
  if (m == 0) throw InvalidArgument("step length must be positive");
  std::vector<BigInt> s = stirling1_row(m);
  RisingDeltaCoeffs t{m, {}};
  std::vector<BigInt> row;
  for (uint64_t i = 0; i < m; ++i) row.push_back(closed_form(m, 0, i, s));
  t.c.push_back(row);
  for (uint64_t v = 0; v + 1 < m; ++v) {
    const auto& prev = t.c.back();
    std::vector<BigInt> next(prev.size() - 1);
    for (size_t i = 0; i < next.size(); ++i) {
      BigInt num = prev[i + 1] * static_cast<unsigned long>(i + 1);
      mpz_divexact_ui(next[i].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(v + 1));
    }
    t.c.push_back(std::move(next));
  }
  return t;
}

BiPoly RisingDeltaCoeffs::as_bipoly() const {
  std::vector<std::vector<BigInt>> rows(c.size(), std::vector<BigInt>(m, BigInt(0)));
  for (size_t v = 0; v < c.size(); ++v) {
    for (size_t i = 0; i < c[v].size(); ++i) rows[v][i] = c[v][i];
  }
  return BiPoly(rows);
}

template <class H>
EvalResult<H> rising_factorial(const H& z, uint64_t n, prec_t p, const EvalOptions& opt) {
  RecMatrix M = RecMatrix::rising_factorial();
  EvalPlan plan = make_plan(n, p, opt);
  EvalExtras extras;
  Matrix<BiPoly> delta(1, BiPoly());
  if (plan.algorithm == Algorithm::rect_delta && n / plan.m > 1) {
    delta.a[0] = rising_delta_coeffs(plan.m).as_bipoly();
    extras.delta = &delta;
  }
  return evaluate(M, z, n, p, opt, extras);
}

template EvalResult<Ball> rising_factorial(const Ball&, uint64_t, prec_t, const EvalOptions&);
template EvalResult<ComplexBall> rising_factorial(const ComplexBall&, uint64_t, prec_t, const EvalOptions&);

}  // namespace holo
