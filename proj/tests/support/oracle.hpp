#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "holonomic/engines/engines.hpp"
#include "holonomic/recmat/recmat.hpp"

namespace oracle {

using holo::BigInt;
using holo::BigRational;
using holo::BiPoly;
using holo::RecMatrix;

using QMatrix = holo::Matrix<BigRational>;

inline BigRational qpow(const BigRational& b, size_t e) {
  BigRational r = 1;
  for (size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Term-by-term evaluation from the coefficient grid.
inline BigRational eval_bipoly(const BiPoly& p, const BigRational& x, const BigRational& k) {
  BigRational s = 0;
  for (size_t a = 0; a < p.rows(); ++a) {
    for (size_t b = 0; b < p.cols(); ++b) {
      if (sgn(p.coeff(a, b)) != 0) s += BigRational(p.coeff(a, b)) * qpow(x, a) * qpow(k, b);
    }
  }
  return s;
}

inline QMatrix qidentity(size_t r) {
  QMatrix m(r, BigRational(0));
  for (size_t i = 0; i < r; ++i) m(i, i) = 1;
  return m;
}

inline QMatrix qmul(const QMatrix& x, const QMatrix& y) {
  QMatrix z(x.r, BigRational(0));
  for (size_t i = 0; i < x.r; ++i)
    for (size_t j = 0; j < x.r; ++j)
      for (size_t k = 0; k < x.r; ++k) z(i, j) += x(i, k) * y(k, j);
  return z;
}

// prod_{i=n-1..0} M(z, i) / den(z, i) in exact rationals.
inline QMatrix exact_product(const RecMatrix& M, const BigRational& z, uint64_t n) {
  size_t r = M.order();
  QMatrix acc = qidentity(r);
  for (uint64_t i = 0; i < n; ++i) {
    BigRational k(static_cast<unsigned long>(i));
    BigRational q = eval_bipoly(M.den(), z, k);
    QMatrix f(r, BigRational(0));
    for (size_t a = 0; a < r; ++a)
      for (size_t b = 0; b < r; ++b) f(a, b) = eval_bipoly(M.entry(a, b), z, k) / q;
    acc = qmul(f, acc);
  }
  return acc;
}

inline std::vector<BigRational> qapply(const QMatrix& m, const std::vector<BigRational>& v) {
  std::vector<BigRational> out(m.r, BigRational(0));
  for (size_t i = 0; i < m.r; ++i)
    for (size_t j = 0; j < m.r; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline BiPoly random_bipoly(std::mt19937_64& rng, int max_dx, int max_dk, int lo, int hi) {
  std::uniform_int_distribution<int> c(lo, hi);
  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(max_dx + 1),
                                        std::vector<BigInt>(static_cast<size_t>(max_dk + 1)));
  for (auto& row : rows)
    for (auto& v : row) v = c(rng);
  return BiPoly(rows);
}

// Random order-r matrix with entries of degree <= 2 in x and k.  Every third
// matrix gets denominator k + c (c >= 1), every third x^2 + k + 1; both are
// positive for k >= 0 and real x.
inline RecMatrix random_recmatrix(std::mt19937_64& rng, size_t r, int kind) {
  std::vector<BiPoly> e;
  for (size_t i = 0; i < r * r; ++i) e.push_back(random_bipoly(rng, 2, 2, -5, 5));
  if (kind % 3 == 1) {
    int c = std::uniform_int_distribution<int>(1, 5)(rng);
    return RecMatrix(r, e, BiPoly::k() + BiPoly::constant(c));
  }
  if (kind % 3 == 2) return RecMatrix(r, e, BiPoly::x() * BiPoly::x() + BiPoly::k() + BiPoly::constant(1));
  return RecMatrix(r, e);
}

inline BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline const std::vector<holo::Algorithm>& all_algorithms() {
  static const std::vector<holo::Algorithm> algs{
      holo::Algorithm::naive,       holo::Algorithm::binsplit_exact, holo::Algorithm::multipoint,
      holo::Algorithm::rect_ps,     holo::Algorithm::rect_split,     holo::Algorithm::rect_split_taylor,
      holo::Algorithm::rect_delta};
  return algs;
}

inline bool matrix_contains(const holo::HMatrix<holo::Ball>& b, const QMatrix& q) {
  for (size_t i = 0; i < q.a.size(); ++i) {
    if (!holo::ball_contains(b.a[i], q.a[i])) return false;
  }
  return true;
}

}  // namespace oracle
