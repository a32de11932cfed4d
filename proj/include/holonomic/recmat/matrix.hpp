#pragma once

#include <cstddef>
#include <vector>

#include "holonomic/counters.hpp"
#include "holonomic/errors.hpp"
#include "holonomic/poly/unipoly.hpp"
#include "holonomic/scalar/complex_ball.hpp"

namespace holo {

// Square r x r matrix, row-major.
template <class T>
struct Matrix {
  size_t r = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(size_t order, const T& fill) : r(order), a(order * order, fill) {}

  T& operator()(size_t i, size_t j) { return a[i * r + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * r + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.r == y.r && x.a == y.a; }
};

using IntMatrix = Matrix<BigInt>;
using ZPolyMatrix = Matrix<ZPoly>;
template <class H>
using HMatrix = Matrix<H>;

inline IntMatrix identity_int(size_t r) {
  IntMatrix m(r, BigInt(0));
  for (size_t i = 0; i < r; ++i) m(i, i) = 1;
  return m;
}

inline ZPolyMatrix identity_zpoly(size_t r) {
  ZPolyMatrix m(r, ZPoly());
  for (size_t i = 0; i < r; ++i) m(i, i) = ZPoly::one();
  return m;
}

template <class H>
HMatrix<H> identity_h(size_t r, prec_t prec) {
  HMatrix<H> m(r, H(prec));
  for (size_t i = 0; i < r; ++i) set_one(m(i, i), prec);
  return m;
}

inline bool is_exact_zero_entry(const BigInt& v) { return sgn(v) == 0; }
inline bool is_exact_zero_entry(const ZPoly& v) { return v.is_zero(); }

// Exact-ring product (BigInt, ZPoly, BiPoly): schoolbook over entries.
template <class T>
Matrix<T> matmul_exact(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.r != y.r) throw InvalidArgument("matrix order mismatch");
  Matrix<T> z(x.r, T());
  for (size_t i = 0; i < x.r; ++i) {
    for (size_t k = 0; k < x.r; ++k) {
      const T& xik = x(i, k);
      if (is_exact_zero_entry(xik)) continue;
      for (size_t j = 0; j < x.r; ++j) {
        if (is_exact_zero_entry(y(k, j))) continue;
        z(i, j) = z(i, j) + xik * y(k, j);
      }
    }
  }
  return z;
}

// Ball matrix product; exact-zero entries are skipped and each H x H product
// is counted as one nonscalar multiplication.
template <class H>
HMatrix<H> matmul_h(const HMatrix<H>& x, const HMatrix<H>& y, prec_t prec, OpCounters& ctr) {
  if (x.r != y.r) throw InvalidArgument("matrix order mismatch");
  if (x.r == 1) {
    HMatrix<H> z(1, H(prec));
    mul(z.a[0], x.a[0], y.a[0], prec);
    ++ctr.nonscalar;
    return z;
  }
  HMatrix<H> z(x.r, H(prec));
  H t(prec);
  for (size_t i = 0; i < x.r; ++i) {
    for (size_t j = 0; j < x.r; ++j) {
      bool first = true;
      for (size_t k = 0; k < x.r; ++k) {
        if (x(i, k).is_exact_zero() || y(k, j).is_exact_zero()) continue;
        ++ctr.nonscalar;
        if (first) {
          mul(z(i, j), x(i, k), y(k, j), prec);
          first = false;
        } else {
          mul(t, x(i, k), y(k, j), prec);
          add(z(i, j), z(i, j), t, prec);
          ++ctr.additions;
        }
      }
    }
  }
  return z;
}

// Binary-splitting product F[n-1] ... F[1] F[0] (newest on the left), split
// at the midpoint of each range.
template <class T, class Mul>
Matrix<T> product_binsplit(const std::vector<Matrix<T>>& f, size_t lo, size_t hi, const Mul& mul_fn) {
  if (hi - lo == 1) return f[lo];
  size_t mid = lo + (hi - lo) / 2;
  Matrix<T> right = product_binsplit(f, lo, mid, mul_fn);
  Matrix<T> left = product_binsplit(f, mid, hi, mul_fn);
  return mul_fn(left, right);
}

template <class T>
Matrix<T> product_binsplit_exact(const std::vector<Matrix<T>>& factors) {
  if (factors.empty()) throw InvalidArgument("empty factor list");
  return product_binsplit(factors, 0, factors.size(),
                          [](const Matrix<T>& l, const Matrix<T>& r) { return matmul_exact(l, r); });
}

}  // namespace holo
