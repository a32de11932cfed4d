#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "holonomic/scalar/rational.hpp"

namespace holo {

inline bool is_zero_coeff(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero_coeff(const BigRational& v) { return sgn(v) == 0; }

// Dense univariate polynomial, coefficients in ascending degree.  For exact
// rings the coefficient list is kept trimmed (no trailing zeros; the zero
// polynomial is the empty list).
template <class T>
struct UniPoly {
  std::vector<T> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<T> c) : coeffs(std::move(c)) { normalize(); }
  UniPoly(std::initializer_list<T> c) : coeffs(c) { normalize(); }

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  size_t length() const { return coeffs.size(); }
  bool is_zero() const { return coeffs.empty(); }
  const T& operator[](size_t i) const { return coeffs[i]; }
  T& operator[](size_t i) { return coeffs[i]; }
  T coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : T(0); }

  void normalize() {
    while (!coeffs.empty() && is_zero_coeff(coeffs.back())) coeffs.pop_back();
  }

  static UniPoly constant(const T& c) { return UniPoly(std::vector<T>{c}); }
  static UniPoly one() { return constant(T(1)); }
  // x - root
  static UniPoly linear_root(const T& root) { return UniPoly(std::vector<T>{T(-root), T(1)}); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
};

using ZPoly = UniPoly<BigInt>;
using QPoly = UniPoly<BigRational>;

template <class T>
UniPoly<T> operator+(const UniPoly<T>& a, const UniPoly<T>& b) {
  std::vector<T> c(std::max(a.length(), b.length()));
  for (size_t i = 0; i < a.length(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.length(); ++i) c[i] += b[i];
  return UniPoly<T>(std::move(c));
}

template <class T>
UniPoly<T> operator-(const UniPoly<T>& a, const UniPoly<T>& b) {
  std::vector<T> c(std::max(a.length(), b.length()));
  for (size_t i = 0; i < a.length(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.length(); ++i) c[i] -= b[i];
  return UniPoly<T>(std::move(c));
}

template <class T>
UniPoly<T> operator-(const UniPoly<T>& a) {
  UniPoly<T> r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

template <class T>
UniPoly<T> scale(const UniPoly<T>& a, const T& s) {
  if (is_zero_coeff(s)) return {};
  UniPoly<T> r = a;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

template <class T>
UniPoly<T> mul_schoolbook(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<T> c(a.length() + b.length() - 1);
  for (size_t i = 0; i < a.length(); ++i) {
    if (is_zero_coeff(a[i])) continue;
    for (size_t j = 0; j < b.length(); ++j) c[i + j] += a[i] * b[j];
  }
  return UniPoly<T>(std::move(c));
}

// Exact product over Z by Kronecker substitution into one GMP integer.
ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b);

inline constexpr size_t kKroneckerThreshold = 6;

// Exact product; dispatches to Kronecker substitution for larger integer
// polynomials.
template <class T>
UniPoly<T> uni_mul(const UniPoly<T>& a, const UniPoly<T>& b) {
  if constexpr (std::is_same_v<T, BigInt>) {
    if (std::min(a.length(), b.length()) > kKroneckerThreshold) return mul_kronecker(a, b);
  }
  return mul_schoolbook(a, b);
}

template <class T>
UniPoly<T> operator*(const UniPoly<T>& a, const UniPoly<T>& b) {
  return uni_mul(a, b);
}

template <class T>
T horner(const UniPoly<T>& p, const T& x) {
  T acc(0);
  for (size_t i = p.length(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// q(x) = p(x + c) via the in-place Pascal-triangle scheme, O(d^2) ring ops.
template <class T>
UniPoly<T> taylor_shift_basecase(const UniPoly<T>& p, const T& c) {
  UniPoly<T> q = p;
  if (is_zero_coeff(c) || q.length() < 2) return q;
  size_t n = q.length();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j-- > i;) q.coeffs[j] += c * q.coeffs[j + 1];
  }
  return q;
}

// q(x) = p(x + c) by one polynomial convolution (Aho-Steiglitz-Ullman),
// using the integral form scaled by deg(p)! so all arithmetic stays in Z.
ZPoly taylor_shift_convolution(const ZPoly& p, const BigInt& c);

inline constexpr size_t kTaylorConvolutionThreshold = 48;

inline ZPoly taylor_shift(const ZPoly& p, const BigInt& c) {
  return p.length() > kTaylorConvolutionThreshold ? taylor_shift_convolution(p, c)
                                                  : taylor_shift_basecase(p, c);
}

std::string to_string(const ZPoly& p, char var = 'x');

}  // namespace holo
