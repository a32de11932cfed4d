#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "holonomic/poly/unipoly.hpp"

namespace holo {

// Dense bivariate polynomial over Z in (x, k): coefficient of x^a k^b at
// grid position (a, b).  Trailing zero rows and columns are trimmed; the zero
// polynomial has an empty grid.
class BiPoly {
 public:
  BiPoly() = default;
  // Grid given row-major as rows[a][b].
  explicit BiPoly(const std::vector<std::vector<BigInt>>& rows);

  static BiPoly constant(const BigInt& c);
  static BiPoly x();
  static BiPoly k();
  static BiPoly from_x_poly(const ZPoly& p);
  static BiPoly from_k_poly(const ZPoly& p);

  // Parses sums of terms c, c*x^a, c*k^b, c*x^a*k^b (coefficient and
  // exponents optional, whitespace ignored).  Throws ParseError.
  static BiPoly parse(std::string_view text);
  std::string to_string() const;

  bool is_zero() const { return nx_ == 0; }
  // -1 for the zero polynomial.
  long degree_x() const { return static_cast<long>(nx_) - 1; }
  long degree_k() const { return static_cast<long>(nk_) - 1; }
  size_t rows() const { return nx_; }
  size_t cols() const { return nk_; }
  size_t term_count() const;

  const BigInt& coeff(size_t a, size_t b) const;
  void set_coeff(size_t a, size_t b, const BigInt& v);

  // Substitute k = k0; result is a polynomial in x.
  ZPoly eval_k(const BigInt& k0) const;
  // Substitute x = x0; result is a polynomial in k.
  ZPoly eval_x(const BigInt& x0) const;
  BigInt eval(const BigInt& x0, const BigInt& k0) const;
  BigRational eval(const BigRational& x0, const BigRational& k0) const;

  // p(x, k + c) and p(x + c, k).
  BiPoly shift_k(const BigInt& c) const;
  BiPoly shift_x(const BigInt& c) const;
  // Coefficient of x^a as a polynomial in k, and of k^b as a polynomial in x.
  ZPoly x_row(size_t a) const;
  ZPoly k_column(size_t b) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  BiPoly(size_t nx, size_t nk) : nx_(nx), nk_(nk), c_(nx * nk) {}
  BigInt& at(size_t a, size_t b) { return c_[a * nk_ + b]; }
  const BigInt& at(size_t a, size_t b) const { return c_[a * nk_ + b]; }
  void trim();

  size_t nx_ = 0;
  size_t nk_ = 0;
  std::vector<BigInt> c_;
};

// Exact product in Z[x][k] via flattening to Z[t] and Kronecker substitution.
inline BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) { return a * b; }
inline ZPoly bipoly_eval_k(const BiPoly& a, const BigInt& k0) { return a.eval_k(k0); }

}  // namespace holo
