#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "holonomic/poly/bipoly.hpp"
#include "holonomic/poly/powertable.hpp"
#include "holonomic/recmat/matrix.hpp"

namespace holo {

inline bool is_exact_zero_entry(const BiPoly& v) { return v.is_zero(); }

// First-order matrix recurrence v(k+1) = M(x, k) v(k) / den(x, k).  Entries
// and the denominator are polynomials in the parameter x and the index k.
class RecMatrix {
 public:
  RecMatrix() = default;
  RecMatrix(size_t order, std::vector<BiPoly> entries, BiPoly den = BiPoly::constant(1));

  size_t order() const { return r_; }
  const BiPoly& entry(size_t i, size_t j) const { return entries_[i * r_ + j]; }
  const std::vector<BiPoly>& entries() const { return entries_; }
  const BiPoly& den() const { return den_; }

  bool den_is_one() const { return den_ == BiPoly::constant(1); }
  bool den_depends_on_x() const { return den_.degree_x() > 0; }
  long degree_x() const;
  long degree_k() const;

  // Same matrix with the denominator replaced by 1.
  RecMatrix numerator() const { return RecMatrix(r_, entries_); }

  // M(x, k + c) and M(x + c, k), entrywise.
  RecMatrix shift_k(const BigInt& c) const;
  RecMatrix shift_x(const BigInt& c) const;

  Matrix<BiPoly> as_bipoly_matrix() const;

  friend bool operator==(const RecMatrix& a, const RecMatrix& b) {
    return a.r_ == b.r_ && a.entries_ == b.entries_ && a.den_ == b.den_;
  }

  // [x + k]
  static RecMatrix rising_factorial();
  // [[0, 1], [1, 1]]
  static RecMatrix fibonacci();

 private:
  size_t r_ = 0;
  std::vector<BiPoly> entries_;
  BiPoly den_;
};

// sum_{j=0}^{r} a_j(x, k) c(k + j) = 0
struct ScalarRecurrence {
  std::vector<BiPoly> a;
  size_t order() const { return a.empty() ? 0 : a.size() - 1; }
};

// Companion form acting on (c(k), ..., c(k+r-1)).  Throws InvalidArgument if
// a_r is identically zero.
RecMatrix companion(const ScalarRecurrence& rec);

// Entries M(x, i) as polynomials in x, and den(x, i).
struct EvaluatedFactor {
  ZPolyMatrix m;
  ZPoly den;
};
EvaluatedFactor eval_factor(const RecMatrix& M, const BigInt& i);

template <class H>
struct NumDen {
  HMatrix<H> num;
  H den;
};

// H-valued entries of M(z, i) built from a power table of z (scalar ops only).
template <class H>
HMatrix<H> eval_factor_h(const RecMatrix& M, const BigInt& i, const PowerTable<H>& powers, prec_t prec,
                         OpCounters& ctr) {
  size_t r = M.order();
  HMatrix<H> out(r, H(prec));
  for (size_t a = 0; a < r * r; ++a) {
    if (M.entries()[a].is_zero()) continue;
    out.a[a] = uni_eval_powertable(M.entries()[a].eval_k(i), powers, prec, ctr);
  }
  return out;
}

// M(z, b-1) ... M(z, a) and den(z, b-1) ... den(z, a) by sequential
// multiplication.  Throws DenominatorError at the first index whose
// denominator ball contains zero.
template <class H>
NumDen<H> product_naive(const RecMatrix& M, const H& z, uint64_t a, uint64_t b, prec_t prec, OpCounters& ctr) {
  if (a > b) throw InvalidArgument("product range reversed");
  size_t r = M.order();
  long d = std::max({M.degree_x(), M.den().degree_x(), 0L});
  PowerTable<H> powers = PowerTable<H>::build(z, d, prec, ctr);
  NumDen<H> out{identity_h<H>(r, prec), H(prec)};
  set_one(out.den, prec);
  bool has_den = !M.den_is_one();
  bool first = true;
  for (uint64_t i = a; i < b; ++i) {
    BigInt bi(static_cast<unsigned long>(i));
    HMatrix<H> f = eval_factor_h(M, bi, powers, prec, ctr);
    if (first) {
      out.num = std::move(f);
      first = false;
    } else {
      out.num = matmul_h(f, out.num, prec, ctr);
    }
    if (has_den) {
      H q = uni_eval_powertable(M.den().eval_k(bi), powers, prec, ctr);
      if (q.contains_zero()) throw DenominatorError("denominator vanishes at index " + std::to_string(i), i);
      mul(out.den, out.den, q, prec);
      ++ctr.nonscalar;
    }
  }
  return out;
}

}  // namespace holo
