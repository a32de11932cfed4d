#include "holonomic/recmat/recmat.hpp"

#include <algorithm>

namespace holo {

RecMatrix::RecMatrix(size_t order, std::vector<BiPoly> entries, BiPoly den)
    : r_(order), entries_(std::move(entries)), den_(std::move(den)) {
  if (r_ == 0) throw InvalidArgument("recurrence order must be positive");
  if (entries_.size() != r_ * r_) throw InvalidArgument("expected " + std::to_string(r_ * r_) + " matrix entries");
  if (den_.is_zero()) throw InvalidArgument("denominator is identically zero");
}

long RecMatrix::degree_x() const {
  long d = 0;
  for (const auto& e : entries_) d = std::max(d, e.degree_x());
  return d;
}

long RecMatrix::degree_k() const {
  long d = 0;
  for (const auto& e : entries_) d = std::max(d, e.degree_k());
  return d;
}

RecMatrix RecMatrix::shift_k(const BigInt& c) const {
  std::vector<BiPoly> e;
  e.reserve(entries_.size());
  for (const auto& p : entries_) e.push_back(p.shift_k(c));
  return RecMatrix(r_, std::move(e), den_.shift_k(c));
}

RecMatrix RecMatrix::shift_x(const BigInt& c) const {
  std::vector<BiPoly> e;
  e.reserve(entries_.size());
  for (const auto& p : entries_) e.push_back(p.shift_x(c));
  return RecMatrix(r_, std::move(e), den_.shift_x(c));
}

Matrix<BiPoly> RecMatrix::as_bipoly_matrix() const {
  Matrix<BiPoly> m(r_, BiPoly());
  m.a = entries_;
  return m;
}

RecMatrix RecMatrix::rising_factorial() { return RecMatrix(1, {BiPoly::x() + BiPoly::k()}); }

RecMatrix RecMatrix::fibonacci() {
  return RecMatrix(2, {BiPoly(), BiPoly::constant(1), BiPoly::constant(1), BiPoly::constant(1)});
}

RecMatrix companion(const ScalarRecurrence& rec) {
  if (rec.a.size() < 2) throw InvalidArgument("recurrence needs coefficients a_0 .. a_r with r >= 1");
  size_t r = rec.order();
  const BiPoly& lead = rec.a[r];
  if (lead.is_zero()) throw InvalidArgument("leading coefficient a_r is identically zero");
  std::vector<BiPoly> e(r * r);
  for (size_t i = 0; i + 1 < r; ++i) e[i * r + i + 1] = lead;
  for (size_t j = 0; j < r; ++j) e[(r - 1) * r + j] = -rec.a[j];
  return RecMatrix(r, std::move(e), lead);
}

EvaluatedFactor eval_factor(const RecMatrix& M, const BigInt& i) {
  size_t r = M.order();
  EvaluatedFactor f{ZPolyMatrix(r, ZPoly()), M.den().eval_k(i)};
  for (size_t a = 0; a < r * r; ++a) f.m.a[a] = M.entries()[a].eval_k(i);
  return f;
}

}  // namespace holo
