#pragma once

#include <span>
#include <vector>

#include "holonomic/counters.hpp"
#include "holonomic/poly/unipoly.hpp"
#include "holonomic/scalar/complex_ball.hpp"

namespace holo {

// Binary subproduct tree over Z: levels[0] holds the leaves (x - p_i), each
// higher level the pairwise products of the level below (an unpaired node
// is carried up unchanged); levels.back() is the single root.
class ProductTree {
 public:
  explicit ProductTree(std::span<const BigInt> points);

  const ZPoly& root() const { return levels_.back().front(); }
  size_t point_count() const { return levels_.front().size(); }
  const std::vector<std::vector<ZPoly>>& levels() const { return levels_; }

 private:
  std::vector<std::vector<ZPoly>> levels_;
};

inline ProductTree product_tree(std::span<const BigInt> points) { return ProductTree(points); }

// Coefficient policies for the remainder tree.  `addmul` computes
// acc += c * v with c an exact integer.
struct ExactCoeffOps {
  using T = BigInt;
  void addmul(BigInt& acc, const BigInt& c, const BigInt& v) const { acc += c * v; }
  bool is_zero(const BigInt& v) const { return sgn(v) == 0; }
  BigInt zero() const { return BigInt(0); }
};

template <class H>
struct BallCoeffOps {
  using T = H;
  prec_t prec;
  OpCounters* ctr;
  void addmul(H& acc, const BigInt& c, const H& v) const {
    if (sgn(c) == 0) return;
    addmul_z(acc, c, v, prec);
    ++ctr->scalar;
    ++ctr->additions;
  }
  bool is_zero(const H& v) const { return v.is_exact_zero(); }
  H zero() const { return H(prec); }
};

namespace detail {

// a mod m for monic integer m, in place (classical division).
template <class Ops>
void rem_monic(std::vector<typename Ops::T>& a, const ZPoly& m, const std::vector<BigInt>& neg_m, const Ops& ops) {
  size_t dm = m.length() - 1;
  if (a.size() <= dm) return;
  for (size_t i = a.size(); i-- > dm;) {
    if (ops.is_zero(a[i])) continue;
    for (size_t j = 0; j < dm; ++j) ops.addmul(a[i - dm + j], neg_m[j], a[i]);
  }
  a.resize(dm, ops.zero());
}

template <class Ops>
void descend(const ProductTree& tree, size_t level, size_t index, std::vector<typename Ops::T> a,
             std::vector<typename Ops::T>& out, const Ops& ops) {
  const ZPoly& node = tree.levels()[level][index];
  std::vector<BigInt> neg(node.length());
  for (size_t j = 0; j < node.length(); ++j) neg[j] = -node[j];
  rem_monic(a, node, neg, ops);
  if (level == 0) {
    out[index] = a.empty() ? ops.zero() : std::move(a[0]);
    return;
  }
  const auto& below = tree.levels()[level - 1];
  descend(tree, level - 1, 2 * index, a, out, ops);
  if (2 * index + 1 < below.size()) descend(tree, level - 1, 2 * index + 1, std::move(a), out, ops);
}

}  // namespace detail

// Values p(points[i]) via a remainder tree over the product tree.
template <class Ops>
std::vector<typename Ops::T> multipoint_eval(const std::vector<typename Ops::T>& p, const ProductTree& tree,
                                             const Ops& ops) {
  std::vector<typename Ops::T> out(tree.point_count(), ops.zero());
  if (tree.point_count() == 0) return out;
  detail::descend(tree, tree.levels().size() - 1, 0, p, out, ops);
  return out;
}

std::vector<BigInt> multipoint_eval(const ZPoly& p, std::span<const BigInt> points);

}  // namespace holo
