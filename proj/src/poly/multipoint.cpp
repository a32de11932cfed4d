#include "holonomic/poly/multipoint.hpp"

namespace holo {

ProductTree::ProductTree(std::span<const BigInt> points) {
  std::vector<ZPoly> leaves;
  leaves.reserve(points.size());
  for (const auto& p : points) leaves.push_back(ZPoly::linear_root(p));
  levels_.push_back(std::move(leaves));
  while (levels_.back().size() > 1) {
    const auto& below = levels_.back();
    std::vector<ZPoly> up;
    up.reserve((below.size() + 1) / 2);
    for (size_t i = 0; i + 1 < below.size(); i += 2) up.push_back(below[i] * below[i + 1]);
    if (below.size() % 2 == 1) up.push_back(below.back());
    levels_.push_back(std::move(up));
  }
}

std::vector<BigInt> multipoint_eval(const ZPoly& p, std::span<const BigInt> points) {
  if (points.empty()) return {};
  ProductTree tree(points);
  return multipoint_eval(p.coeffs, tree, ExactCoeffOps{});
}

}  // namespace holo
