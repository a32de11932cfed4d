#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "holonomic/scalar/rational.hpp"

namespace holo {

// Tangent numbers T_1..T_count (T_k = (2k-1)-th derivative of tan at 0).
std::vector<BigInt> tangent_numbers(size_t count);

// B_0, B_2, ..., B_{2(count-1)} computed from tangent numbers, uncached.
std::vector<BigRational> bernoulli_even_table(size_t count);

// Process-wide cache of even-index Bernoulli numbers.  Readers get immutable
// snapshots; extension swaps in a longer table under an exclusive lock, so a
// snapshot handed out earlier stays valid.
class BernoulliCache {
 public:
  using Table = std::vector<BigRational>;  // entry k is B_{2k}

  static BernoulliCache& global();

  // Snapshot holding at least B_0 .. B_{2k} for all 2k <= upto.
  std::shared_ptr<const Table> upto(size_t upto_index);
  // Number of cached even-index values.
  size_t size() const;
  void clear();

  // Text records "index numerator denominator", one per line.  Loading keeps
  // whichever of the file and the current cache is longer; throws Error on
  // malformed input.
  void load(const std::string& path);
  void save(const std::string& path) const;

 private:
  mutable std::shared_mutex mu_;
  std::shared_ptr<const Table> table_ = std::make_shared<const Table>();
};

// B_0 .. B_{2N} (entry k is B_{2k}) from the global cache.
std::shared_ptr<const BernoulliCache::Table> bernoulli_even(size_t upto_2N);

}  // namespace holo
