#include "holonomic/special/bernoulli.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "holonomic/errors.hpp"

namespace holo {

std::vector<BigInt> tangent_numbers(size_t count) {
  std::vector<BigInt> t(count + 1, BigInt(0));
  if (count == 0) return {};
  t[1] = 1;
  for (size_t k = 2; k <= count; ++k) mpz_mul_ui(t[k].get_mpz_t(), t[k - 1].get_mpz_t(), k - 1);
  for (size_t k = 2; k <= count; ++k) {
    for (size_t j = k; j <= count; ++j) {
      mpz_mul_ui(t[j].get_mpz_t(), t[j].get_mpz_t(), j - k + 2);
      mpz_addmul_ui(t[j].get_mpz_t(), t[j - 1].get_mpz_t(), j - k);
    }
  }
  t.erase(t.begin());
  return t;
}

std::vector<BigRational> bernoulli_even_table(size_t count) {
  std::vector<BigRational> b;
  if (count == 0) return b;
  b.reserve(count);
  b.emplace_back(1);
  std::vector<BigInt> t = tangent_numbers(count - 1);
  for (size_t k = 1; k < count; ++k) {
    // B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
    BigInt four;
    mpz_ui_pow_ui(four.get_mpz_t(), 4, k);
    BigRational q(t[k - 1] * static_cast<unsigned long>(2 * k), four * (four - 1));
    q.canonicalize();
    if (k % 2 == 0) q = -q;
    b.push_back(std::move(q));
  }
  return b;
}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

std::shared_ptr<const BernoulliCache::Table> BernoulliCache::upto(size_t upto_index) {
  size_t need = upto_index / 2 + 1;
  {
    std::shared_lock lock(mu_);
    if (table_->size() >= need) return table_;
  }
  std::unique_lock lock(mu_);
  if (table_->size() >= need) return table_;
  size_t grow = std::max(need, table_->size() + table_->size() / 2);
  table_ = std::make_shared<const Table>(bernoulli_even_table(grow));
  return table_;
}

size_t BernoulliCache::size() const {
  std::shared_lock lock(mu_);
  return table_->size();
}

void BernoulliCache::clear() {
  std::unique_lock lock(mu_);
  table_ = std::make_shared<const Table>();
}

void BernoulliCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Table t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string idx, num, den;
    if (!(ls >> idx)) continue;
    if (!(ls >> num >> den)) throw ParseError("expected 'index numerator denominator'", lineno);
    try {
      if (std::stoul(idx) != 2 * t.size()) throw ParseError("indices must be 0, 2, 4, ... in order", lineno);
      BigRational q(BigInt(num, 10), BigInt(den, 10));
      if (sgn(q.get_den()) <= 0) throw ParseError("denominator must be positive", lineno);
      q.canonicalize();
      t.push_back(std::move(q));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number", lineno);
    }
  }
  std::unique_lock lock(mu_);
  if (t.size() > table_->size()) table_ = std::make_shared<const Table>(std::move(t));
}

void BernoulliCache::save(const std::string& path) const {
  std::shared_ptr<const Table> t;
  {
    std::shared_lock lock(mu_);
    t = table_;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  for (size_t k = 0; k < t->size(); ++k) {
    out << 2 * k << " " << (*t)[k].get_num().get_str() << " " << (*t)[k].get_den().get_str() << "\n";
  }
  if (!out) throw Error("write failed for " + path);
}

std::shared_ptr<const BernoulliCache::Table> bernoulli_even(size_t upto_2N) {
  return BernoulliCache::global().upto(upto_2N);
}

}  // namespace holo
