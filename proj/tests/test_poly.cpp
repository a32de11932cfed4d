#include <doctest.h>

#include <random>

#include "holonomic/engines/engines.hpp"
#include "holonomic/poly/bipoly.hpp"
#include "holonomic/poly/hpoly.hpp"
#include "holonomic/poly/kronecker.hpp"
#include "holonomic/poly/multipoint.hpp"
#include "holonomic/poly/powertable.hpp"
#include "oracle.hpp"

using namespace holo;

namespace {

ZPoly zp(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

ZPoly random_zpoly(std::mt19937_64& rng, size_t len, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<BigInt> v(len);
  for (auto& x : v) x = c(rng);
  return ZPoly(std::move(v));
}

BiPoly bp(const std::string& s) { return BiPoly::parse(s); }

// p(x + c) by expanding binomials directly.
ZPoly shift_by_binomials(const ZPoly& p, const BigInt& c) {
  std::vector<BigInt> out(p.length());
  for (size_t i = 0; i < p.length(); ++i) {
    BigInt binom = 1, cp = 1;
    // coefficient of x^j in (x + c)^i is C(i, j) c^(i-j)
    std::vector<BigInt> powc(i + 1);
    for (size_t e = 0; e <= i; ++e) {
      powc[e] = cp;
      cp *= c;
    }
    for (size_t j = 0; j <= i; ++j) {
      out[j] += p[i] * binom * powc[i - j];
      binom = binom * BigInt(static_cast<unsigned long>(i - j)) / BigInt(static_cast<unsigned long>(j + 1));
    }
  }
  return ZPoly(std::move(out));
}

}  // namespace

TEST_CASE("uni_mul examples") {
  CHECK(zp({1, 1}) * zp({1, 1}) == zp({1, 2, 1}));
  CHECK((zp({3, 4}) * ZPoly()).is_zero());
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    ZPoly a = random_zpoly(rng, 21, 1000000), b = random_zpoly(rng, 21, 1000000);
    CHECK(mul_kronecker(a, b) == mul_schoolbook(a, b));
    CHECK(uni_mul(a, b) == mul_schoolbook(a, b));
  }
  // Large-magnitude coefficients with mixed signs.
  ZPoly big = zp({-1, 1});
  big[0] = BigInt(1) << 500;
  big[0] = -big[0];
  ZPoly sq = mul_kronecker(big, big);
  CHECK(sq == mul_schoolbook(big, big));
}

TEST_CASE("kronecker pack round trip") {
  std::vector<BigInt> c{BigInt(-5), BigInt(0), BigInt(123456789), BigInt(-1)};
  CHECK(kronecker_unpack(kronecker_pack(c, 40), c.size(), 40) == c);
}

TEST_CASE("taylor shift examples") {
  CHECK(taylor_shift_basecase(zp({0, 0, 1}), BigInt(1)) == zp({1, 2, 1}));
  ZPoly p = zp({4, -2, 7});
  CHECK(taylor_shift_basecase(p, BigInt(0)) == p);
  CHECK(taylor_shift_basecase(zp({0, -1, 0, 1}), BigInt(2)) == zp({6, 11, 6, 1}));
  CHECK(taylor_shift_convolution(zp({0, 0, 1}), BigInt(1)) == zp({1, 2, 1}));
  CHECK(taylor_shift_convolution(zp({9}), BigInt(5)) == zp({9}));
  CHECK(taylor_shift_convolution(ZPoly(), BigInt(5)).is_zero());
}

TEST_CASE("taylor shift convolution matches basecase and binomial expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> cdist(-9, 9);
  for (int t = 0; t < 200; ++t) {
    ZPoly p = random_zpoly(rng, 1 + t % 65, 50);
    BigInt c = cdist(rng);
    ZPoly base = taylor_shift_basecase(p, c);
    CHECK(taylor_shift_convolution(p, c) == base);
    if (t % 10 == 0) CHECK(shift_by_binomials(p, c) == base);
  }
  for (size_t len : {100, 200, 257}) {
    ZPoly p = random_zpoly(rng, len, 1000);
    CHECK(taylor_shift_convolution(p, BigInt(-3)) == taylor_shift_basecase(p, BigInt(-3)));
  }
}

TEST_CASE("taylor shift composition") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    ZPoly p = random_zpoly(rng, 1 + t * 3, 100);
    BigInt a = t - 15, b = 2 * t + 1;
    CHECK(taylor_shift(taylor_shift(p, a), b) == taylor_shift(p, a + b));
  }
}

TEST_CASE("product tree examples") {
  std::vector<BigInt> pts{BigInt(0), BigInt(1)};
  CHECK(product_tree(pts).root() == zp({0, -1, 1}));
  std::vector<BigInt> one{BigInt(5)};
  CHECK(product_tree(one).root() == zp({-5, 1}));
  std::vector<BigInt> grid{BigInt(0), BigInt(3), BigInt(6), BigInt(9)};
  // x (x-3) (x-6) (x-9) expanded by hand
  CHECK(product_tree(grid).root() == zp({0, -162, 99, -18, 1}));
  std::vector<BigInt> odd{BigInt(1), BigInt(2), BigInt(3)};
  ProductTree t(odd);
  CHECK(t.root() == zp({-6, 11, -6, 1}));
  CHECK(t.root().degree() == 3);
}

TEST_CASE("multipoint evaluation") {
  std::vector<BigInt> pts{BigInt(0), BigInt(1), BigInt(2)};
  CHECK(multipoint_eval(zp({1, 0, 1}), pts) == std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(5)});
  CHECK(multipoint_eval(zp({1, 2, 3}), std::span<const BigInt>()).empty());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    ZPoly p = random_zpoly(rng, 32, 1000);
    std::vector<BigInt> xs;
    for (int i = 0; i < 32 + t; ++i) xs.emplace_back(static_cast<long>(i * 7 - 100 + t));
    std::vector<BigInt> got = multipoint_eval(p, xs);
    REQUIRE(got.size() == xs.size());
    for (size_t i = 0; i < xs.size(); ++i) CHECK(got[i] == horner(p, xs[i]));
  }
}

TEST_CASE("multipoint evaluation with ball coefficients") {
  prec_t p = 128;
  OpCounters ctr;
  std::vector<BigRational> qc{BigRational(1, 3), BigRational(-2, 5), BigRational(7, 2), BigRational(1, 7)};
  std::vector<Ball> hc;
  for (auto& c : qc) hc.push_back(Ball::from_rational(c, p));
  std::vector<BigInt> xs{BigInt(-2), BigInt(0), BigInt(3), BigInt(10), BigInt(11)};
  ProductTree tree(xs);
  std::vector<Ball> got = multipoint_eval(hc, tree, BallCoeffOps<Ball>{p, &ctr});
  for (size_t i = 0; i < xs.size(); ++i) {
    BigRational want = 0, xp = 1;
    for (auto& c : qc) {
      want += c * xp;
      xp *= BigRational(xs[i]);
    }
    CHECK(ball_contains(got[i], want));
  }
  CHECK(ctr.nonscalar == 0);
}

TEST_CASE("bipoly examples") {
  CHECK(bp("x + k") * bp("x - k") == bp("x^2 - k^2"));
  CHECK(bp("3*x*k + 2") * BiPoly::constant(1) == bp("3*x*k + 2"));
  CHECK(bipoly_mul(bp("x + k"), bp("x + k + 1")) == bp("x^2 + 2*x*k + k^2 + x + k"));
  CHECK(bipoly_eval_k(bp("x^2 - k^2"), BigInt(2)) == zp({-4, 0, 1}));
  CHECK(bipoly_eval_k(bp("5 + x*k + 2*x^2 + k^3"), BigInt(0)) == zp({5, 0, 2}));
  CHECK(bp("x^2 - k^2").eval_x(BigInt(3)) == zp({9, 0, -1}));
  CHECK(bp("x + k").shift_k(BigInt(2)) == bp("x + k + 2"));
  CHECK(bp("x*k").shift_x(BigInt(1)) == bp("x*k + k"));
  CHECK(bp("0").is_zero());
  CHECK(bp(" - 3 * x ^ 2 * k + x ").to_string() == bp("x-3*x^2*k").to_string());
  CHECK(BiPoly::parse(bp("7*x^3*k^2 - x*k + 4").to_string()) == bp("7*x^3*k^2 - x*k + 4"));
  CHECK_THROWS_AS(BiPoly::parse("x + * k"), ParseError);
  CHECK_THROWS_AS(BiPoly::parse("x^"), ParseError);
  CHECK_THROWS_AS(BiPoly::parse("y"), ParseError);
}

TEST_CASE("bipoly ring axioms on random triples") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    BiPoly a = oracle::random_bipoly(rng, t % 4, (t / 4) % 4, -9, 9);
    BiPoly b = oracle::random_bipoly(rng, 2, 3, -9, 9);
    BiPoly c = oracle::random_bipoly(rng, 3, 1, -9, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == BiPoly());
    BigRational x0(3, 2), k0(-2, 5);
    CHECK(oracle::eval_bipoly(a * b, x0, k0) == oracle::eval_bipoly(a, x0, k0) * oracle::eval_bipoly(b, x0, k0));
  }
}

TEST_CASE("delta of rising factorial at k = 0") {
  Matrix<BiPoly> d = delta_matrix(RecMatrix::rising_factorial(), 4);
  CHECK(bipoly_eval_k(d(0, 0), BigInt(0)) == zp({840, 632, 168, 16}));
}

TEST_CASE("power table evaluation") {
  prec_t p = 64;
  OpCounters ctr;
  auto t3 = PowerTable<Ball>::build(Ball::from_si(3, p), 1, p, ctr);
  CHECK(ball_contains(uni_eval_powertable(zp({1, 2}), t3, p, ctr), BigRational(7)));
  CHECK(ball_contains(uni_eval_powertable(zp({-11}), t3, p, ctr), BigRational(-11)));

  OpCounters c2;
  auto half = PowerTable<Ball>::build(Ball::from_rational(BigRational(1, 2), p), 3, p, c2);
  uint64_t before = c2.nonscalar;
  CHECK(ball_contains(uni_eval_powertable(zp({840, 632, 168, 16}), half, p, c2), BigRational(1200)));
  CHECK(c2.nonscalar == before);
  CHECK(c2.scalar == 3);
  CHECK(half[0].is_exact());
  CHECK_THROWS_AS(uni_eval_powertable(zp({1, 1, 1, 1, 1}), half, p, c2), InvalidArgument);

  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    BigRational z = oracle::random_rational(rng);
    ZPoly poly = random_zpoly(rng, 1 + t % 9, 1000);
    auto tab = PowerTable<Ball>::build(Ball::from_rational(z, 96), 9, 96, c2);
    BigRational want = 0;
    for (size_t i = poly.length(); i-- > 0;) want = want * z + BigRational(poly[i]);
    CHECK(ball_contains(uni_eval_powertable(poly, tab, 96, c2), want));
  }
}

TEST_CASE("ball polynomial product contains exact product") {
  std::mt19937_64 rng(23);
  for (size_t len : {2, 5, 17, 40}) {
    prec_t p = 100;
    std::vector<BigRational> qa, qb;
    HPoly<Ball> ha, hb;
    for (size_t i = 0; i < len; ++i) {
      qa.push_back(oracle::random_rational(rng) * BigRational(BigInt(1) << (i % 7)));
      qb.push_back(oracle::random_rational(rng));
      ha.push_back(Ball::from_rational(qa.back(), p));
      hb.push_back(Ball::from_rational(qb.back(), p));
    }
    OpCounters ctr;
    HPoly<Ball> prod = hpoly_mul(ha, hb, p, ctr);
    REQUIRE(prod.size() == 2 * len - 1);
    for (size_t k = 0; k < prod.size(); ++k) {
      BigRational s = 0;
      for (size_t i = 0; i < len; ++i)
        if (k >= i && k - i < len) s += qa[i] * qb[k - i];
      CHECK(ball_contains(prod[k], s));
    }
    CHECK(ctr.nonscalar == (len <= kHPolySchoolbookThreshold ? len * len : 2 * len - 1));
  }
}
