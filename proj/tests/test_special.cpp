#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <thread>

#include "holonomic/special/bernoulli.hpp"
#include "holonomic/special/gamma.hpp"
#include "holonomic/special/rising.hpp"
#include "oracle.hpp"

using namespace holo;

namespace {

BigRational q(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigRational rising_exact(const BigRational& z, uint64_t n) {
  BigRational r = 1;
  for (uint64_t i = 0; i < n; ++i) r *= z + BigRational(static_cast<unsigned long>(i));
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// B_0 .. B_n from sum_{j=0}^{k} C(k+1, j) B_j = 0.
std::vector<BigRational> bernoulli_classical(size_t n) {
  std::vector<BigRational> B(n + 1);
  B[0] = 1;
  for (size_t k = 1; k <= n; ++k) {
    BigRational s = 0;
    for (size_t j = 0; j < k; ++j) s += BigRational(binomial(k + 1, j)) * B[j];
    B[k] = -s / BigRational(static_cast<unsigned long>(k + 1));
  }
  return B;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long shared_bits(const Ball& a, const Ball& b, long p) { return std::min(a.rel_accuracy_bits(p), b.rel_accuracy_bits(p)); }

GammaResult g_st(const BigRational& x, prec_t p) { return gamma_stirling(Ball::from_rational(x, p + 32), p); }
GammaResult g_1f1(const BigRational& x, prec_t p) { return gamma_1f1(Ball::from_rational(x, p + 32), p); }

}  // namespace

TEST_CASE("rising factorial examples") {
  CHECK(ball_contains(rising_factorial(Ball::from_si(1, 64), 5, 64).matrix.a[0], q(120)));
  EvalResult<Ball> e = rising_factorial(Ball::from_rational(q(2, 7), 64), 0, 64);
  CHECK(e.matrix.a[0].is_exact());
  CHECK(ball_contains(e.matrix.a[0], q(1)));
  CHECK(ball_contains(rising_factorial(Ball::from_rational(q(1, 2), 64), 9, 64).matrix.a[0], q(34459425, 512)));
  for (Algorithm a : {Algorithm::naive, Algorithm::rect_delta, Algorithm::rect_split, Algorithm::multipoint}) {
    EvalOptions o;
    o.algorithm = a;
    CHECK(ball_contains(rising_factorial(Ball::from_si(1, 600), 100, 600, o).matrix.a[0],
                        rising_exact(q(1), 100)));
  }
}

TEST_CASE("rising factorial functional equation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    BigRational z = oracle::random_rational(rng);
    if (sgn(z) == 0) continue;
    uint64_t a = 1 + static_cast<uint64_t>(t) * 13, b = 3 + static_cast<uint64_t>(t) * 29;
    prec_t p = 256;
    Ball whole = rising_factorial(Ball::from_rational(z, p), a + b, p).matrix.a[0];
    Ball left = rising_factorial(Ball::from_rational(z, p), a, p).matrix.a[0];
    Ball right = rising_factorial(Ball::from_rational(z + BigRational(static_cast<unsigned long>(a)), p), b, p).matrix.a[0];
    Ball prod = ball_mul(left, right, p);
    CHECK(ball_overlaps(whole, prod));
    BigRational exact = rising_exact(z, a + b);
    CHECK(exact == rising_exact(z, a) * rising_exact(z + BigRational(static_cast<unsigned long>(a)), b));
    CHECK(ball_contains(whole, exact));
    CHECK(ball_contains(prod, exact));
  }
}

TEST_CASE("stirling numbers of the first kind") {
  std::vector<BigInt> r4 = stirling1_row(4);
  CHECK(r4 == std::vector<BigInt>{BigInt(0), BigInt(6), BigInt(11), BigInt(6), BigInt(1)});
  CHECK(stirling1_row(0) == std::vector<BigInt>{BigInt(1)});
  // Row sums are m!.
  BigInt s = 0;
  for (auto& v : stirling1_row(10)) s += v;
  CHECK(s == BigInt(3628800));
}

TEST_CASE("rising delta coefficients") {
  RisingDeltaCoeffs c4 = rising_delta_coeffs(4);
  CHECK(c4.c[0] == std::vector<BigInt>{BigInt(840), BigInt(632), BigInt(168), BigInt(16)});
  CHECK(c4.c[1] == std::vector<BigInt>{BigInt(632), BigInt(336), BigInt(48)});
  CHECK(c4.c[2] == std::vector<BigInt>{BigInt(168), BigInt(48)});
  CHECK(c4.c[3] == std::vector<BigInt>{BigInt(16)});
  CHECK(1 * c4(1, 0) == 1 * c4(0, 1));

  RisingDeltaCoeffs c2 = rising_delta_coeffs(2);
  CHECK(c2(0, 0) == 6);
  CHECK(c2(0, 1) == 4);
  CHECK(c2(1, 0) == 4);
  CHECK(c2.as_bipoly() == BiPoly::parse("4*x + 4*k + 6"));

  for (uint64_t m = 1; m <= 12; ++m) {
    RisingDeltaCoeffs c = rising_delta_coeffs(m);
    INFO("m = " << m);
    CHECK(c.c == rising_delta_coeffs_closed_form(m).c);
    for (size_t v = 0; v + 1 < m; ++v)
      for (size_t i = 0; i + v + 1 < m; ++i)
        CHECK(BigInt(static_cast<unsigned long>(v + 1)) * c(v + 1, i) == BigInt(static_cast<unsigned long>(i + 1)) * c(v, i + 1));
    CHECK(c.as_bipoly() == delta_matrix(RecMatrix::rising_factorial(), m)(0, 0));
  }
}

TEST_CASE("tangent and Bernoulli numbers") {
  CHECK(tangent_numbers(5) == std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(16), BigInt(272), BigInt(7936)});
  std::vector<BigRational> B = bernoulli_even_table(31);
  CHECK(B[0] == q(1));
  CHECK(B[1] == q(1, 6));
  CHECK(B[2] == q(-1, 30));
  CHECK(B[15] == BigRational(BigInt("8615841276005"), BigInt(14322)));
  std::vector<BigRational> oracle = bernoulli_classical(60);
  for (size_t k = 0; k <= 30; ++k) {
    INFO("B_" << 2 * k);
    CHECK(B[k] == oracle[2 * k]);
    if (k == 0) continue;
    BigInt den = 1;
    for (unsigned long p = 2; p <= 2 * k + 1; ++p)
      if (is_prime(p) && (2 * k) % (p - 1) == 0) den *= p;
    CHECK(B[k].get_den() == den);
  }
}

TEST_CASE("Bernoulli cache") {
  BernoulliCache& c = BernoulliCache::global();
  c.clear();
  CHECK(c.size() == 0);
  auto s10 = c.upto(10);
  CHECK(s10->size() >= 6);
  size_t before = c.size();
  auto s40 = c.upto(40);
  CHECK(c.size() >= before);
  CHECK(s40->size() >= 21);
  CHECK((*s10)[5] == (*s40)[5]);
  c.clear();
  CHECK((*s40)[20] == bernoulli_even_table(21)[20]);

  std::string path = (std::filesystem::temp_directory_path() / "holo_bernoulli_test.txt").string();
  c.upto(60);
  size_t saved = c.size();
  c.save(path);
  c.clear();
  c.load(path);
  CHECK(c.size() == saved);
  CHECK((*c.upto(60))[15] == BigRational(BigInt("8615841276005"), BigInt(14322)));
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("0 1 1\n4 -1 30\n", f);
    std::fclose(f);
  }
  CHECK_THROWS(c.load(path));
  std::remove(path.c_str());

  c.clear();
  std::vector<std::thread> threads;
  std::vector<std::shared_ptr<const BernoulliCache::Table>> got(6);
  for (size_t t = 0; t < got.size(); ++t) {
    threads.emplace_back([&, t] { got[t] = bernoulli_even(20 + 30 * t); });
  }
  for (auto& th : threads) th.join();
  std::vector<BigRational> ref = bernoulli_even_table(100);
  for (size_t t = 0; t < got.size(); ++t) {
    REQUIRE(got[t]->size() >= 11 + 15 * t);
    for (size_t k = 0; k < 11 + 15 * t; ++k) CHECK((*got[t])[k] == ref[k]);
  }
}

TEST_CASE("stirling parameters") {
  StirlingParams s = stirling_params(Ball::from_si(1, 333), 333);
  CHECK(s.n == 73);
  CHECK(stirling_params(Ball::from_si(10, 8), 8).n == 0);
  CHECK(std::abs(s.beta - std::log(2.0) / (2 * M_PI)) < 1e-15);

  // Remainder bound |B_2N| / (2N (2N-1) X^(2N-1)) < 2^-p in exact arithmetic; N is minimal for the
  // factorial upper bound on |B_2N| with two spare bits.
  BigRational X = BigRational(1 + static_cast<long>(s.n));
  auto bound = [&](uint64_t N) {
    std::vector<BigRational> B = bernoulli_even_table(N + 1);
    BigRational b = abs(B[N]) / BigRational(static_cast<unsigned long>(2 * N * (2 * N - 1)));
    for (uint64_t i = 0; i < 2 * N - 1; ++i) b /= X;
    return b;
  };
  BigRational two_p = BigRational(1) / BigRational(BigInt(1) << 333);
  CHECK(bound(s.N) < two_p);
  CHECK(stirling_remainder_log2(s.N, static_cast<double>(1 + s.n)) < -335);
  CHECK(stirling_remainder_log2(s.N - 1, static_cast<double>(1 + s.n)) >= -335);

  CHECK_THROWS_AS(stirling_params(Ball::from_si(-3, 64), 64), DomainError);
  CHECK_THROWS_AS(stirling_params(Ball::from_string("0 ± 0.5", 64), 64), DomainError);
}

TEST_CASE("gamma examples") {
  GammaResult g5 = g_st(q(5), 128);
  CHECK(ball_contains(g5.value, q(24)));
  GammaResult g5f = g_1f1(q(5), 128);
  CHECK(ball_contains(g5f.value, q(24)));

  prec_t p = 512;
  Ball sqrt_pi = ball_sqrt(ball_const_pi(p + 64), p + 64);
  CHECK(ball_overlaps(g_st(q(1, 2), p).value, sqrt_pi));
  CHECK(ball_overlaps(g_1f1(q(1, 2), p).value, sqrt_pi));
  Ball half_sqrt_pi = ball_mul(sqrt_pi, Ball::from_rational(q(1, 2), p + 64), p + 64);
  CHECK(ball_overlaps(g_1f1(q(3, 2), p).value, half_sqrt_pi));
  CHECK(ball_contains(g_1f1(q(2), p).value, q(1)));
  CHECK(ball_contains(g_st(q(2), p).value, q(1)));
  CHECK(ball_contains(g_st(q(1), 64).value, q(1)));
  CHECK(ball_contains(g_1f1(q(-1, 2), p).value, q(0)) == false);
  CHECK(ball_overlaps(g_1f1(q(-1, 2), p).value, ball_mul(sqrt_pi, Ball::from_si(-2, p + 64), p + 64)));
  CHECK(ball_overlaps(g_st(q(-1, 2), p).value, ball_mul(sqrt_pi, Ball::from_si(-2, p + 64), p + 64)));

  CHECK_THROWS_AS(g_st(q(0), 64), DomainError);
  CHECK_THROWS_AS(g_1f1(q(-3), 64), DomainError);
}

TEST_CASE("gamma methods agree at 3333 bits") {
  GammaResult a = g_st(q(1, 3), 3333), b = g_1f1(q(1, 3), 3333);
  CHECK(ball_overlaps(a.value, b.value));
  CHECK(shared_bits(a.value, b.value, 3333) >= 3333 - 20);
  CHECK(a.accuracy_bits <= 3333);
}

TEST_CASE("gamma methods overlap on random arguments") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(1000, 2000);
  for (prec_t p : {64, 256, 1024, 4096}) {
    for (int t = 0; t < 50; ++t) {
      BigRational x = q(num(rng), 1000);
      GammaResult a = g_st(x, p), b = g_1f1(x, p);
      INFO("p " << p << " x " << x.get_str());
      CHECK(ball_overlaps(a.value, b.value));
      CHECK(shared_bits(a.value, b.value, p) >= static_cast<long>(p) - 8);
    }
  }
}

TEST_CASE("gamma functional equation") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-3000, 6000);
  for (int t = 0; t < 30; ++t) {
    BigRational x = q(num(rng), 997);
    if (sgn(x) == 0) continue;
    prec_t p = 200;
    Ball xb = Ball::from_rational(x, p + 32);
    Ball lhs = gamma_stirling(Ball::from_rational(x + 1, p + 32), p).value;
    Ball rhs = ball_mul(xb, gamma_stirling(xb, p).value, p + 32);
    CHECK(ball_overlaps(lhs, rhs));
    Ball rhs2 = ball_mul(xb, gamma_1f1(xb, p).value, p + 32);
    CHECK(ball_overlaps(lhs, rhs2));
  }
}

TEST_CASE("1F1 partial sums from the matrix product") {
  RecMatrix G = incomplete_gamma_matrix(4);
  for (uint64_t n : {10, 11}) {
    BigRational s = 0, term = 1;
    for (uint64_t k = 0; k < n; ++k) {
      // 4^k / (k+1)!
      s += term / BigRational(static_cast<unsigned long>(k + 1));
      term *= BigRational(4, static_cast<unsigned long>(k + 1));
    }
    oracle::QMatrix P = oracle::exact_product(G, q(1), n);
    CHECK(P(0, 1) / P(0, 0) == s);
    for (Algorithm a : {Algorithm::naive, Algorithm::multipoint, Algorithm::rect_split, Algorithm::rect_delta}) {
      EvalOptions o;
      o.algorithm = a;
      EvalResult<Ball> r = evaluate(G, Ball::from_si(1, 128), n, 128, o);
      CHECK(ball_contains(ball_div(r.matrix(0, 1), r.matrix(0, 0), 128), s));
    }
  }
}

TEST_CASE("1F1 gamma under different engines") {
  for (Algorithm a : {Algorithm::naive, Algorithm::multipoint, Algorithm::rect_ps, Algorithm::rect_split,
                      Algorithm::rect_split_taylor, Algorithm::rect_delta}) {
    GammaOptions o;
    o.engine.algorithm = a;
    GammaResult r = gamma_1f1(Ball::from_rational(q(5, 4), 600), 512, o);
    GammaResult s = g_st(q(5, 4), 512);
    INFO(algorithm_name(a));
    CHECK(ball_overlaps(r.value, s.value));
    CHECK(r.accuracy_bits >= 500);
  }
}
