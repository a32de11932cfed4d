#include <doctest.h>

#include <memory>
#include <random>

#include "holonomic/scalar/complex_ball.hpp"

using namespace holo;

namespace {

BigRational q(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigRational rad_q(const Ball& b) { return b.rad().to_mpq(); }

struct Expr {
  int op = 0;  // 0 leaf, 1 add, 2 sub, 3 mul, 4 scalar mul, 5 div
  BigRational leaf;
  BigInt scalar;
  std::unique_ptr<Expr> a, b;
};

std::unique_ptr<Expr> random_expr(std::mt19937_64& rng, int depth) {
  auto e = std::make_unique<Expr>();
  std::uniform_int_distribution<int> pick(0, 5), num(-40, 40), den(1, 30);
  e->op = depth == 0 ? 0 : pick(rng);
  if (e->op == 0) {
    e->leaf = q(num(rng), den(rng));
    return e;
  }
  e->a = random_expr(rng, depth - 1);
  if (e->op == 4) {
    e->scalar = num(rng);
  } else {
    e->b = random_expr(rng, std::uniform_int_distribution<int>(0, depth - 1)(rng));
  }
  return e;
}

// Exact value; false when a division by zero occurs.
bool eval_exact(const Expr& e, BigRational& out) {
  BigRational x, y;
  switch (e.op) {
    case 0: out = e.leaf; return true;
    case 4:
      if (!eval_exact(*e.a, x)) return false;
      out = BigRational(e.scalar) * x;
      return true;
    default:
      if (!eval_exact(*e.a, x) || !eval_exact(*e.b, y)) return false;
      if (e.op == 1) out = x + y;
      if (e.op == 2) out = x - y;
      if (e.op == 3) out = x * y;
      if (e.op == 5) {
        if (sgn(y) == 0) return false;
        out = x / y;
      }
      return true;
  }
}

Ball eval_ball(const Expr& e, prec_t p) {
  switch (e.op) {
    case 0: return Ball::from_rational(e.leaf, p);
    case 1: return ball_add(eval_ball(*e.a, p), eval_ball(*e.b, p), p);
    case 2: return ball_sub(eval_ball(*e.a, p), eval_ball(*e.b, p), p);
    case 3: return ball_mul(eval_ball(*e.a, p), eval_ball(*e.b, p), p);
    case 4: return ball_scalar_mul(e.scalar, eval_ball(*e.a, p), p);
    default: return ball_div(eval_ball(*e.a, p), eval_ball(*e.b, p), p);
  }
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == q(3));
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK(parse_rational("-12.5e-3") == q(-1, 80));
  CHECK(parse_rational("0.25") == q(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(rational_to_string(q(-3, 2)) == "-3/2");
  CHECK(rational_to_string(q(7)) == "7");
}

TEST_CASE("mag rounding directions") {
  Mag a = Mag::from_double(0.1), b = Mag::from_double(0.2);
  CHECK(add_up(a, b).to_mpq() >= BigRational(0.1) + BigRational(0.2));
  CHECK(mul_up(a, b).to_mpq() >= BigRational(0.1) * BigRational(0.2));
  CHECK(mul_lower(a, b).to_mpq() <= BigRational(0.1) * BigRational(0.2));
  CHECK(sub_lower(a, b).is_zero());
  CHECK(mul_2exp(Mag::pow2(3), 4).to_mpq() == BigRational(128));
  Mag huge = Mag::pow2(5000);
  CHECK(huge.is_finite());
  CHECK(mul_up(huge, huge).exponent() > 9000);
}

TEST_CASE("ball_add examples") {
  Ball a = Ball::from_string("1.0 ± 0.1", 53), b = Ball::from_string("2.0 ± 0.2", 53);
  Ball s = ball_add(a, b, 53);
  CHECK(ball_contains(s, q(3)));
  CHECK(rad_q(s) >= q(3, 10));

  Ball x = Ball::from_rational(q(22, 7), 53);
  Ball zero(53);
  CHECK(ball_contains(ball_add(x, zero, 53), BigRational(mpq_class(x.mid_double()))));

  Ball third = Ball::from_rational(q(1, 3), 53);
  CHECK(ball_contains(ball_add(third, third, 53), q(2, 3)));
}

TEST_CASE("ball_mul examples") {
  Ball six = ball_mul(Ball::from_si(2, 53), Ball::from_si(3, 53), 53);
  CHECK(ball_contains(six, q(6)));
  CHECK(six.is_exact());

  Ball a = Ball::from_string("1 ± 0.1", 53);
  Ball sq = ball_mul(a, a, 53);
  CHECK(rad_q(sq) >= q(21, 100));
  CHECK(ball_contains(sq, q(121, 100)));
  CHECK(ball_contains(sq, q(81, 100)));

  Ball r2 = ball_sqrt(Ball::from_si(2, 100), 100);
  CHECK(!r2.is_exact());
  CHECK(ball_contains(ball_mul(r2, r2, 100), q(2)));
}

TEST_CASE("ball_scalar_mul examples") {
  Ball b = Ball::from_rational(q(3, 2), 53);
  CHECK(ball_contains(ball_scalar_mul(BigInt(632), b, 53), q(948)));
  CHECK(ball_scalar_mul(BigInt(0), b, 53).is_exact_zero());
  CHECK(ball_contains(ball_scalar_mul(BigInt(632), Ball::from_rational(q(1, 2), 53), 53), q(316)));
}

TEST_CASE("ball_contains examples and exactness") {
  CHECK(ball_contains(Ball::from_string("0.333333333333 ± 1e-10", 64), q(1, 3)));
  CHECK_FALSE(ball_contains(Ball::from_string("0.5 ± 0", 64), q(1, 3)));

  Ball x = Ball::from_rational(q(1, 2), 64);
  for (int i = 1; i < 5; ++i) x = ball_mul(x, Ball::from_rational(q(2 * i + 1, 2), 64), 64);
  CHECK(ball_contains(x, q(945, 32)));

  // Boundary points of an exact-radius ball are members; anything past is not.
  Ball c = Ball::from_string("1 ± 0.5", 64);
  CHECK(ball_contains(c, q(3, 2)));
  CHECK(ball_contains(c, q(1, 2)));
  BigRational eps = BigRational(1) / BigRational(BigInt(1) << 300);
  CHECK_FALSE(ball_contains(c, q(3, 2) + eps));
  CHECK_FALSE(ball_contains(c, q(1, 2) - eps));
  CHECK(ball_contains(Ball::from_string("2 ± 1", 64), Ball::from_string("2.5 ± 0.5", 64)));
  CHECK_FALSE(ball_contains(Ball::from_string("2 ± 1", 64), Ball::from_string("2.5 ± 0.6", 64)));
}

TEST_CASE("containment on random expression trees") {
  std::mt19937_64 rng(20260101);
  int checked = 0, monotone = 0, compared = 0;
  for (int t = 0; t < 400; ++t) {
    auto e = random_expr(rng, 1 + t % 12);
    BigRational exact;
    if (!eval_exact(*e, exact)) continue;
    for (prec_t p : {8, 24, 64, 200}) {
      Ball b = eval_ball(*e, p);
      INFO("tree " << t << " prec " << p << " exact " << exact.get_str() << " ball " << b.to_string());
      CHECK(ball_contains(b, exact));
      ++checked;
    }
    Ball lo = eval_ball(*e, 64), hi = eval_ball(*e, 128);
    if (lo.is_finite() && hi.is_finite() && !lo.is_exact()) {
      ++compared;
      if (rad_q(hi) <= 2 * rad_q(lo)) ++monotone;
    }
  }
  CHECK(checked > 1000);
  // Statistical: a higher precision almost never gives a much wider ball.
  CHECK(monotone >= compared * 95 / 100);
}

TEST_CASE("division and domain errors") {
  Ball a = Ball::from_si(1, 64);
  Ball z = Ball::from_string("0 ± 0.1", 64);
  Ball d = ball_div(a, z, 64);
  CHECK_FALSE(d.is_finite());
  CHECK_THROWS_AS(ball_log(Ball::from_si(-1, 64), 64), DomainError);
  CHECK_THROWS_AS(ball_sqrt(Ball::from_si(-1, 64), 64), DomainError);
}

TEST_CASE("transcendentals are consistent") {
  prec_t p = 256;
  Ball two = Ball::from_si(2, p);
  CHECK(ball_overlaps(ball_log(two, p), ball_const_log2(p)));
  CHECK(ball_contains(ball_exp(ball_log(Ball::from_rational(q(7, 3), p), p), p), q(7, 3)));
  Ball pi = ball_const_pi(p);
  CHECK(ball_overlaps(pi, Ball::from_string("3.14159265358979323846264338327950288419716939937510582097494 ± 1e-59", p)));
  CHECK(ball_contains(ball_pow(Ball::from_si(3, p), Ball::from_si(4, p), p), q(81)));
  CHECK(pi.rel_accuracy_bits(p) >= static_cast<long>(p) - 2);
  CHECK(ball_contains(ball_exp(Ball(p), p), q(1)));
}

TEST_CASE("string round trip") {
  Ball b = Ball::from_string("[12.5 +/- 0.25]", 64);
  CHECK(ball_contains(b, q(25, 2)));
  CHECK(ball_contains(b, q(51, 4)));
  CHECK(Ball::from_rational(q(59, 2), 64).to_string() == "29.5");
  Ball r = Ball::from_string(Ball::from_rational(q(1, 3), 100).to_string(), 100);
  CHECK(ball_contains(r, q(1, 3)));
  CHECK_THROWS_AS(Ball::from_string("1 ± x", 64), ParseError);
}

TEST_CASE("complex ball arithmetic contains exact results") {
  prec_t p = 80;
  ComplexBall a = ComplexBall::from_rational(q(1, 3), q(-2, 7), p);
  ComplexBall b = ComplexBall::from_rational(q(5, 2), q(1, 9), p);
  ComplexBall r(p);
  mul(r, a, b, p);
  CHECK(ball_contains(r, q(1, 3) * q(5, 2) + q(2, 7) * q(1, 9), q(1, 3) * q(1, 9) - q(2, 7) * q(5, 2)));
  div(r, a, b, p);
  BigRational n2 = q(5, 2) * q(5, 2) + q(1, 9) * q(1, 9);
  CHECK(ball_contains(r, (q(1, 3) * q(5, 2) - q(2, 7) * q(1, 9)) / n2, (q(-2, 7) * q(5, 2) - q(1, 3) * q(1, 9)) / n2));
  ComplexBall c = ComplexBall::from_string("1/2-3i", p);
  CHECK(ball_contains(c, q(1, 2), q(-3)));
}
