#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "holonomic/holonomic.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string text_of(const holo_ball* b, int digits = 0) {
  char* s = holo_ball_to_string(b, digits);
  std::string out = s ? s : "";
  holo_string_free(s);
  return out;
}

struct Spec {
  holo_spec* s = nullptr;
  explicit Spec(const std::string& text) { REQUIRE(holo_spec_parse(text.c_str(), &s, nullptr) == HOLO_OK); }
  ~Spec() { holo_spec_free(s); }
};

struct BallH {
  holo_ball* b = nullptr;
  BallH(const char* text, long prec) { REQUIRE(holo_ball_from_string(text, prec, &b) == HOLO_OK); }
  ~BallH() { holo_ball_free(b); }
};

}  // namespace

TEST_CASE("plan defaults and algorithm names") {
  holo_plan plan;
  holo_plan_init(&plan);
  CHECK(plan.algorithm == HOLO_ALG_AUTO);
  CHECK(plan.guard_bits == -1);
  CHECK(plan.m == 0);
  holo_algorithm a;
  CHECK(holo_algorithm_from_name("rect-delta", &a) == HOLO_OK);
  CHECK(a == HOLO_ALG_RECT_DELTA);
  CHECK(std::strcmp(holo_algorithm_name(HOLO_ALG_MULTIPOINT), "multipoint") == 0);
  CHECK(holo_algorithm_from_name("auto", &a) == HOLO_OK);
  CHECK(a == HOLO_ALG_AUTO);
  CHECK(holo_algorithm_from_name("quick", &a) == HOLO_ERR_INVALID);
  CHECK(std::string(holo_last_error()).find("quick") != std::string::npos);
  CHECK(holo_choose_m(HOLO_ALG_RECT_SPLIT, 10000, 40000) == 13);
  CHECK(holo_choose_m(HOLO_ALG_MULTIPOINT, 10000, 40000) == 100);
}

TEST_CASE("balls through the C interface") {
  BallH b("[1/3 +/- 1e-30]", 128);
  CHECK(holo_ball_contains_rational(b.b, "1/3") == 1);
  CHECK(holo_ball_contains_rational(b.b, "1/2") == 0);
  CHECK(holo_ball_contains_rational(b.b, "x") == -1);
  CHECK(holo_ball_accuracy_bits(b.b, 128) > 90);
  holo_ball* c = holo_ball_clone(b.b);
  CHECK(holo_ball_contains_ball(b.b, c) == 1);
  CHECK(holo_ball_overlaps(b.b, c) == 1);
  holo_ball_free(c);
  CHECK(std::abs(holo_ball_mid_double(b.b) - 1.0 / 3) < 1e-15);
  holo_ball* bad = nullptr;
  CHECK(holo_ball_from_string("1/0", 64, &bad) == HOLO_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(holo_ball_from_string("1", 1, &bad) == HOLO_ERR_INVALID);
  CHECK(holo_ball_from_string(nullptr, 64, &bad) == HOLO_ERR_INVALID);
  BallH e("29.53125", 64);
  CHECK(text_of(e.b) == "29.53125");
}

TEST_CASE("spec parsing, serialization and errors") {
  std::string fib = read_file(std::string(HOLO_TEST_DATA) + "/fibonacci.spec");
  Spec s(fib);
  CHECK(holo_spec_order(s.s) == 2);
  char* out = nullptr;
  REQUIRE(holo_spec_serialize(s.s, &out) == HOLO_OK);
  Spec back(out);
  holo_string_free(out);
  CHECK(holo_spec_equal(s.s, back.s) == 1);

  holo_spec* bad = nullptr;
  int line = 0;
  CHECK(holo_spec_parse("order 2\nentry 0 0 1\nentry 5 0 1\n", &bad, &line) == HOLO_ERR_PARSE);
  CHECK(line == 3);
  CHECK(holo_last_error_line() == 3);
  CHECK(bad == nullptr);
}

TEST_CASE("evaluation") {
  Spec fib(read_file(std::string(HOLO_TEST_DATA) + "/fibonacci.spec"));
  BallH z("0", 64);
  holo_result* r = nullptr;
  REQUIRE(holo_eval(fib.s, z.b, 10, 64, nullptr, &r) == HOLO_OK);
  REQUIRE(holo_result_size(r) == 2);
  CHECK(text_of(holo_result_component(r, 0)) == "55");
  CHECK(text_of(holo_result_component(r, 1)) == "89");
  CHECK(holo_result_component(r, 2) == nullptr);
  CHECK(holo_result_accuracy_bits(r) == 64);
  holo_result_free(r);

  Spec rising(read_file(std::string(HOLO_TEST_DATA) + "/rising.spec"));
  holo_plan plan;
  holo_plan_init(&plan);
  for (int a = HOLO_ALG_NAIVE; a <= HOLO_ALG_RECT_DELTA; ++a) {
    plan.algorithm = static_cast<holo_algorithm>(a);
    REQUIRE(holo_eval_rational(rising.s, "1/3", 40, 128, &plan, &r) == HOLO_OK);
    // (1/3)(4/3)...(118/3) = prod (3i+1) / 3^40
    CHECK(holo_ball_contains_rational(holo_result_component(r, 0),
                                      "315707204306946818358219056144627153200388669993899786240000000000/12157665459056928801") == 1);
    CHECK(holo_result_algorithm(r) == a);
    holo_result_free(r);
  }
  CHECK(holo_eval_rational(rising.s, "0.5 +/- 0.1", 4, 64, nullptr, &r) == HOLO_ERR_PARSE);

  plan.algorithm = HOLO_ALG_RECT_SPLIT;
  plan.m = 3;
  BallH half("0.5", 64);
  REQUIRE(holo_eval(rising.s, half.b, 5, 64, &plan, &r) == HOLO_OK);
  CHECK(holo_ball_contains_rational(holo_result_component(r, 0), "945/32") == 1);
  CHECK(holo_result_m(r) == 3);
  holo_counters c = holo_result_counters(r);
  CHECK(c.nonscalar > 0);
  CHECK(c.scalar > 0);
  holo_result_free(r);

  plan.algorithm = static_cast<holo_algorithm>(42);
  CHECK(holo_eval(rising.s, half.b, 5, 64, &plan, &r) == HOLO_ERR_INVALID);
  CHECK(holo_eval(nullptr, half.b, 5, 64, nullptr, &r) == HOLO_ERR_INVALID);
}

TEST_CASE("denominator failures report the index") {
  Spec v(read_file(std::string(HOLO_TEST_DATA) + "/vanishing_den.spec"));
  BallH z("0.5", 64);
  holo_result* r = nullptr;
  CHECK(holo_eval(v.s, z.b, 5, 64, nullptr, &r) == HOLO_ERR_DENOMINATOR);
  CHECK(holo_last_error_index() == 2);
  REQUIRE(holo_eval(v.s, z.b, 2, 64, nullptr, &r) == HOLO_OK);
  // (1/2)(3/2) / ((-2)(-1))
  CHECK(holo_ball_contains_rational(holo_result_component(r, 0), "3/8") == 1);
  holo_result_free(r);
}

TEST_CASE("rising factorial and gamma") {
  BallH one("1", 600);
  holo_result* r = nullptr;
  REQUIRE(holo_rising(one.b, 20, 600, nullptr, &r) == HOLO_OK);
  CHECK(text_of(holo_result_component(r, 0)) == "2432902008176640000");
  holo_result_free(r);
  REQUIRE(holo_rising(one.b, 0, 64, nullptr, &r) == HOLO_OK);
  CHECK(text_of(holo_result_component(r, 0)) == "1");
  holo_result_free(r);

  BallH five("5", 64);
  for (holo_gamma_method m : {HOLO_GAMMA_STIRLING, HOLO_GAMMA_1F1}) {
    REQUIRE(holo_gamma(five.b, 64, m, nullptr, &r) == HOLO_OK);
    CHECK(holo_ball_contains_rational(holo_result_component(r, 0), "24") == 1);
    CHECK(holo_result_accuracy_bits(r) >= 60);
    holo_result_free(r);
  }
  BallH pole("-2", 64);
  CHECK(holo_gamma(pole.b, 64, HOLO_GAMMA_STIRLING, nullptr, &r) == HOLO_ERR_DOMAIN);
  CHECK(holo_gamma(pole.b, 64, HOLO_GAMMA_1F1, nullptr, &r) == HOLO_ERR_DOMAIN);
  CHECK(holo_gamma(five.b, 64, static_cast<holo_gamma_method>(7), nullptr, &r) == HOLO_ERR_INVALID);

  holo_plan plan;
  holo_plan_init(&plan);
  plan.stirling_shift = 40;
  BallH x("1.25", 256);
  REQUIRE(holo_gamma(x.b, 256, HOLO_GAMMA_STIRLING, &plan, &r) == HOLO_OK);
  holo_result* s = nullptr;
  REQUIRE(holo_gamma(x.b, 256, HOLO_GAMMA_1F1, nullptr, &s) == HOLO_OK);
  CHECK(holo_ball_overlaps(holo_result_component(r, 0), holo_result_component(s, 0)) == 1);
  holo_result_free(r);
  holo_result_free(s);
}

TEST_CASE("Bernoulli cache through the C interface") {
  holo_bernoulli_cache_clear();
  CHECK(holo_bernoulli_cache_size() == 0);
  BallH x("3.5", 512);
  holo_result* r = nullptr;
  REQUIRE(holo_gamma(x.b, 512, HOLO_GAMMA_STIRLING, nullptr, &r) == HOLO_OK);
  holo_result_free(r);
  size_t n = holo_bernoulli_cache_size();
  CHECK(n > 0);
  std::string path = (std::filesystem::temp_directory_path() / "holo_capi_bernoulli.txt").string();
  REQUIRE(holo_bernoulli_cache_save(path.c_str()) == HOLO_OK);
  holo_bernoulli_cache_clear();
  REQUIRE(holo_bernoulli_cache_load(path.c_str()) == HOLO_OK);
  CHECK(holo_bernoulli_cache_size() == n);
  std::remove(path.c_str());
  CHECK(holo_bernoulli_cache_load("/nonexistent/dir/file") != HOLO_OK);
}
