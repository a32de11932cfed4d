#include "holonomic/holonomic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "holonomic/engines/engines.hpp"
#include "holonomic/special/bernoulli.hpp"
#include "holonomic/special/gamma.hpp"
#include "holonomic/special/rising.hpp"
#include "holonomic/specfile.hpp"

struct holo_ball {
  holo::Ball b;
};

struct holo_spec {
  holo::SpecFile s;
};

struct holo_result {
  std::vector<holo_ball> comps;
  long accuracy = 0;
  holo::Algorithm algorithm = holo::Algorithm::naive;
  uint64_t m = 0;
  holo::OpCounters counters;
};

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;
thread_local uint64_t g_error_index = 0;

template <class F>
holo_status guarded(F&& f) {
  g_error.clear();
  try {
    f();
    return HOLO_OK;
  } catch (const holo::ParseError& e) {
    g_error = e.what();
    g_error_line = e.line();
    return HOLO_ERR_PARSE;
  } catch (const holo::DenominatorError& e) {
    g_error = e.what();
    g_error_index = e.index();
    return HOLO_ERR_DENOMINATOR;
  } catch (const holo::DomainError& e) {
    g_error = e.what();
    return HOLO_ERR_DOMAIN;
  } catch (const holo::InvalidArgument& e) {
    g_error = e.what();
    return HOLO_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return HOLO_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return HOLO_ERR_INTERNAL;
  }
}

holo_status invalid(const char* what) {
  g_error = what;
  return HOLO_ERR_INVALID;
}

holo::prec_t checked_prec(long prec) {
  if (prec < 2) throw holo::InvalidArgument("precision must be at least 2 bits");
  return static_cast<holo::prec_t>(prec);
}

holo::EvalOptions to_options(const holo_plan* plan) {
  holo::EvalOptions o;
  if (!plan) return o;
  if (plan->algorithm != HOLO_ALG_AUTO) {
    if (plan->algorithm < HOLO_ALG_NAIVE || plan->algorithm > HOLO_ALG_RECT_DELTA) {
      throw holo::InvalidArgument("unknown algorithm");
    }
    o.algorithm = static_cast<holo::Algorithm>(plan->algorithm);
  }
  if (plan->m > 0) o.m = plan->m;
  if (plan->subproduct > 0) o.subproduct = plan->subproduct;
  if (plan->guard_bits >= 0) o.guard_bits = plan->guard_bits;
  return o;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

holo_result* make_result(std::vector<holo::Ball> comps, long accuracy, const holo::EvalPlan& plan,
                         const holo::OpCounters& ctr) {
  auto* r = new holo_result;
  for (auto& c : comps) r->comps.push_back(holo_ball{std::move(c)});
  r->accuracy = accuracy;
  r->algorithm = plan.algorithm;
  r->m = plan.m;
  r->counters = ctr;
  return r;
}

holo_result* eval_spec(const holo::SpecFile& spec, const holo::Ball& z, const holo::BigRational* exact_z, uint64_t n,
                       long prec_bits, const holo_plan* plan) {
  holo::prec_t p = checked_prec(prec_bits);
  holo::EvalExtras extras;
  extras.exact_z = exact_z;
  holo::EvalResult<holo::Ball> res = holo::evaluate(spec.matrix, z, n, p, to_options(plan), extras);
  holo::prec_t wp = res.plan.working_prec();
  size_t r = spec.matrix.order();
  std::vector<holo::Ball> v0;
  for (size_t i = 0; i < r; ++i) {
    if (spec.has_init) {
      v0.push_back(holo::Ball::from_string(spec.init[i], wp));
    } else {
      v0.push_back(holo::Ball::from_si(i == 0 ? 1 : 0, wp));
    }
  }
  std::vector<holo::Ball> v = holo::apply(res.matrix, v0, wp);
  long acc = holo::accuracy_bits(v, p);
  return make_result(std::move(v), acc, res.plan, res.counters);
}

}  // namespace

extern "C" {

void holo_plan_init(holo_plan* plan) {
  if (!plan) return;
  plan->algorithm = HOLO_ALG_AUTO;
  plan->m = 0;
  plan->subproduct = 0;
  plan->guard_bits = -1;
  plan->stirling_shift = 0;
}

const char* holo_last_error(void) { return g_error.c_str(); }
int holo_last_error_line(void) { return g_error_line; }
uint64_t holo_last_error_index(void) { return g_error_index; }

const char* holo_algorithm_name(holo_algorithm alg) {
  if (alg == HOLO_ALG_AUTO) return "auto";
  if (alg < HOLO_ALG_NAIVE || alg > HOLO_ALG_RECT_DELTA) return "unknown";
  return holo::algorithm_name(static_cast<holo::Algorithm>(alg)).data();
}

holo_status holo_algorithm_from_name(const char* name, holo_algorithm* out) {
  if (!name || !out) return invalid("null argument");
  if (std::strcmp(name, "auto") == 0) {
    *out = HOLO_ALG_AUTO;
    return HOLO_OK;
  }
  auto a = holo::parse_algorithm(name);
  if (!a) {
    g_error = std::string("unknown algorithm '") + name + "'";
    return HOLO_ERR_INVALID;
  }
  *out = static_cast<holo_algorithm>(*a);
  return HOLO_OK;
}

holo_status holo_ball_from_string(const char* text, long prec_bits, holo_ball** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new holo_ball{holo::Ball::from_string(text, checked_prec(prec_bits))}; });
}

holo_ball* holo_ball_clone(const holo_ball* b) { return b ? new holo_ball{b->b} : nullptr; }

void holo_ball_free(holo_ball* b) { delete b; }

char* holo_ball_to_string(const holo_ball* b, int digits) {
  if (!b) return nullptr;
  try {
    return dup_string(b->b.to_string(digits));
  } catch (const std::exception& e) {
    g_error = e.what();
    return nullptr;
  }
}

long holo_ball_accuracy_bits(const holo_ball* b, long cap) { return b ? b->b.rel_accuracy_bits(cap) : 0; }

int holo_ball_contains_rational(const holo_ball* b, const char* q) {
  if (!b || !q) return -1;
  try {
    return holo::ball_contains(b->b, holo::parse_rational(q)) ? 1 : 0;
  } catch (const std::exception& e) {
    g_error = e.what();
    return -1;
  }
}

int holo_ball_contains_ball(const holo_ball* outer, const holo_ball* inner) {
  return outer && inner && holo::ball_contains(outer->b, inner->b) ? 1 : 0;
}

int holo_ball_overlaps(const holo_ball* a, const holo_ball* b) {
  return a && b && holo::ball_overlaps(a->b, b->b) ? 1 : 0;
}

double holo_ball_mid_double(const holo_ball* b) { return b ? b->b.mid_double() : 0.0; }

void holo_string_free(char* s) { std::free(s); }

holo_status holo_spec_parse(const char* text, holo_spec** out, int* err_line) {
  if (!text || !out) return invalid("null argument");
  if (err_line) *err_line = 0;
  holo_status st = guarded([&] { *out = new holo_spec{holo::parse_spec(text)}; });
  if (st == HOLO_ERR_PARSE && err_line) *err_line = g_error_line;
  return st;
}

holo_status holo_spec_serialize(const holo_spec* spec, char** out) {
  if (!spec || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(holo::serialize_spec(spec->s)); });
}

size_t holo_spec_order(const holo_spec* spec) { return spec ? spec->s.matrix.order() : 0; }

int holo_spec_equal(const holo_spec* a, const holo_spec* b) {
  if (!a || !b) return 0;
  return a->s.matrix == b->s.matrix && a->s.init == b->s.init && a->s.has_init == b->s.has_init ? 1 : 0;
}

void holo_spec_free(holo_spec* spec) { delete spec; }

holo_status holo_eval(const holo_spec* spec, const holo_ball* z, uint64_t n, long prec_bits, const holo_plan* plan,
                      holo_result** out) {
  if (!spec || !z || !out) return invalid("null argument");
  return guarded([&] { *out = eval_spec(spec->s, z->b, nullptr, n, prec_bits, plan); });
}

holo_status holo_eval_rational(const holo_spec* spec, const char* z, uint64_t n, long prec_bits,
                               const holo_plan* plan, holo_result** out) {
  if (!spec || !z || !out) return invalid("null argument");
  return guarded([&] {
    holo::BigRational q = holo::parse_rational(z);
    holo::prec_t p = checked_prec(prec_bits);
    holo::Ball zb = holo::Ball::from_rational(q, holo::make_plan(n, p, to_options(plan)).working_prec());
    *out = eval_spec(spec->s, zb, &q, n, prec_bits, plan);
  });
}

holo_status holo_rising(const holo_ball* z, uint64_t n, long prec_bits, const holo_plan* plan, holo_result** out) {
  if (!z || !out) return invalid("null argument");
  return guarded([&] {
    holo::prec_t p = checked_prec(prec_bits);
    holo::EvalResult<holo::Ball> res = holo::rising_factorial(z->b, n, p, to_options(plan));
    *out = make_result({res.matrix.a[0]}, res.accuracy_bits, res.plan, res.counters);
  });
}

holo_status holo_gamma(const holo_ball* x, long prec_bits, holo_gamma_method method, const holo_plan* plan,
                       holo_result** out) {
  if (!x || !out) return invalid("null argument");
  return guarded([&] {
    holo::prec_t p = checked_prec(prec_bits);
    holo::GammaOptions opt;
    opt.engine = to_options(plan);
    if (plan && plan->stirling_shift > 0) opt.shift = plan->stirling_shift;
    holo::GammaResult g;
    if (method == HOLO_GAMMA_STIRLING) {
      g = holo::gamma_stirling(x->b, p, opt);
    } else if (method == HOLO_GAMMA_1F1) {
      g = holo::gamma_1f1(x->b, p, opt);
    } else {
      throw holo::InvalidArgument("unknown gamma method");
    }
    holo::EvalPlan info = holo::make_plan(g.n, p, opt.engine);
    *out = make_result({std::move(g.value)}, g.accuracy_bits, info, g.counters);
  });
}

size_t holo_result_size(const holo_result* r) { return r ? r->comps.size() : 0; }

const holo_ball* holo_result_component(const holo_result* r, size_t i) {
  return r && i < r->comps.size() ? &r->comps[i] : nullptr;
}

long holo_result_accuracy_bits(const holo_result* r) { return r ? r->accuracy : 0; }

holo_algorithm holo_result_algorithm(const holo_result* r) {
  return r ? static_cast<holo_algorithm>(r->algorithm) : HOLO_ALG_AUTO;
}

uint64_t holo_result_m(const holo_result* r) { return r ? r->m : 0; }

holo_counters holo_result_counters(const holo_result* r) {
  holo_counters c{};
  if (!r) return c;
  c.nonscalar = r->counters.nonscalar;
  c.scalar = r->counters.scalar;
  c.additions = r->counters.additions;
  c.coeff_ops = r->counters.coeff_ops;
  c.peak_coeffs = r->counters.peak_coeffs;
  return c;
}

void holo_result_free(holo_result* r) { delete r; }

uint64_t holo_choose_m(holo_algorithm alg, uint64_t n, long prec_bits) {
  if (prec_bits < 2) prec_bits = 2;
  holo::Algorithm a = alg == HOLO_ALG_AUTO ? holo::default_algorithm(n) : static_cast<holo::Algorithm>(alg);
  return holo::choose_m(a, n, static_cast<holo::prec_t>(prec_bits));
}

void holo_bernoulli_cache_clear(void) { holo::BernoulliCache::global().clear(); }

size_t holo_bernoulli_cache_size(void) { return holo::BernoulliCache::global().size(); }

holo_status holo_bernoulli_cache_load(const char* path) {
  if (!path) return invalid("null argument");
  return guarded([&] { holo::BernoulliCache::global().load(path); });
}

holo_status holo_bernoulli_cache_save(const char* path) {
  if (!path) return invalid("null argument");
  return guarded([&] { holo::BernoulliCache::global().save(path); });
}

}  // extern "C"
