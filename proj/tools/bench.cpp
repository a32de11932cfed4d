#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "holonomic/holonomic.h"

namespace holo_cli {

namespace {

struct Cell {
  int64_t time_ns = 0;
  uint64_t m = 0;
  uint64_t nonscalar = 0;
  uint64_t scalar = 0;
  long accuracy = 0;
};

[[noreturn]] void fail(const std::string& where) {
  throw std::runtime_error(where + ": " + holo_last_error());
}

struct BallHandle {
  holo_ball* b = nullptr;
  BallHandle(const std::string& text, long prec) {
    if (holo_ball_from_string(text.c_str(), prec, &b) != HOLO_OK) fail("parse '" + text + "'");
  }
  ~BallHandle() { holo_ball_free(b); }
  BallHandle(const BallHandle&) = delete;
  BallHandle& operator=(const BallHandle&) = delete;
};

// One timed call; `run` returns a result handle owned by the caller.
template <class F>
Cell time_once(F&& run) {
  auto t0 = std::chrono::steady_clock::now();
  holo_result* r = run();
  auto t1 = std::chrono::steady_clock::now();
  Cell c;
  c.time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  holo_counters ctr = holo_result_counters(r);
  c.m = holo_result_m(r);
  c.nonscalar = ctr.nonscalar;
  c.scalar = ctr.scalar;
  c.accuracy = holo_result_accuracy_bits(r);
  holo_result_free(r);
  return c;
}

template <class F>
Cell best_of(int runs, bool warmup, F&& run) {
  if (warmup) time_once(run);
  Cell best;
  for (int i = 0; i < std::max(1, runs); ++i) {
    Cell c = time_once(run);
    if (i == 0 || c.time_ns < best.time_ns) best = c;
  }
  return best;
}

Cell rising_cell(const std::string& alg, const std::string& z, uint64_t n, long prec, int runs) {
  holo_plan plan;
  holo_plan_init(&plan);
  if (holo_algorithm_from_name(alg.c_str(), &plan.algorithm) != HOLO_OK) fail("algorithm");
  BallHandle zb(z, prec);
  return best_of(runs, true, [&] {
    holo_result* r = nullptr;
    if (holo_rising(zb.b, n, prec, &plan, &r) != HOLO_OK) fail("rising " + alg);
    return r;
  });
}

Cell gamma_cell(const std::string& alg, const std::string& x, long prec, int runs) {
  holo_plan plan;
  holo_plan_init(&plan);
  holo_gamma_method method = HOLO_GAMMA_STIRLING;
  bool cold = false;
  if (alg == "stirling-cold") {
    cold = true;
  } else if (alg.rfind("1f1", 0) == 0) {
    method = HOLO_GAMMA_1F1;
    std::string engine = alg.size() > 4 ? alg.substr(4) : "rect-split";
    if (holo_algorithm_from_name(engine.c_str(), &plan.algorithm) != HOLO_OK) fail("algorithm");
  } else if (alg != "stirling") {
    throw std::runtime_error("unknown gamma algorithm '" + alg + "'");
  }
  BallHandle xb(x, prec);
  auto run = [&] {
    if (cold) holo_bernoulli_cache_clear();
    holo_result* r = nullptr;
    if (holo_gamma(xb.b, prec, method, &plan, &r) != HOLO_OK) fail("gamma " + alg);
    return r;
  };
  return best_of(runs, !cold, run);
}

}  // namespace

long precision_for(const std::string& rule, uint64_t n) {
  if (!rule.empty() && rule.back() == 'n') {
    double f = rule.size() == 1 ? 1.0 : std::stod(rule.substr(0, rule.size() - 1));
    return std::max(2L, static_cast<long>(std::ceil(f * static_cast<double>(n))));
  }
  return std::stol(rule);
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  bool gamma = cfg.suite == "gamma";
  if (!gamma && cfg.suite != "rising") throw std::runtime_error("unknown suite '" + cfg.suite + "'");
  std::vector<std::string> algs = cfg.algorithms;
  if (algs.empty()) {
    algs = gamma ? std::vector<std::string>{"stirling", "stirling-cold", "1f1-naive", "1f1-multipoint", "1f1-rect-split"}
                 : std::vector<std::string>{"naive", "multipoint", "rect-ps", "rect-split", "rect-delta"};
  }
  std::string baseline = gamma ? "stirling" : "naive";
  std::string z = cfg.z.empty() ? (gamma ? "5/4" : "1/3") : cfg.z;
  std::vector<BenchRecord> rows;
  for (uint64_t n : cfg.sizes) {
    long prec = gamma ? static_cast<long>(n) : precision_for(cfg.prec_rule, n);
    std::map<std::string, Cell> cells;
    for (const auto& alg : algs) {
      cells[alg] = gamma ? gamma_cell(alg, z, prec, cfg.runs) : rising_cell(alg, z, n, prec, cfg.runs);
    }
    if (!cells.count(baseline)) {
      cells[baseline] = gamma ? gamma_cell(baseline, z, prec, cfg.runs) : rising_cell(baseline, z, n, prec, cfg.runs);
    }
    double base = static_cast<double>(std::max<int64_t>(1, cells[baseline].time_ns));
    for (const auto& alg : algs) {
      const Cell& c = cells[alg];
      BenchRecord r;
      r.suite = cfg.suite;
      r.algorithm = alg;
      r.n = n;
      r.prec_bits = prec;
      r.m = c.m;
      r.cold_cache = alg == "stirling-cold";
      r.time_ns = c.time_ns;
      r.nonscalar = c.nonscalar;
      r.scalar = c.scalar;
      r.accuracy_bits = c.accuracy;
      r.ratio = alg == baseline ? 1.0 : static_cast<double>(c.time_ns) / base;
      rows.push_back(r);
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const BenchRecord& a, const BenchRecord& b) {
    auto ia = std::find(algs.begin(), algs.end(), a.algorithm) - algs.begin();
    auto ib = std::find(algs.begin(), algs.end(), b.algorithm) - algs.begin();
    return ia != ib ? ia < ib : a.n < b.n;
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  out << "suite,algorithm,n,prec_bits,m,cold_cache,time_ns,nonscalar,scalar,accuracy_bits,ratio_vs_baseline\n";
  for (const auto& r : rows) {
    out << r.suite << ',' << r.algorithm << ',' << r.n << ',' << r.prec_bits << ',' << r.m << ','
        << (r.cold_cache ? 1 : 0) << ',' << r.time_ns << ',' << r.nonscalar << ',' << r.scalar << ','
        << r.accuracy_bits << ',' << r.ratio << '\n';
  }
}

}  // namespace holo_cli
