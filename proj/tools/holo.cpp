#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bench.hpp"
#include "holonomic/holonomic.h"

namespace {

struct Precision {
  long bits = 0;
  long digits = 0;

  void add_to(CLI::App* cmd, long default_bits) {
    bits = default_bits;
    auto* b = cmd->add_option("--prec-bits", bits, "Precision in bits")->capture_default_str();
    cmd->add_option("--digits", digits, "Precision in decimal digits")->excludes(b);
  }
  long resolve() const {
    if (digits > 0) return static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0)));
    return bits;
  }
};

struct PlanArgs {
  std::string algorithm = "auto";
  uint64_t m = 0;
  long guard_bits = -1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--algorithm,-a", algorithm,
                    "auto, naive, binsplit-exact, multipoint, rect-ps, rect-split, rect-split-taylor, rect-delta")
        ->capture_default_str();
    cmd->add_option("--m", m, "Step length (0 = automatic)");
    cmd->add_option("--guard-bits", guard_bits, "Guard bits (-1 = automatic)");
  }
  holo_status fill(holo_plan& plan) const {
    holo_plan_init(&plan);
    plan.m = m;
    plan.guard_bits = guard_bits;
    return holo_algorithm_from_name(algorithm.c_str(), &plan.algorithm);
  }
};

int report(holo_status st) {
  std::cerr << "error: " << holo_last_error() << "\n";
  return static_cast<int>(st);
}

std::string ball_text(const holo_ball* b, int digits) {
  char* s = holo_ball_to_string(b, digits);
  std::string out = s ? s : "?";
  holo_string_free(s);
  return out;
}

void print_result(const holo_result* r, int digits, bool stats) {
  for (size_t i = 0; i < holo_result_size(r); ++i) std::cout << ball_text(holo_result_component(r, i), digits) << "\n";
  if (stats) {
    holo_counters c = holo_result_counters(r);
    std::cerr << "algorithm=" << holo_algorithm_name(holo_result_algorithm(r)) << " m=" << holo_result_m(r)
              << " accuracy_bits=" << holo_result_accuracy_bits(r) << " nonscalar=" << c.nonscalar
              << " scalar=" << c.scalar << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate parametric holonomic sequences in ball arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  int digits_out = 0;
  bool stats = false;
  app.add_option("--print-digits", digits_out, "Digits to print (0 = by accuracy)");
  app.add_flag("--stats", stats, "Print algorithm, step and counters to stderr");

  auto* eval = app.add_subcommand("eval", "Evaluate a recurrence spec file at term n");
  std::string spec_path, z_text = "0";
  uint64_t n = 0;
  Precision eval_prec;
  PlanArgs eval_plan;
  eval->add_option("spec", spec_path, "Spec file")->required();
  eval->add_option("--n,-n", n, "Term index")->required();
  eval->add_option("--z,-z", z_text, "Parameter value")->capture_default_str();
  eval_prec.add_to(eval, 64);
  eval_plan.add_to(eval);

  auto* gamma = app.add_subcommand("gamma", "Gamma function of a real argument");
  std::string x_text, method = "stirling";
  Precision gamma_prec;
  PlanArgs gamma_plan;
  uint64_t shift = 0;
  gamma->add_option("x", x_text, "Argument")->required();
  gamma->add_option("--method", method, "stirling or 1f1")->check(CLI::IsMember({"stirling", "1f1"}))->capture_default_str();
  gamma->add_option("--shift", shift, "Stirling shift n (0 = automatic)");
  gamma_prec.add_to(gamma, 64);
  gamma_plan.add_to(gamma);

  auto* rising = app.add_subcommand("rising", "Rising factorial z (z+1) ... (z+n-1)");
  std::string rz_text;
  uint64_t rn = 0;
  Precision rising_prec;
  PlanArgs rising_plan;
  rising->add_option("z", rz_text, "Argument")->required();
  rising->add_option("n", rn, "Number of factors")->required();
  rising_prec.add_to(rising, 64);
  rising_plan.add_to(rising);

  auto* bench = app.add_subcommand("bench", "Timing sweep written as CSV");
  holo_cli::BenchConfig cfg;
  std::string out_path;
  bench->add_option("--suite", cfg.suite, "rising or gamma")->check(CLI::IsMember({"rising", "gamma"}))->capture_default_str();
  bench->add_option("--n", cfg.sizes, "Sizes (rising) or precisions in bits (gamma)")->required()->delimiter(',');
  bench->add_option("--prec-rule", cfg.prec_rule, "Precision rule for the rising suite, e.g. 4n or 1000")->capture_default_str();
  bench->add_option("--algorithms", cfg.algorithms, "Algorithms to run")->delimiter(',');
  bench->add_option("--z", cfg.z, "Argument (default 1/3 for rising, 5/4 for gamma)");
  bench->add_option("--runs", cfg.runs, "Timed runs per cell; best is kept")->capture_default_str();
  bench->add_option("--out,-o", out_path, "Output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (*eval) {
    std::ifstream in(spec_path);
    if (!in) {
      std::cerr << "error: cannot open " << spec_path << "\n";
      return HOLO_ERR_INVALID;
    }
    std::stringstream text;
    text << in.rdbuf();
    holo_spec* spec = nullptr;
    int line = 0;
    holo_status st = holo_spec_parse(text.str().c_str(), &spec, &line);
    if (st != HOLO_OK) {
      std::cerr << spec_path << ":" << line << ": ";
      return report(st);
    }
    holo_plan plan;
    long prec = eval_prec.resolve();
    holo_ball* z = nullptr;
    holo_result* r = nullptr;
    if ((st = eval_plan.fill(plan)) == HOLO_OK) {
      st = holo_eval_rational(spec, z_text.c_str(), n, prec, &plan, &r);
      if (st == HOLO_ERR_PARSE && (st = holo_ball_from_string(z_text.c_str(), prec, &z)) == HOLO_OK) {
        st = holo_eval(spec, z, n, prec, &plan, &r);
      }
    }
    holo_spec_free(spec);
    holo_ball_free(z);
    if (st != HOLO_OK) {
      if (st == HOLO_ERR_DENOMINATOR) std::cerr << "index " << holo_last_error_index() << ": ";
      return report(st);
    }
    print_result(r, digits_out, stats);
    holo_result_free(r);
    return 0;
  }

  if (*gamma || *rising) {
    bool is_gamma = gamma->parsed();
    const Precision& pr = is_gamma ? gamma_prec : rising_prec;
    const PlanArgs& pa = is_gamma ? gamma_plan : rising_plan;
    long prec = pr.resolve();
    holo_plan plan;
    holo_status st = pa.fill(plan);
    if (st != HOLO_OK) return report(st);
    plan.stirling_shift = shift;
    holo_ball* x = nullptr;
    if ((st = holo_ball_from_string((is_gamma ? x_text : rz_text).c_str(), prec, &x)) != HOLO_OK) return report(st);
    holo_result* r = nullptr;
    if (is_gamma) {
      st = holo_gamma(x, prec, method == "1f1" ? HOLO_GAMMA_1F1 : HOLO_GAMMA_STIRLING, &plan, &r);
    } else {
      st = holo_rising(x, rn, prec, &plan, &r);
    }
    holo_ball_free(x);
    if (st != HOLO_OK) return report(st);
    print_result(r, digits_out, stats);
    if (is_gamma) std::cout << "accuracy_bits: " << holo_result_accuracy_bits(r) << "\n";
    holo_result_free(r);
    return 0;
  }

  try {
    std::vector<holo_cli::BenchRecord> rows = holo_cli::run_bench(cfg);
    if (out_path.empty()) {
      holo_cli::write_csv(std::cout, rows);
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return HOLO_ERR_INVALID;
      }
      holo_cli::write_csv(out, rows);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return HOLO_ERR_INTERNAL;
  }
  return 0;
}
