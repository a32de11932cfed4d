#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace holo_cli {

struct BenchConfig {
  std::string suite = "rising";
  // Sizes n for the rising suite, precisions for the gamma suite.
  std::vector<uint64_t> sizes;
  // "4n" style multiplier rule or a fixed precision in bits.
  std::string prec_rule = "4n";
  std::vector<std::string> algorithms;
  std::string z = "1/3";
  int runs = 3;
};

struct BenchRecord {
  std::string suite;
  std::string algorithm;
  uint64_t n = 0;
  long prec_bits = 0;
  uint64_t m = 0;
  bool cold_cache = false;
  int64_t time_ns = 0;
  uint64_t nonscalar = 0;
  uint64_t scalar = 0;
  long accuracy_bits = 0;
  double ratio = 0.0;
};

// Precision for size n under the rule ("4n", "2.5n" or a plain bit count).
long precision_for(const std::string& rule, uint64_t n);

// Runs every (algorithm, size) cell; rows are ordered by algorithm, then n.
// Throws std::runtime_error when a cell fails.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

}  // namespace holo_cli
