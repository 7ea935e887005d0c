#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "boolnl/nonlinearity.hpp"

namespace boolnl::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitDisagreement = 2,
};

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Machine-readable report: one JSON object per line,
//   {"method":"nlp","n":3,"value":2,"nearest":["x1 + x3", ...]}
std::string report_to_record(const NlReport& report);
NlReport report_from_record(std::string_view record);

std::string report_to_text(const NlReport& report);

struct BenchConfig {
  int n_from = 4;
  int n_to = 12;
  int samples = 100;
  std::uint64_t seed = 0;
  std::vector<Method> methods{Method::kNlp};
};

struct BenchTiming {
  int n = 0;
  Method method = Method::kNlp;
  bool skipped = false;
  double mean_seconds = 0;
};

struct BenchGrowth {
  int n = 0;  // pair (n, n + 1)
  Method method = Method::kNlp;
  double log2_ratio = 0;  // log2(t_{n+1} / t_n)
};

struct BenchResult {
  std::vector<BenchTiming> timings;
  std::vector<BenchGrowth> growth;
  std::vector<std::string> warnings;
};

// log2(((n+1) 2^(n+1)) / (n 2^n)), the growth of an n 2^n cost.
double model_growth(int n);
// log((n+1) 2^(n+1)) / log(n 2^n); the form the published comparison
// column actually tabulates.
double log_ratio_growth(int n);

// Functions for size n are drawn from a generator seeded with (seed, n), so
// the sample set does not depend on which methods or range are selected.
std::vector<BooleanFunction> bench_sample(int n, int samples, std::uint64_t seed);

BenchResult run_benchmark(const BenchConfig& config);

}  // namespace boolnl::cli
