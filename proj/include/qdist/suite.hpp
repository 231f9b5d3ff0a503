#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdist/measures.hpp"
#include "qdist/states.hpp"

namespace qdist {

enum class SuiteMode { kClassical, kQuantum, kBoth };

struct SuiteConfig {
  std::uint64_t seed = 1;
  long trials = 100;  // per kind (classical and quantum count separately)
  std::vector<int> dims = {2, 3, 4, 5, 6};
  SuiteMode mode = SuiteMode::kBoth;
  double tolerance = 1e-6;
  int lambda_grid = 512;
  int r_grid = 64;

  void validate() const;
};

// Aggregate over trials for one verified inequality.
struct PartStats {
  std::string name;
  long pass = 0;
  long fail = 0;
  long vacuous = 0;
  double worst_margin = kInfBits;  // min over non-vacuous trials
  long worst_trial = -1;
};

// Full replay record for a failed trial: the two instances as state-file
// JSON plus the seeds that generated them.
struct SuiteFailure {
  std::string part;
  long trial = 0;
  int dim = 0;
  double margin = 0.0;
  std::uint64_t seed_first = 0;
  std::uint64_t seed_second = 0;
  std::string first_json;
  std::string second_json;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<PartStats> parts;
  std::vector<SuiteFailure> failures;
  long total_failures = 0;
  double wall_ms = 0.0;
};

// Runs `trials` classical and/or quantum random trials (dim of trial t is
// dims[t mod |dims|]) and checks every inequality applicable to the kind:
//   classical: divergence <= entropy + 1; entropy <= divergence*(n-1);
//              the (8*divergence+14) substate property; divergence <= 2k+2
//              at the bisected minimal k
//   quantum:   divergence <= entropy + 1; entropy via eigenbasis measurement
//              <= measured divergence*(n-1) + log2 n; entropy <= strong
//              substate k; binary witness entropy >= (entropy - log2 n)/(n-1) - 1
// Trials may run in parallel; the report is deterministic for a fixed config
// regardless of thread count (per-trial seeds, ordered aggregation).
SuiteReport run_suite(const SuiteConfig& config);

// Deterministic JSON rendering; wall_ms is the only field that varies
// between identical runs.
std::string suite_report_to_json(const SuiteReport& report);

bool parse_suite_mode(const std::string& text, SuiteMode* mode);
std::string suite_mode_name(SuiteMode mode);

}  // namespace qdist
