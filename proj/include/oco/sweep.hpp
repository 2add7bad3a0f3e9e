#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oco/config.hpp"
#include "oco/csv.hpp"
#include "oco/harness.hpp"
#include "oco/registry.hpp"

namespace oco {

struct RunRequest {
  std::string learner;
  std::string adversary;
  BallSpec spec;
  std::size_t T = 0;
  std::uint64_t seed = 0;
  LearnerOptions options;
};

// Builds the learner and the adversary (wired to the learner's schedule view) and plays.
RegretTrace run_request(const RunRequest& request, const RunOptions& options = {});

struct SweepConfig {
  double p = 10.0;
  double L = 1.0;
  std::size_t T = 40;
  std::vector<std::string> learners;
  std::string adversary = "corner-alternation";
  std::vector<std::size_t> dims;
  std::size_t seeds = 1;        // seeds per cell
  std::uint64_t seed = 0;       // first seed; cell seeds are seed, seed+1, ...
  std::string out;

  void validate() const;
};

// Keys: p, lipschitz, horizon, learners, adversary, dims, seeds, seed, out.
SweepConfig sweep_config_from(const ConfigMap& config);

// One row per (learner, d, seed) holding the final regret and bound, ordered by cell index
// (learner-major, then d, then seed) whatever the worker count.
std::vector<CsvRow> run_sweep(const SweepConfig& config);
// run_sweep followed by writing config.out.
void sweep(const SweepConfig& config);

}  // namespace oco
