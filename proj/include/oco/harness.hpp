#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "oco/adversaries.hpp"
#include "oco/bandit.hpp"
#include "oco/learners.hpp"
#include "oco/trace.hpp"

namespace oco {

inline constexpr double kFeasibilitySlack = 1e-9;

struct RunOptions {
  bool keep_points = false;  // store x_t and g_t in every record
};

// Plays T rounds: the learner commits x_t, then sees g_t. Regret is exact and anytime:
// the competitor is recomputed for every prefix.
RegretTrace run_full_info(Learner& learner, Adversary& adversary, const BallSpec& spec,
                          std::size_t T, const RunOptions& options = {});

struct BanditEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::vector<double> samples;      // per-trial pseudo-regret
  std::vector<std::string> warnings;
};

using BanditLearnerFactory =
    std::function<std::unique_ptr<Learner>(std::uint64_t seed, const BanditEnvironment& env)>;
using BanditEnvFactory = std::function<std::unique_ptr<BanditEnvironment>(std::uint64_t seed)>;

// Monte-Carlo pseudo-regret. Trial k uses environment and learner seeds derived from (seed, k);
// its regret is sum_t <E g, x_t> - T min_x <E g, x>, the loss noise integrated out.
BanditEstimate run_bandit(const BanditLearnerFactory& learner, const BanditEnvFactory& env,
                          const BallSpec& spec, std::size_t T, std::size_t trials,
                          std::uint64_t seed);

}  // namespace oco
