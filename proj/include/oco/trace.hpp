#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "oco/geometry.hpp"

namespace oco {

struct RoundRecord {
  std::size_t t = 0;
  double loss = 0.0;          // <g_t, x_t>
  double competitor = 0.0;    // min over the ball of the prefix loss
  double regret = 0.0;        // R_t
  double bound = std::numeric_limits<double>::quiet_NaN();
  double eta = std::numeric_limits<double>::quiet_NaN();
  double x_pnorm = 0.0;
  std::vector<double> x;      // kept only when requested
  std::vector<double> g;
};

struct TraceHeader {
  BallSpec spec;
  std::string learner;
  std::string adversary;
  std::uint64_t seed = 0;
  std::size_t T_requested = 0;
  std::size_t T_effective = 0;
  std::vector<std::string> warnings;
};

struct RegretTrace {
  TraceHeader header;
  std::vector<RoundRecord> rounds;

  double final_regret() const { return rounds.empty() ? 0.0 : rounds.back().regret; }
};

}  // namespace oco
