#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oco/adversaries.hpp"
#include "oco/bandit.hpp"
#include "oco/learners.hpp"

namespace oco {

struct LearnerOptions {
  double t0 = -1.0;                  // adaptive switch point; negative picks the default
  std::uint64_t seed = 0;            // randomized learners
  std::vector<double> coord_scales;  // ftrl-coordwise; empty means the phi_2 default for all i
  std::vector<double> coord_powers;
};

// Learner ids:
//   ftrl-phi2, ftrl-phip, ftrl-phi<r>     FTRL with phi_r and the anytime step size
//   ftrl-adaptive, ftrl-adaptive-2d       phi_p then phi_2, switch at 3^{-2p/(p-2)} d or 2d
//   ftrl-coordwise                        phi_2 with per-coordinate step sizes
//   omd-phi2, omd-phip, omd-phi<r>        OMD with the anytime step size
//   omd-adaptive                          phi_p then phi_2 OMD
//   uniform-random                        bandit player drawing uniform points of the ball
std::unique_ptr<Learner> make_learner(std::string_view id, const BallSpec& spec,
                                      const LearnerOptions& options = {});
std::vector<std::string> learner_ids();

std::unique_ptr<BanditEnvironment> make_bandit_env(std::string_view id, const BallSpec& spec,
                                                   std::size_t T, std::uint64_t seed,
                                                   const BanditParams& params = {});

}  // namespace oco
