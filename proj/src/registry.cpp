#include "oco/registry.hpp"

#include <cmath>

#include "oco/csv.hpp"
#include "oco/errors.hpp"

namespace oco {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

double parse_degree(std::string_view tail, const BallSpec& spec) {
  if (tail == "p") return spec.p;
  try {
    return parse_double(tail);
  } catch (const ContractError&) {
    throw ContractError("bad regularizer degree '" + std::string(tail) + "'");
  }
}

}  // namespace

std::unique_ptr<Learner> make_learner(std::string_view id, const BallSpec& spec,
                                      const LearnerOptions& options) {
  spec.validate();
  const std::string name(id);
  if (id == "ftrl-adaptive" || id == "ftrl-adaptive-2d") {
    double t0 = id == "ftrl-adaptive-2d" ? 2.0 * static_cast<double>(spec.d)
                                         : adaptive_ftrl_threshold(spec.p, spec.d);
    if (options.t0 >= 0.0) t0 = options.t0;
    return std::make_unique<AdaptiveFtrlLearner>(spec, t0, name);
  }
  if (id == "omd-adaptive") {
    const double t0 = options.t0 >= 0.0 ? options.t0 : adaptive_omd_threshold(spec.p, spec.d);
    return std::make_unique<OmdLearner>(spec, Schedule::adaptive_omd(spec, t0), name);
  }
  if (id == "ftrl-coordwise") {
    auto scales = options.coord_scales;
    auto powers = options.coord_powers;
    if (scales.empty()) {
      const RegSpec reg = RegSpec::ftrl(2.0, spec);
      scales.assign(spec.d, ftrl_anytime_step(2.0, reg.mu, reg.D, spec.L, 1));
      powers.assign(spec.d, 0.5);
    }
    return std::make_unique<CoordinateFtrlLearner>(
        spec, Schedule::coordinate_wise(2.0, std::move(scales), std::move(powers)), name);
  }
  if (starts_with(id, "ftrl-phi")) {
    const RegSpec reg = RegSpec::ftrl(parse_degree(id.substr(8), spec), spec);
    return std::make_unique<FtrlLearner>(spec, reg, Schedule::ftrl_anytime(reg, spec.L), name);
  }
  if (starts_with(id, "omd-phi")) {
    const RegSpec reg = RegSpec::omd(parse_degree(id.substr(7), spec), spec);
    return std::make_unique<OmdLearner>(spec, Schedule::omd_anytime(reg, spec.L), name);
  }
  if (id == "uniform-random") return std::make_unique<UniformRandomLearner>(spec, options.seed);
  throw ContractError("unknown learner '" + name + "'");
}

std::vector<std::string> learner_ids() {
  return {"ftrl-phi2",     "ftrl-phip", "ftrl-phi<r>", "ftrl-adaptive", "ftrl-adaptive-2d",
          "ftrl-coordwise", "omd-phi2", "omd-phip",    "omd-phi<r>",    "omd-adaptive",
          "uniform-random"};
}

std::unique_ptr<BanditEnvironment> make_bandit_env(std::string_view id, const BallSpec& spec,
                                                   std::size_t T, std::uint64_t seed,
                                                   const BanditParams& params) {
  return std::make_unique<BanditEnvironment>(parse_bandit_kind(id), spec, T, seed, params);
}

}  // namespace oco
