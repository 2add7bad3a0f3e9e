#include "oco/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oco/bounds.hpp"
#include "oco/errors.hpp"
#include "oco/projection.hpp"

namespace oco {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_size(std::span<const double> g, const BallSpec& spec) {
  if (g.size() != spec.d) throw ContractError("gradient dimension does not match the ball");
}

}  // namespace

LearnerState::LearnerState(std::size_t d, bool compensated_sum)
    : S(d, 0.0), x(d, 0.0), carry(compensated_sum ? d : 0, 0.0), compensated(compensated_sum) {}

void LearnerState::accumulate(std::span<const double> g) {
  if (g.size() != S.size()) throw ContractError("gradient dimension does not match the state");
  if (!compensated) {
    for (std::size_t i = 0; i < S.size(); ++i) S[i] += g[i];
  } else {
    for (std::size_t i = 0; i < S.size(); ++i) {
      const double y = g[i] - carry[i];
      const double sum = S[i] + y;
      carry[i] = (sum - S[i]) - y;
      S[i] = sum;
    }
  }
  ++t;
}

std::vector<double> ftrl_power_step(const LearnerState& state, double r, double eta,
                                    const BallSpec& spec) {
  if (!(eta > 0.0)) throw DomainError("step size must be positive");
  std::vector<double> theta(state.S.size());
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = -eta * state.S[i];
  return bregman_project(r, conjugate_grad(r, theta), spec);
}

std::vector<double> ftrl_coordwise_step(const LearnerState& state, double r,
                                        std::span<const double> eta, const BallSpec& spec) {
  if (eta.size() != state.S.size()) throw ContractError("need one step size per coordinate");
  std::vector<double> theta(state.S.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!(eta[i] > 0.0)) throw DomainError("step sizes must be positive");
    theta[i] = -eta[i] * state.S[i];
  }
  return bregman_project(r, conjugate_grad(r, theta), spec);
}

std::vector<double> omd_step(std::span<const double> x, std::span<const double> g, double r,
                             double eta, const BallSpec& spec) {
  if (x.size() != g.size()) throw ContractError("iterate and gradient sizes differ");
  if (!(eta > 0.0)) throw DomainError("step size must be positive");
  auto theta = phi_grad(r, x);
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= eta * g[i];
  return bregman_project(r, conjugate_grad(r, theta), spec);
}

void Learner::observe(std::span<const double>) {
  throw ContractError("learner " + id() + " does not take gradient feedback");
}

void Learner::observe_value(double) {
  throw ContractError("learner " + id() + " needs full gradients and cannot run with bandit feedback");
}

double Learner::current_eta() const { return kNaN; }

std::optional<double> Learner::regret_bound(std::size_t) const { return std::nullopt; }

// ---- FTRL with a fixed regularizer ----

FtrlLearner::FtrlLearner(BallSpec spec, RegSpec reg, Schedule schedule, std::string id,
                         bool compensated_sum)
    : spec_(spec), reg_(reg), schedule_(std::move(schedule)), id_(std::move(id)),
      state_(spec.d, compensated_sum) {
  spec_.validate();
}

std::span<const double> FtrlLearner::play() {
  state_.x = ftrl_power_step(state_, reg_.r, schedule_.eta(state_.t - 1), spec_);
  return state_.x;
}

void FtrlLearner::observe(std::span<const double> g) {
  require_size(g, spec_);
  state_.accumulate(g);
}

double FtrlLearner::current_eta() const { return schedule_.eta(state_.t - 1); }

std::optional<RoundRegularizer> FtrlLearner::current_regularizer() const {
  return RoundRegularizer{reg_.r, reg_.mu, current_eta()};
}

std::optional<double> FtrlLearner::regret_bound(std::size_t T) const {
  switch (schedule_.kind) {
    case ScheduleKind::FtrlAnytime:
      return bound_ftrl_anytime(reg_.r, reg_.mu, reg_.D, spec_.L, T);
    case ScheduleKind::Constant:
      return bound_constant_step(reg_.r, reg_.mu, reg_.D, spec_.L, schedule_.constant, T);
    default:
      return std::nullopt;
  }
}

// ---- adaptive FTRL ----

AdaptiveFtrlLearner::AdaptiveFtrlLearner(BallSpec spec, double t0, std::string id)
    : spec_(spec), schedule_(Schedule::adaptive_ftrl(spec, t0)), id_(std::move(id)),
      state_(spec.d) {}

std::span<const double> AdaptiveFtrlLearner::play() {
  const std::size_t s = state_.t - 1;
  state_.x = ftrl_power_step(state_, schedule_.regularizer(s).r, schedule_.eta(s), spec_);
  return state_.x;
}

void AdaptiveFtrlLearner::observe(std::span<const double> g) {
  require_size(g, spec_);
  state_.accumulate(g);
}

double AdaptiveFtrlLearner::current_eta() const { return schedule_.eta(state_.t - 1); }

std::optional<RoundRegularizer> AdaptiveFtrlLearner::current_regularizer() const {
  const RegSpec& reg = schedule_.regularizer(state_.t - 1);
  return RoundRegularizer{reg.r, reg.mu, current_eta()};
}

std::optional<double> AdaptiveFtrlLearner::regret_bound(std::size_t T) const {
  return bound_adaptive_ftrl(spec_.p, spec_.d, spec_.L, T, schedule_.t0);
}

// ---- coordinate-wise FTRL ----

CoordinateFtrlLearner::CoordinateFtrlLearner(BallSpec spec, Schedule schedule, std::string id)
    : spec_(spec), schedule_(std::move(schedule)), id_(std::move(id)), state_(spec.d),
      eta_(spec.d) {
  spec_.validate();
  if (schedule_.kind != ScheduleKind::CoordinateWise || schedule_.scales.size() != spec_.d) {
    throw ContractError("coordinate-wise FTRL needs a coordinate schedule of matching dimension");
  }
}

std::span<const double> CoordinateFtrlLearner::play() {
  const std::size_t s = state_.t - 1;
  for (std::size_t i = 0; i < spec_.d; ++i) eta_[i] = schedule_.eta(s, i);
  state_.x = ftrl_coordwise_step(state_, schedule_.reg.r, eta_, spec_);
  return state_.x;
}

void CoordinateFtrlLearner::observe(std::span<const double> g) {
  require_size(g, spec_);
  state_.accumulate(g);
}

double CoordinateFtrlLearner::current_eta() const {
  double best = 0.0;
  for (std::size_t i = 0; i < spec_.d; ++i) best = std::max(best, schedule_.eta(state_.t - 1, i));
  return best;
}

// ---- OMD ----

OmdLearner::OmdLearner(BallSpec spec, Schedule schedule, std::string id)
    : spec_(spec), schedule_(std::move(schedule)), id_(std::move(id)), state_(spec.d) {
  spec_.validate();
}

std::span<const double> OmdLearner::play() { return state_.x; }

void OmdLearner::observe(std::span<const double> g) {
  require_size(g, spec_);
  const std::size_t t = state_.t;
  state_.x = omd_step(state_.x, g, schedule_.regularizer(t).r, schedule_.eta(t), spec_);
  state_.accumulate(g);
}

double OmdLearner::current_eta() const { return schedule_.eta(state_.t); }

std::optional<double> OmdLearner::regret_bound(std::size_t T) const {
  switch (schedule_.kind) {
    case ScheduleKind::OmdAnytime:
      return bound_omd_anytime(schedule_.reg.r, schedule_.reg.mu, schedule_.reg.D, spec_.L, T);
    case ScheduleKind::AdaptiveOmd:
      return bound_adaptive_omd(spec_.p, spec_.d, spec_.L, T, schedule_.t0);
    default:
      return std::nullopt;
  }
}

// ---- bandit players ----

UniformRandomLearner::UniformRandomLearner(BallSpec spec, std::uint64_t seed)
    : spec_(spec), rng_(seed) {
  spec_.validate();
}

std::span<const double> UniformRandomLearner::play() {
  x_ = sample_ball(spec_, rng_);
  return x_;
}

FixedPointLearner::FixedPointLearner(BallSpec spec, std::vector<double> point, std::string id)
    : spec_(spec), point_(std::move(point)), id_(std::move(id)) {
  if (point_.size() != spec_.d) throw ContractError("fixed point has the wrong dimension");
}

}  // namespace oco
