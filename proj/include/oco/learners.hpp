#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oco/geometry.hpp"
#include "oco/regularizers.hpp"
#include "oco/schedules.hpp"

namespace oco {

struct LearnerState {
  std::size_t t = 1;              // round about to be played
  std::vector<double> S;          // sum of the gradients consumed so far
  std::vector<double> x;          // last played point
  std::vector<double> carry;      // Kahan compensation, used when compensated
  bool compensated = false;

  explicit LearnerState(std::size_t d = 0, bool compensated_sum = false);
  void accumulate(std::span<const double> g);
};

// argmin over the ball of phi_r(x)/eta + <S, x>.
std::vector<double> ftrl_power_step(const LearnerState& state, double r, double eta,
                                    const BallSpec& spec);
// argmin over the ball of phi_r(x) + sum_i eta_i x_i S_i.
std::vector<double> ftrl_coordwise_step(const LearnerState& state, double r,
                                        std::span<const double> eta, const BallSpec& spec);
// argmin over the ball of eta <g, x> + D_{phi_r}(x, x_t).
std::vector<double> omd_step(std::span<const double> x, std::span<const double> g, double r,
                             double eta, const BallSpec& spec);

// psi_t = phi_r / eta with phi_r mu-uniformly convex of degree r.
struct RoundRegularizer {
  double r = 2.0;
  double mu = 1.0;
  double eta = 1.0;
};

class Learner {
 public:
  virtual ~Learner() = default;

  virtual std::string id() const = 0;
  virtual const BallSpec& spec() const = 0;
  // Commits x_t for the current round.
  virtual std::span<const double> play() = 0;
  // Full-information feedback g_t.
  virtual void observe(std::span<const double> g);
  // Bandit feedback <x_t, g_t>.
  virtual void observe_value(double loss);
  virtual bool needs_gradient() const { return true; }

  // Step size in force for the point last played; NaN when the learner has none.
  virtual double current_eta() const;
  virtual std::optional<RoundRegularizer> current_regularizer() const { return std::nullopt; }
  virtual const StepSchedule* schedule() const { return nullptr; }
  // Anytime regret guarantee after T rounds, when the learner has one.
  virtual std::optional<double> regret_bound(std::size_t T) const;
};

class FtrlLearner final : public Learner {
 public:
  FtrlLearner(BallSpec spec, RegSpec reg, Schedule schedule, std::string id,
              bool compensated_sum = false);

  std::string id() const override { return id_; }
  const BallSpec& spec() const override { return spec_; }
  std::span<const double> play() override;
  void observe(std::span<const double> g) override;
  double current_eta() const override;
  std::optional<RoundRegularizer> current_regularizer() const override;
  const StepSchedule* schedule() const override { return &schedule_; }
  std::optional<double> regret_bound(std::size_t T) const override;
  const LearnerState& state() const { return state_; }

 private:
  BallSpec spec_;
  RegSpec reg_;
  Schedule schedule_;
  std::string id_;
  LearnerState state_;
};

// FTRL with phi_p while t <= t0 and phi_2 afterwards.
class AdaptiveFtrlLearner final : public Learner {
 public:
  AdaptiveFtrlLearner(BallSpec spec, double t0, std::string id);

  std::string id() const override { return id_; }
  const BallSpec& spec() const override { return spec_; }
  std::span<const double> play() override;
  void observe(std::span<const double> g) override;
  double current_eta() const override;
  std::optional<RoundRegularizer> current_regularizer() const override;
  const StepSchedule* schedule() const override { return &schedule_; }
  std::optional<double> regret_bound(std::size_t T) const override;
  double t0() const { return schedule_.t0; }

 private:
  BallSpec spec_;
  Schedule schedule_;
  std::string id_;
  LearnerState state_;
};

class CoordinateFtrlLearner final : public Learner {
 public:
  CoordinateFtrlLearner(BallSpec spec, Schedule schedule, std::string id);

  std::string id() const override { return id_; }
  const BallSpec& spec() const override { return spec_; }
  std::span<const double> play() override;
  void observe(std::span<const double> g) override;
  double current_eta() const override;
  const StepSchedule* schedule() const override { return &schedule_; }

 private:
  BallSpec spec_;
  Schedule schedule_;
  std::string id_;
  LearnerState state_;
  std::vector<double> eta_;
};

// OMD started at x_1 = 0. Works for fixed and adaptive schedules alike: the degree used for a
// step is whatever the schedule reports for it, and the iterate carries over at a switch.
class OmdLearner final : public Learner {
 public:
  OmdLearner(BallSpec spec, Schedule schedule, std::string id);

  std::string id() const override { return id_; }
  const BallSpec& spec() const override { return spec_; }
  std::span<const double> play() override;
  void observe(std::span<const double> g) override;
  double current_eta() const override;
  const StepSchedule* schedule() const override { return &schedule_; }
  std::optional<double> regret_bound(std::size_t T) const override;

 private:
  BallSpec spec_;
  Schedule schedule_;
  std::string id_;
  LearnerState state_;
};

// Plays an independent uniform point of the ball each round; ignores feedback.
class UniformRandomLearner final : public Learner {
 public:
  UniformRandomLearner(BallSpec spec, std::uint64_t seed);

  std::string id() const override { return "uniform-random"; }
  const BallSpec& spec() const override { return spec_; }
  std::span<const double> play() override;
  void observe(std::span<const double>) override {}
  void observe_value(double) override {}
  bool needs_gradient() const override { return false; }

 private:
  BallSpec spec_;
  Rng rng_;
  std::vector<double> x_;
};

// Plays one fixed point forever. With the environment's competitor it is the oracle player.
class FixedPointLearner final : public Learner {
 public:
  FixedPointLearner(BallSpec spec, std::vector<double> point, std::string id = "oracle");

  std::string id() const override { return id_; }
  const BallSpec& spec() const override { return spec_; }
  std::span<const double> play() override { return point_; }
  void observe(std::span<const double>) override {}
  void observe_value(double) override {}
  bool needs_gradient() const override { return false; }

 private:
  BallSpec spec_;
  std::vector<double> point_;
  std::string id_;
};

}  // namespace oco
