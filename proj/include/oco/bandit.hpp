#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oco/geometry.hpp"

namespace oco {

enum class BanditKind { BigP, SmallP, P1 };

std::string to_string(BanditKind kind);
BanditKind parse_bandit_kind(std::string_view id);

struct BanditParams {
  double delta = 0.05;   // allowed probability of a trace leaving the Lipschitz budget
  double c1 = 1.0;       // concentration constants in the dimension thresholds
  double C1 = 1.0;
  bool control = false;  // zero-mean losses (hidden coordinate absent); SmallP and P1 only
};

// Gaussian linear losses revealed through <x, g_t> only. The full g_t stays inside for
// regret accounting. Each instance is one trial: the hidden sign vector or coordinate is
// drawn at construction.
class BanditEnvironment {
 public:
  BanditEnvironment(BanditKind kind, BallSpec spec, std::size_t T, std::uint64_t seed,
                    BanditParams params = {});

  std::string id() const { return to_string(kind_); }
  const BallSpec& spec() const { return spec_; }
  // Samples g_t and returns <x, g_t>.
  double feedback(std::span<const double> x);
  std::span<const double> last_gradient() const { return g_; }
  std::span<const double> mean_gradient() const { return mean_; }
  // Minimizer of the expected loss over the ball, and its per-round value.
  const std::vector<double>& competitor() const { return competitor_; }
  double competitor_value() const { return competitor_value_; }
  // Standard deviation of each gradient coordinate.
  double sigma() const { return sigma_; }
  double epsilon() const { return epsilon_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  BanditKind kind_;
  BallSpec spec_;
  Rng rng_;
  double sigma_ = 0.0;
  double epsilon_ = 0.0;
  std::vector<double> mean_;
  std::vector<double> g_;
  std::vector<double> competitor_;
  double competitor_value_ = 0.0;
  std::vector<std::string> warnings_;
};

std::unique_ptr<BanditEnvironment> bandit_bigp_env(const BallSpec& spec, std::size_t T,
                                                   std::uint64_t seed, double delta = 0.05);
std::unique_ptr<BanditEnvironment> bandit_smallp_env(const BallSpec& spec, std::size_t T,
                                                     std::uint64_t seed, BanditParams params = {});
std::unique_ptr<BanditEnvironment> bandit_p1_env(const BallSpec& spec, std::size_t T,
                                                 std::uint64_t seed, BanditParams params = {});

double bandit_smallp_sigma(double p, std::size_t d);
double bandit_p1_sigma(std::size_t d);

}  // namespace oco
