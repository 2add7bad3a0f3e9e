#include "oco/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oco/errors.hpp"

namespace oco {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void dimension_warning(std::vector<std::string>& out, std::size_t d, double need,
                       const std::string& what) {
  if (static_cast<double>(d) <= need) {
    out.push_back("d = " + std::to_string(d) + " is below the " + what + " threshold " + fmt(need) +
                  "; the lower bound is not guaranteed in this regime");
  }
}

}  // namespace

std::string to_string(BanditKind kind) {
  switch (kind) {
    case BanditKind::BigP: return "bandit-bigp";
    case BanditKind::SmallP: return "bandit-smallp";
    case BanditKind::P1: return "bandit-p1";
  }
  return "bandit";
}

BanditKind parse_bandit_kind(std::string_view id) {
  if (id == "bandit-bigp") return BanditKind::BigP;
  if (id == "bandit-smallp") return BanditKind::SmallP;
  if (id == "bandit-p1") return BanditKind::P1;
  throw ContractError("unknown bandit environment '" + std::string(id) + "'");
}

double bandit_smallp_sigma(double p, std::size_t d) {
  const double ps = dual_exponent(p);
  return 1.0 / (8.0 * std::sqrt(ps) * std::pow(static_cast<double>(d), 1.0 / ps));
}

double bandit_p1_sigma(std::size_t d) {
  return 1.0 / (4.0 * std::sqrt(2.0) * std::numbers::e * std::sqrt(std::log(static_cast<double>(d))));
}

BanditEnvironment::BanditEnvironment(BanditKind kind, BallSpec spec, std::size_t T,
                                     std::uint64_t seed, BanditParams params)
    : kind_(kind), spec_(spec), rng_(seed), mean_(spec.d, 0.0), g_(spec.d, 0.0),
      competitor_(spec.d, 0.0) {
  spec_.validate();
  const double d = static_cast<double>(spec_.d);
  const double t = static_cast<double>(T);
  const double L = spec_.L;
  const double log_term = std::log(params.C1 * std::max(t, 1.0) / params.delta);
  Rng hidden = rng_.split(0);
  rng_ = rng_.split(1);

  if (kind_ == BanditKind::BigP) {
    if (!(spec_.p > 1.0)) throw DomainError("bandit-bigp needs p > 1");
    const double ps = spec_.dual();
    if (spec_.p <= 4.0 / 3.0) warnings_.push_back("p <= 4/3 is outside the sign-vector construction's regime");
    dimension_warning(warnings_, spec_.d, 16.0 * t, "16T");
    dimension_warning(warnings_, spec_.d, log_term / params.c1, "(1/c1) log(C1 T/delta)");
    dimension_warning(warnings_, spec_.d, std::pow(log_term / (params.c1 * ps), ps / 2.0),
                      "((1/(c1 p*)) log(C1 T/delta))^{p*/2}");
    dimension_warning(warnings_, spec_.d, std::exp(2.0), "e^2");
    epsilon_ = std::pow(d, -1.0 / ps);
    // Losses are scaled by L/5 so the budget holds with high probability.
    sigma_ = L * epsilon_ / 5.0;
    const double level = std::pow(d, -1.0 / spec_.p);
    for (std::size_t i = 0; i < spec_.d; ++i) {
      const double xi = hidden.rademacher();
      mean_[i] = L * epsilon_ * xi / 5.0;
      competitor_[i] = -level * xi;
    }
  } else {
    const double ps = spec_.dual();
    if (kind_ == BanditKind::SmallP) {
      if (!(spec_.p > 1.0 && spec_.p <= 4.0 / 3.0)) {
        warnings_.push_back("p outside (1, 4/3] is outside the hidden-coordinate construction's regime");
      }
      dimension_warning(warnings_, spec_.d, std::pow(128.0 * ps * t, 2.0), "(128 p* T)^2");
      dimension_warning(warnings_, spec_.d, std::pow(log_term / (params.c1 * ps), ps / 2.0),
                        "((1/(c1 p*)) log(C1 T/delta))^{p*/2}");
      dimension_warning(warnings_, spec_.d, std::exp(2.0), "e^2");
      sigma_ = L * bandit_smallp_sigma(spec_.p, spec_.d);
    } else {
      if (spec_.d < 2) throw ContractError("bandit-p1 needs d >= 2");
      if (spec_.p > 1.0 + 1.0 / std::log(d)) warnings_.push_back("p exceeds 1 + 1/log d");
      dimension_warning(warnings_, spec_.d, std::max({t / params.delta, std::pow(8.0 * std::numbers::e, 4.0) * t * t, 8.0}),
                        "max(T/delta, 8^4 e^4 T^2, 8)");
      sigma_ = L * bandit_p1_sigma(spec_.d);
    }
    if (!params.control) {
      const std::size_t hidden_index = hidden.below(spec_.d);
      mean_[hidden_index] = L / 2.0;
      competitor_[hidden_index] = -1.0;
    }
  }
  competitor_value_ = dot(mean_, competitor_);
}

double BanditEnvironment::feedback(std::span<const double> x) {
  if (x.size() != spec_.d) throw ContractError("played point has the wrong dimension");
  double value = 0.0;
  for (std::size_t i = 0; i < spec_.d; ++i) {
    g_[i] = mean_[i] + sigma_ * rng_.normal();
    value += g_[i] * x[i];
  }
  return value;
}

std::unique_ptr<BanditEnvironment> bandit_bigp_env(const BallSpec& spec, std::size_t T,
                                                   std::uint64_t seed, double delta) {
  BanditParams params;
  params.delta = delta;
  return std::make_unique<BanditEnvironment>(BanditKind::BigP, spec, T, seed, params);
}

std::unique_ptr<BanditEnvironment> bandit_smallp_env(const BallSpec& spec, std::size_t T,
                                                     std::uint64_t seed, BanditParams params) {
  return std::make_unique<BanditEnvironment>(BanditKind::SmallP, spec, T, seed, params);
}

std::unique_ptr<BanditEnvironment> bandit_p1_env(const BallSpec& spec, std::size_t T,
                                                 std::uint64_t seed, BanditParams params) {
  return std::make_unique<BanditEnvironment>(BanditKind::P1, spec, T, seed, params);
}

}  // namespace oco
