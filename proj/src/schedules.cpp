#include "oco/schedules.hpp"

#include <algorithm>
#include <cmath>

#include "oco/errors.hpp"

namespace oco {

double ftrl_anytime_step(double r, double mu, double D, double L, std::size_t t) {
  if (t < 1) throw ContractError("schedule evaluated before round 1");
  const double rs = dual_exponent(r);
  return std::pow(D, 1.0 / rs) * std::pow(mu, 1.0 / r) /
         (L * std::pow(rs - 1.0, 1.0 / rs) * std::pow(static_cast<double>(t), 1.0 / rs));
}

double omd_schedule_anytime(double r, double mu, double D_max, double L, std::size_t t) {
  if (t < 1) throw ContractError("schedule evaluated before round 1");
  const double rs = dual_exponent(r);
  return std::pow(D_max, 1.0 / rs) * std::pow(r - 1.0, 1.0 / rs) * std::pow(mu, 1.0 / r) /
         (L * std::pow(static_cast<double>(t), 1.0 / rs));
}

double adaptive_ftrl_threshold(double p, std::size_t d) {
  if (!(p > 2.0)) throw DomainError("adaptive regularization needs p > 2");
  return std::pow(3.0, -2.0 * p / (p - 2.0)) * static_cast<double>(d);
}

double adaptive_omd_threshold(double p, std::size_t d) {
  if (!(p > 2.0)) throw DomainError("adaptive regularization needs p > 2");
  const double ps = dual_exponent(p);
  const double base = std::sqrt(2.0) * std::pow(p, 1.0 / p) * std::pow(ps, 1.0 / ps);
  return std::pow(base, 2.0 * p / (p - 2.0)) * static_cast<double>(d);
}

Schedule Schedule::ftrl_anytime(const RegSpec& reg, double L) {
  Schedule s;
  s.kind = ScheduleKind::FtrlAnytime;
  s.reg = reg;
  s.L = L;
  return s;
}

Schedule Schedule::omd_anytime(const RegSpec& reg, double L) {
  Schedule s;
  s.kind = ScheduleKind::OmdAnytime;
  s.reg = reg;
  s.L = L;
  return s;
}

Schedule Schedule::adaptive_ftrl(const BallSpec& spec, double t0) {
  Schedule s;
  s.kind = ScheduleKind::AdaptiveFtrl;
  s.low_reg = RegSpec::ftrl(spec.p, spec);
  s.high_reg = RegSpec::ftrl(2.0, spec);
  s.L = spec.L;
  s.t0 = t0;
  return s;
}

Schedule Schedule::adaptive_omd(const BallSpec& spec, double t0) {
  Schedule s;
  s.kind = ScheduleKind::AdaptiveOmd;
  s.low_reg = RegSpec::omd(spec.p, spec);
  s.high_reg = RegSpec::omd(2.0, spec);
  s.L = spec.L;
  s.t0 = t0;
  return s;
}

Schedule Schedule::coordinate_wise(double r, std::vector<double> scales, std::vector<double> powers) {
  if (scales.size() != powers.size()) throw ContractError("coordinate schedule needs one power per scale");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) throw DomainError("coordinate step scales must be positive");
    if (!(powers[i] >= 0.0)) throw DomainError("coordinate step powers must be nonnegative");
  }
  Schedule s;
  s.kind = ScheduleKind::CoordinateWise;
  s.reg.r = r;
  s.reg.norm_exponent = r;
  s.scales = std::move(scales);
  s.powers = std::move(powers);
  return s;
}

Schedule Schedule::fixed(double eta) {
  if (!(eta > 0.0)) throw DomainError("constant step size must be positive");
  Schedule s;
  s.kind = ScheduleKind::Constant;
  s.constant = eta;
  return s;
}

double Schedule::eta(std::size_t s, std::size_t i) const {
  switch (kind) {
    case ScheduleKind::FtrlAnytime:
      return ftrl_anytime_step(reg.r, reg.mu, reg.D, L, s + 1);
    case ScheduleKind::AdaptiveFtrl: {
      const RegSpec& g = regularizer(s);
      return ftrl_anytime_step(g.r, g.mu, g.D, L, s + 1);
    }
    case ScheduleKind::OmdAnytime:
      return omd_schedule_anytime(reg.r, reg.mu, reg.D, L, std::max<std::size_t>(s, 1));
    case ScheduleKind::AdaptiveOmd: {
      const RegSpec& g = regularizer(s);
      return omd_schedule_anytime(g.r, g.mu, g.D, L, std::max<std::size_t>(s, 1));
    }
    case ScheduleKind::CoordinateWise:
      return scales.at(i) * std::pow(static_cast<double>(s + 1), -powers.at(i));
    case ScheduleKind::Constant:
      return constant;
  }
  return constant;
}

const RegSpec& Schedule::regularizer(std::size_t s) const {
  switch (kind) {
    case ScheduleKind::AdaptiveFtrl:
      // eta_s produces x_{s+1}; the phi_p phase covers rounds t <= t0.
      return static_cast<double>(s + 1) <= t0 ? low_reg : high_reg;
    case ScheduleKind::AdaptiveOmd:
      // eta_s is applied to g_s; the phi_p phase covers steps s <= t0.
      return static_cast<double>(std::max<std::size_t>(s, 1)) <= t0 ? low_reg : high_reg;
    default:
      return reg;
  }
}

}  // namespace oco
