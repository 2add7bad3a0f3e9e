#pragma once

#include <cstddef>
#include <vector>

#include "oco/regularizers.hpp"

namespace oco {

// eta_{t-1}: the FTRL step producing x_t.
double ftrl_anytime_step(double r, double mu, double D, double L, std::size_t t);
// eta_t: the OMD step applied to g_t.
double omd_schedule_anytime(double r, double mu, double D_max, double L, std::size_t t);

// Switching round of adaptive FTRL: 3^{-2p/(p-2)} d.
double adaptive_ftrl_threshold(double p, std::size_t d);
// Switching round of adaptive OMD: (sqrt(2) p^{1/p} p*^{1/p*})^{2p/(p-2)} d.
double adaptive_omd_threshold(double p, std::size_t d);

// Read-only view of a learner's step sizes, handed to adversaries that need it.
// eta(s, i) is the step that produces x_{s+1} (coordinate i for coordinate-wise schedules).
class StepSchedule {
 public:
  virtual ~StepSchedule() = default;
  virtual double eta(std::size_t s, std::size_t i = 0) const = 0;
  virtual bool coordinatewise() const { return false; }
};

enum class ScheduleKind { FtrlAnytime, AdaptiveFtrl, OmdAnytime, AdaptiveOmd, CoordinateWise, Constant };

struct Schedule final : StepSchedule {
  ScheduleKind kind = ScheduleKind::Constant;
  RegSpec reg;         // FtrlAnytime, OmdAnytime, CoordinateWise (degree)
  RegSpec low_reg;     // adaptive kinds: the phi_p phase
  RegSpec high_reg;    // adaptive kinds: the phi_2 phase
  double L = 1.0;
  double t0 = 0.0;
  double constant = 1.0;
  std::vector<double> scales;  // CoordinateWise: eta_{s,i} = scales[i] / (s+1)^{powers[i]}
  std::vector<double> powers;

  static Schedule ftrl_anytime(const RegSpec& reg, double L);
  static Schedule omd_anytime(const RegSpec& reg, double L);
  static Schedule adaptive_ftrl(const BallSpec& spec, double t0);
  static Schedule adaptive_omd(const BallSpec& spec, double t0);
  static Schedule coordinate_wise(double r, std::vector<double> scales, std::vector<double> powers);
  static Schedule fixed(double eta);

  double eta(std::size_t s, std::size_t i = 0) const override;
  bool coordinatewise() const override { return kind == ScheduleKind::CoordinateWise; }
  // Regularizer in force for the step eta(s).
  const RegSpec& regularizer(std::size_t s) const;
};

}  // namespace oco
