#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "oco/rng.hpp"

namespace oco {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kConvexitySlack = 1e-9;

struct BallSpec {
  std::size_t d = 1;
  double p = 2.0;
  double L = 1.0;

  double dual() const;
  void validate() const;
};

// |x|^e with cheap paths for the exponents that dominate the hot loops.
inline double abs_pow(double x, double e) {
  const double a = std::fabs(x);
  if (e == 1.0) return a;
  if (e == 2.0) return a * a;
  if (e == 0.0) return 1.0;
  return std::pow(a, e);
}

inline double signum(double x) { return (x > 0.0) - (x < 0.0); }

double dual_exponent(double r);
double lp_norm(std::span<const double> x, double r);
double dot(std::span<const double> a, std::span<const double> b);

struct LinearMinimum {
  std::vector<double> x;
  double value = 0.0;
};

// Exact minimizer of <G, x> over the unit p-ball. For p = 1 ties go to the lowest index.
LinearMinimum linear_minimizer_on_ball(std::span<const double> G, const BallSpec& spec);
// Value part only (-||G||_{p*}); skips building the minimizer.
double linear_minimum_value(std::span<const double> G, const BallSpec& spec);

// Uniform draw from the unit p-ball of dimension spec.d.
std::vector<double> sample_ball(const BallSpec& spec, Rng& rng);

struct DifferentiableFunction {
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>)> gradient;
};

// f(y) - f(x) - <grad f(x), y - x> - (mu/r)||y - x||_p^r; negative means the inequality fails.
double uniform_convexity_margin(const DifferentiableFunction& f, double p, double mu, double r,
                                std::span<const double> x, std::span<const double> y);

struct ConvexityReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_margin = kInfinity;
  std::vector<double> worst_x;
  std::vector<double> worst_y;
};

ConvexityReport check_uniform_convexity(const DifferentiableFunction& f, const BallSpec& spec,
                                        double mu, double r, std::size_t samples,
                                        std::uint64_t seed);

}  // namespace oco
