#pragma once

#include <span>
#include <vector>

#include "oco/geometry.hpp"

namespace oco {

enum class RegRole { Ftrl, Omd };

// Power-norm regularizer phi_r(x) = (1/r)||x||_r^r with the constants a learner needs.
// D is sup phi_r over the ball for FTRL, and sup of the Bregman divergence for OMD.
struct RegSpec {
  double r = 2.0;
  double mu = 1.0;
  double D = 1.0;
  double norm_exponent = 2.0;
  RegRole role = RegRole::Ftrl;

  static RegSpec ftrl(double r, const BallSpec& spec);
  static RegSpec omd(double r, const BallSpec& spec);
};

// 1 for r = 2, 2^{1-r} otherwise.
double uniform_convexity_constant(double r);
// 1/(2^{r-1}-1): a slightly larger valid constant, kept for reference and never used by learners.
double sharper_uniform_convexity_constant(double r);

double phi_eval(double r, std::span<const double> x);
std::vector<double> phi_grad(double r, std::span<const double> x);
std::vector<double> conjugate_grad(double r, std::span<const double> theta);
double bregman(double r, std::span<const double> x, std::span<const double> y);

struct BregmanPair {
  std::vector<double> x;
  std::vector<double> y;
  double divergence = 0.0;
};

BregmanPair make_bregman_pair(double r, std::vector<double> x, std::vector<double> y);

}  // namespace oco
