#include "oco/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oco/errors.hpp"

namespace oco {

namespace {

void require_degree(double r) {
  if (std::isnan(r) || r < 2.0) throw DomainError("regularizer degree must be >= 2, got " + std::to_string(r));
}

void require_role_degree(double r, const BallSpec& spec) {
  spec.validate();
  require_degree(r);
  if (r > spec.p) throw DomainError("regularizer degree must not exceed the ball exponent");
}

// sup over the p-ball of ||x||_r^r for r <= p.
double ball_power_sup(double r, const BallSpec& spec) {
  return std::pow(static_cast<double>(spec.d), 1.0 - r / spec.p);
}

}  // namespace

double uniform_convexity_constant(double r) {
  require_degree(r);
  return r == 2.0 ? 1.0 : std::pow(2.0, 1.0 - r);
}

double sharper_uniform_convexity_constant(double r) {
  require_degree(r);
  return 1.0 / (std::pow(2.0, r - 1.0) - 1.0);
}

RegSpec RegSpec::ftrl(double r, const BallSpec& spec) {
  require_role_degree(r, spec);
  RegSpec out;
  out.r = r;
  out.mu = uniform_convexity_constant(r);
  out.D = r == spec.p ? 1.0 / r : ball_power_sup(r, spec) / r;
  out.norm_exponent = r;
  out.role = RegRole::Ftrl;
  return out;
}

RegSpec RegSpec::omd(double r, const BallSpec& spec) {
  require_role_degree(r, spec);
  RegSpec out;
  out.r = r;
  out.mu = uniform_convexity_constant(r);
  out.D = r == spec.p ? 2.0 : 2.0 * ball_power_sup(r, spec);
  out.norm_exponent = r;
  out.role = RegRole::Omd;
  return out;
}

double phi_eval(double r, std::span<const double> x) {
  require_degree(r);
  double s = 0.0;
  for (double v : x) s += abs_pow(v, r);
  return s / r;
}

std::vector<double> phi_grad(double r, std::span<const double> x) {
  require_degree(r);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = signum(x[i]) * abs_pow(x[i], r - 1.0);
  return out;
}

std::vector<double> conjugate_grad(double r, std::span<const double> theta) {
  require_degree(r);
  const double e = dual_exponent(r) - 1.0;
  std::vector<double> out(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) out[i] = signum(theta[i]) * abs_pow(theta[i], e);
  return out;
}

double bregman(double r, std::span<const double> x, std::span<const double> y) {
  require_degree(r);
  if (x.size() != y.size()) throw ContractError("Bregman divergence of vectors with different sizes");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double gy = signum(y[i]) * abs_pow(y[i], r - 1.0);
    s += (abs_pow(x[i], r) - abs_pow(y[i], r)) / r - gy * (x[i] - y[i]);
  }
  return s;
}

BregmanPair make_bregman_pair(double r, std::vector<double> x, std::vector<double> y) {
  BregmanPair out;
  out.divergence = bregman(r, x, y);
  out.x = std::move(x);
  out.y = std::move(y);
  return out;
}

}  // namespace oco
