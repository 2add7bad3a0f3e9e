#include "oco/projection.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "oco/errors.hpp"
#include "oco/regularizers.hpp"

namespace oco {

namespace {

void check_inputs(double r, const BallSpec& spec, double tol) {
  if (std::isnan(r) || r < 2.0) throw DomainError("projection degree must be >= 2");
  if (!(spec.p > 1.0)) throw DomainError("projection needs p > 1");
  if (!(tol > 0.0)) throw DomainError("projection tolerance must be positive");
}

// Solves a^{r-1} + lambda a^{p-1} = b on [0, cap] with Newton steps kept inside a shrinking
// bracket; falls back to bisection whenever Newton leaves it.
double solve_coordinate(double b, double cap, double lambda, double r, double p) {
  if (b == 0.0) return 0.0;
  if (lambda == 0.0) return cap;
  if (r == p) return std::pow(b / (1.0 + lambda), 1.0 / (r - 1.0));
  double lo = 0.0;
  double hi = std::min(cap, std::pow(b / lambda, 1.0 / (p - 1.0)));
  double a = hi;
  for (int it = 0; it < kProjectionMaxIterations; ++it) {
    const double f = abs_pow(a, r - 1.0) + lambda * abs_pow(a, p - 1.0) - b;
    if (f == 0.0) return a;
    if (f > 0.0) {
      hi = a;
    } else {
      lo = a;
    }
    const double slope = (r - 1.0) * abs_pow(a, r - 2.0) + lambda * (p - 1.0) * abs_pow(a, p - 2.0);
    double next = slope > 0.0 ? a - f / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - a) <= 1e-15 * next || hi - lo <= 1e-15 * hi) return next;
    a = next;
  }
  return a;
}

struct Multiplied {
  std::vector<double> x;
  double excess = 0.0;  // ||x||_p^p - 1
};

Multiplied evaluate(double lambda, std::span<const double> z, std::span<const double> b,
                    double r, double p) {
  Multiplied out;
  out.x.resize(z.size());
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double a = solve_coordinate(b[i], std::fabs(z[i]), lambda, r, p);
    out.x[i] = signum(z[i]) * a;
    s += abs_pow(a, p);
  }
  out.excess = s - 1.0;
  return out;
}

std::optional<std::vector<double>> project_equal_magnitude(std::span<const double> z, double p) {
  double magnitude = 0.0;
  std::size_t support = 0;
  for (double v : z) {
    if (v == 0.0) continue;
    const double a = std::fabs(v);
    if (support == 0) {
      magnitude = a;
    } else if (a != magnitude) {
      return std::nullopt;
    }
    ++support;
  }
  if (support == 0) return std::nullopt;
  const double level = std::pow(static_cast<double>(support), -1.0 / p);
  std::vector<double> out(z.size(), 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] != 0.0) out[i] = signum(z[i]) * level;
  }
  return out;
}

}  // namespace

std::vector<double> bregman_project_kkt(double r, std::span<const double> z, const BallSpec& spec,
                                        double tol) {
  check_inputs(r, spec, tol);
  const double p = spec.p;
  if (lp_norm(z, p) <= 1.0) return {z.begin(), z.end()};

  std::vector<double> b(z.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    b[i] = abs_pow(z[i], r - 1.0);
    peak = std::max(peak, b[i]);
  }

  double lo = 0.0;
  double hi = std::max(peak * static_cast<double>(z.size()), 1e-300);
  Multiplied at_hi = evaluate(hi, z, b, r, p);
  for (int it = 0; at_hi.excess >= 0.0; ++it) {
    if (it == kProjectionMaxIterations) throw NumericError("could not bracket the projection multiplier", hi);
    lo = hi;
    hi *= 2.0;
    at_hi = evaluate(hi, z, b, r, p);
  }

  for (int it = 0; it < kProjectionMaxIterations; ++it) {
    const double width = hi - lo;
    const bool narrow = width <= tol * std::max(1.0, hi);
    const bool tight = hi * -at_hi.excess <= tol;
    const bool exhausted = width <= 4.0 * std::numeric_limits<double>::epsilon() * hi;
    if ((narrow && tight) || exhausted) return std::move(at_hi.x);
    const double mid = 0.5 * (lo + hi);
    Multiplied at_mid = evaluate(mid, z, b, r, p);
    if (at_mid.excess >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
      at_hi = std::move(at_mid);
    }
  }
  throw NumericError("projection multiplier bisection did not converge in " +
                         std::to_string(kProjectionMaxIterations) + " iterations",
                     hi - lo);
}

std::vector<double> bregman_project(double r, std::span<const double> z, const BallSpec& spec,
                                    double tol) {
  check_inputs(r, spec, tol);
  if (lp_norm(z, spec.p) <= 1.0) return {z.begin(), z.end()};
  if (auto fast = project_equal_magnitude(z, spec.p)) return std::move(*fast);
  return bregman_project_kkt(r, z, spec, tol);
}

double projection_optimality_gap(double r, std::span<const double> x, std::span<const double> z,
                                 std::span<const double> y) {
  const auto gx = phi_grad(r, x);
  const auto gz = phi_grad(r, z);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (gx[i] - gz[i]) * (y[i] - x[i]);
  return s;
}

}  // namespace oco
