#include "oco/geometry.hpp"

#include <algorithm>
#include <string>

#include "oco/errors.hpp"

namespace oco {

double BallSpec::dual() const { return dual_exponent(p); }

void BallSpec::validate() const {
  if (d < 1) throw ContractError("ball dimension must be at least 1");
  if (!(p >= 1.0)) throw DomainError("ball exponent p must be >= 1, got " + std::to_string(p));
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("Lipschitz budget L must be positive");
}

double dual_exponent(double r) {
  if (std::isnan(r) || r < 1.0) throw DomainError("dual exponent needs r >= 1");
  if (r == 1.0) return kInfinity;
  if (std::isinf(r)) return 1.0;
  return r / (r - 1.0);
}

double lp_norm(std::span<const double> x, double r) {
  if (std::isnan(r) || r < 1.0) throw DomainError("norm exponent must be >= 1");
  double peak = 0.0;
  for (double v : x) {
    if (std::isnan(v)) throw DomainError("NaN in norm argument");
    peak = std::max(peak, std::fabs(v));
  }
  if (peak == 0.0 || std::isinf(r)) return peak;
  if (r == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::fabs(v);
    return s;
  }
  if (r == 2.0) {
    double s = 0.0;
    for (double v : x) s += (v / peak) * (v / peak);
    return peak * std::sqrt(s);
  }
  double s = 0.0;
  for (double v : x) {
    if (v != 0.0) s += std::pow(std::fabs(v) / peak, r);
  }
  return peak * std::pow(s, 1.0 / r);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ContractError("dot product of vectors with different sizes");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double linear_minimum_value(std::span<const double> G, const BallSpec& spec) {
  return -lp_norm(G, spec.dual());
}

LinearMinimum linear_minimizer_on_ball(std::span<const double> G, const BallSpec& spec) {
  LinearMinimum out;
  out.x.assign(G.size(), 0.0);
  const double q = spec.dual();
  const double norm = lp_norm(G, q);
  if (norm == 0.0) return out;
  out.value = -norm;
  if (spec.p == 1.0) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < G.size(); ++i) {
      if (std::fabs(G[i]) > std::fabs(G[best])) best = i;
    }
    out.x[best] = -signum(G[best]);
    return out;
  }
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i] != 0.0) out.x[i] = -signum(G[i]) * abs_pow(G[i] / norm, q - 1.0);
  }
  return out;
}

std::vector<double> sample_ball(const BallSpec& spec, Rng& rng) {
  std::vector<double> u(spec.d);
  const double p = spec.p;
  for (auto& v : u) {
    // |u| = Gamma(1/p)^{1/p} has density proportional to exp(-|u|^p) on the half-line.
    const double magnitude = std::pow(rng.gamma(1.0 / p), 1.0 / p);
    v = rng.rademacher() * magnitude;
  }
  const double norm = lp_norm(u, p);
  const double radius = std::pow(rng.uniform(), 1.0 / static_cast<double>(spec.d));
  if (norm == 0.0) return u;
  for (auto& v : u) v *= radius / norm;
  return u;
}

double uniform_convexity_margin(const DifferentiableFunction& f, double p, double mu, double r,
                                std::span<const double> x, std::span<const double> y) {
  const double fx = f.value(x);
  const double fy = f.value(y);
  const std::vector<double> gx = f.gradient(x);
  if (!std::isfinite(fx) || !std::isfinite(fy)) throw EvaluationError("function value not finite");
  double linear = 0.0;
  std::vector<double> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(gx[i])) throw EvaluationError("gradient not finite");
    diff[i] = y[i] - x[i];
    linear += gx[i] * diff[i];
  }
  return fy - fx - linear - (mu / r) * std::pow(lp_norm(diff, p), r);
}

ConvexityReport check_uniform_convexity(const DifferentiableFunction& f, const BallSpec& spec,
                                        double mu, double r, std::size_t samples,
                                        std::uint64_t seed) {
  spec.validate();
  if (!(mu > 0.0)) throw DomainError("uniform convexity constant must be positive");
  if (!(r >= 2.0)) throw DomainError("uniform convexity degree must be >= 2");
  if (samples < 1) throw ContractError("need at least one sample pair");
  ConvexityReport report;
  report.samples = samples;
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto x = sample_ball(spec, rng);
    const auto y = sample_ball(spec, rng);
    const double margin = uniform_convexity_margin(f, spec.p, mu, r, x, y);
    if (margin < -kConvexitySlack) ++report.violations;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_x = x;
      report.worst_y = y;
    }
  }
  return report;
}

}  // namespace oco
