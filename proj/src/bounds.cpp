#include "oco/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oco/errors.hpp"

namespace oco {

namespace {

double td(std::size_t n) { return static_cast<double>(n); }

double dim_factor(double p, std::size_t d) { return std::pow(td(d), 1.0 - 2.0 / p); }

}  // namespace

double bound_ftrl_anytime(double r, double mu, double D, double L, std::size_t T) {
  if (T == 0) return 0.0;
  const double rs = dual_exponent(r);
  return std::pow(r, 1.0 / r) * std::pow(rs, 1.0 / rs) * std::pow(mu, -1.0 / r) * L *
         std::pow(D, 1.0 / r) * std::pow(td(T), 1.0 / rs);
}

double bound_omd_anytime(double r, double mu, double D_max, double L, std::size_t T) {
  return bound_ftrl_anytime(r, mu, D_max, L, T);
}

double bound_constant_step(double r, double mu, double D, double L, double eta, std::size_t T) {
  if (T == 0) return 0.0;
  const double rs = dual_exponent(r);
  return D / eta + td(T) * (r - 1.0) / r * std::pow(eta / mu, 1.0 / (r - 1.0)) * std::pow(L, rs);
}

double bound_adaptive_ftrl_closed_form(double p, std::size_t d, double L, std::size_t T) {
  if (T == 0) return 0.0;
  if (td(T) <= adaptive_ftrl_threshold(p, d)) {
    return L * std::pow(2.0 * dual_exponent(p) * td(T), 1.0 / dual_exponent(p));
  }
  return L * std::sqrt(2.0 * td(T) * dim_factor(p, d));
}

double bound_adaptive_ftrl(double p, std::size_t d, double L, std::size_t T, double t0) {
  if (T == 0) return 0.0;
  const double ps = dual_exponent(p);
  if (td(T) <= t0) return L * std::pow(2.0 * ps * td(T), 1.0 / ps);
  const double k = std::floor(std::max(t0, 0.0));
  const double dd = dim_factor(p, d);
  return L * std::pow(2.0 * ps * k, 1.0 / ps) + L * std::sqrt(2.0 * dd * td(T)) -
         L * std::sqrt(dd * k / 2.0);
}

double bound_adaptive_omd_closed_form(double p, std::size_t d, double L, std::size_t T) {
  if (T == 0) return 0.0;
  const double ps = dual_exponent(p);
  if (td(T) <= adaptive_omd_threshold(p, d)) {
    return 2.0 * std::pow(p, 1.0 / p) * std::pow(ps, 1.0 / ps) * L * std::pow(td(T), 1.0 / ps);
  }
  return 2.0 * L * std::sqrt(2.0 * td(T) * dim_factor(p, d));
}

double bound_adaptive_omd(double p, std::size_t d, double L, std::size_t T, double t0) {
  if (T == 0) return 0.0;
  const double ps = dual_exponent(p);
  const double lead = 2.0 * std::pow(p, 1.0 / p) * std::pow(ps, 1.0 / ps) * L;
  if (td(T) <= t0) return lead * std::pow(td(T), 1.0 / ps);
  const double k = std::floor(std::max(t0, 0.0));
  const double dd = dim_factor(p, d);
  return lead * std::pow(k, 1.0 / ps) + 2.0 * L * std::sqrt(2.0 * dd * td(T)) -
         L * std::sqrt(2.0 * dd * k);
}

std::size_t strong_convexity_dimension_threshold(double p, std::size_t T, double mu) {
  if (!(p > 2.0)) throw DomainError("the strong-convexity lower bound needs p > 2");
  return static_cast<std::size_t>(std::ceil(std::pow(4.0 * td(T) / mu, p / (p - 2.0))));
}

double lower_bound_values(LowerBoundKind kind, double p, std::size_t d, double L, std::size_t T,
                          double r, double mu) {
  const double t = td(T);
  switch (kind) {
    case LowerBoundKind::FixedPhi2:
      return L * std::min(t / 16.0, std::sqrt(t * dim_factor(p, d)) / 8.0);
    case LowerBoundKind::FixedPhiP:
      return L * std::min(t / (8.0 * p), std::pow(t, 1.0 / dual_exponent(p)) / 8.0);
    case LowerBoundKind::FixedPhiR: {
      if (r < 2.0 || r > p) throw DomainError("degree r must lie in [2, p]");
      const double rs = dual_exponent(r);
      const double ps = dual_exponent(p);
      return L * std::min(t / (8.0 * r),
                          std::pow(td(d), (rs - ps) / (rs * ps)) * std::pow(t, 1.0 / rs) / 8.0);
    }
    case LowerBoundKind::StronglyConvex: {
      const std::size_t need = strong_convexity_dimension_threshold(p, T, mu);
      if (d < need) {
        throw ContractError("linear lower bound needs d >= " + std::to_string(need) + ", got " +
                            std::to_string(d));
      }
      return L * t / 8.0;
    }
  }
  return 0.0;
}

double regret_certificate(const RegretTrace& trace, std::span<const RoundRegularizer> regs,
                          std::size_t T) {
  if (T == 0) T = trace.rounds.size();
  if (T > trace.rounds.size() || regs.size() < T) {
    throw ContractError("regularizer sequence and trace lengths do not match");
  }
  if (T == 0) return 0.0;
  const std::size_t d = trace.header.spec.d;
  std::vector<double> G(d, 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    const auto& rec = trace.rounds[t];
    if (rec.g.size() != d || rec.x.size() != d) {
      throw ContractError("trace does not carry points and gradients for every round");
    }
    for (std::size_t i = 0; i < d; ++i) G[i] += rec.g[i];
  }
  const auto u = linear_minimizer_on_ball(G, trace.header.spec).x;
  double total = phi_eval(regs[T - 1].r, u) / regs[T - 1].eta;
  for (std::size_t t = 0; t < T; ++t) {
    const RoundRegularizer& reg = regs[t];
    const double mu_t = reg.mu / reg.eta;
    const double rs = dual_exponent(reg.r);
    const double gnorm = lp_norm(trace.rounds[t].g, rs);
    total += (reg.r - 1.0) / (reg.r * std::pow(mu_t, 1.0 / (reg.r - 1.0))) * std::pow(gnorm, rs);
    if (t + 1 < T) {
      const auto& next = trace.rounds[t + 1].x;
      total += phi_eval(reg.r, next) / reg.eta - phi_eval(regs[t + 1].r, next) / regs[t + 1].eta;
    }
  }
  return total;
}

}  // namespace oco
