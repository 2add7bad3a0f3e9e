#pragma once

#include <cstddef>
#include <span>

#include "oco/learners.hpp"
#include "oco/trace.hpp"

namespace oco {

// r^{1/r} r*^{1/r*} mu^{-1/r} L D^{1/r} T^{1/r*}.
double bound_ftrl_anytime(double r, double mu, double D, double L, std::size_t T);
// Same closed form with D_max in place of D.
double bound_omd_anytime(double r, double mu, double D_max, double L, std::size_t T);
// Constant-step FTRL: D/eta + T (r-1)/r (eta/mu)^{1/(r-1)} L^{r*}.
double bound_constant_step(double r, double mu, double D, double L, double eta, std::size_t T);

// Adaptive FTRL: L(2p*T)^{1/p*} if T <= 3^{-2p/(p-2)} d, otherwise L sqrt(2 T d^{1-2/p}).
double bound_adaptive_ftrl_closed_form(double p, std::size_t d, double L, std::size_t T);
// Adaptive FTRL with an arbitrary switch point t0; with k = floor(t0) and T > t0 it is
// L(2p*k)^{1/p*} + L sqrt(2 d^{1-2/p} T) - L sqrt(d^{1-2/p} k / 2).
double bound_adaptive_ftrl(double p, std::size_t d, double L, std::size_t T, double t0);
// Adaptive OMD: 2 p^{1/p} p*^{1/p*} L T^{1/p*} if T <= t0, otherwise 2 L sqrt(2 T d^{1-2/p}).
double bound_adaptive_omd_closed_form(double p, std::size_t d, double L, std::size_t T);
// Adaptive OMD with an arbitrary switch point; k = floor(t0) and T > t0 gives
// 2 p^{1/p} p*^{1/p*} L k^{1/p*} + 2 L sqrt(2 d^{1-2/p} T) - L sqrt(2 d^{1-2/p} k).
double bound_adaptive_omd(double p, std::size_t d, double L, std::size_t T, double t0);

enum class LowerBoundKind { FixedPhi2, FixedPhiP, FixedPhiR, StronglyConvex };

// r is used by FixedPhiR; mu by StronglyConvex (its dimension threshold is (4T/mu)^{p/(p-2)}).
double lower_bound_values(LowerBoundKind kind, double p, std::size_t d, double L, std::size_t T,
                          double r = 2.0, double mu = 1.0);
std::size_t strong_convexity_dimension_threshold(double p, std::size_t T, double mu = 1.0);

// Regret certificate for FTRL with psi_t = phi_{r_t}/eta_{t-1}, evaluated along a trace that
// kept its points: psi_T(u) - min psi_1 + sum_t [ (r_t-1)/(r_t mu_t^{1/(r_t-1)}) ||g_t||_*^{r_t*}
// + psi_t(x_{t+1}) - psi_{t+1}(x_{t+1}) ], with mu_t = mu/eta_{t-1} and psi_{T+1} = psi_T.
// T = 0 means the full trace.
double regret_certificate(const RegretTrace& trace, std::span<const RoundRegularizer> regs,
                          std::size_t T = 0);

}  // namespace oco
