#pragma once

#include <span>
#include <vector>

#include "oco/geometry.hpp"

namespace oco {

inline constexpr double kProjectionTol = 1e-10;
inline constexpr int kProjectionMaxIterations = 200;

// argmin over the unit p-ball of D_{phi_r}(x, z). Points inside the ball come back unchanged.
// Vectors whose nonzero entries share one magnitude (all-ones, basis vectors, sign patterns)
// are projected in closed form; everything else goes through the KKT solver.
std::vector<double> bregman_project(double r, std::span<const double> z, const BallSpec& spec,
                                    double tol = kProjectionTol);

// The general solver without the closed-form shortcut. The multiplier lambda of the
// constraint ||x||_p^p <= 1 is bisected; each coordinate then solves
// a^{r-1} + lambda a^{p-1} = |z_i|^{r-1} for a = |x_i|.
std::vector<double> bregman_project_kkt(double r, std::span<const double> z, const BallSpec& spec,
                                        double tol = kProjectionTol);

// <grad_x D(x, z), y - x>; nonnegative for every y in the ball when x is the projection.
double projection_optimality_gap(double r, std::span<const double> x, std::span<const double> z,
                                 std::span<const double> y);

}  // namespace oco
