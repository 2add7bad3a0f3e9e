#include "oco/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "oco/errors.hpp"
#include "oco/regularizers.hpp"

namespace oco::oracle {

namespace {

struct Best {
  double value = std::numeric_limits<double>::infinity();
  double a = 0.0;
  double b = 0.0;
};

std::vector<double> boundary_point(double theta, double phi, double p) {
  std::vector<double> u = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                           std::cos(theta)};
  const double n = lp_norm(u, p);
  for (auto& v : u) v /= n;
  return u;
}

// Compass search on an unconstrained 2-parameter objective, halving the step down to `floor`.
Best polish(const std::function<double(double, double)>& f, Best best, double step, double floor) {
  const double moves[4][2] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  while (step > floor) {
    bool improved = false;
    for (const auto& m : moves) {
      const double a = best.a + step * m[0];
      const double b = best.b + step * m[1];
      const double v = f(a, b);
      if (v < best.value) {
        best = {v, a, b};
        improved = true;
      }
    }
    if (!improved) step /= 2.0;
  }
  return best;
}

}  // namespace

std::vector<double> grid_project_d3(double r, std::span<const double> z, double p,
                                    double resolution) {
  if (z.size() != 3) throw ContractError("grid projection oracle is for d = 3");
  auto objective = [&](double theta, double phi) {
    return bregman(r, boundary_point(theta, phi, p), z);
  };
  const double pi = std::numbers::pi;
  const double coarse = 0.01;
  Best best;
  for (double theta = 0.0; theta <= pi; theta += coarse) {
    for (double phi = 0.0; phi < 2.0 * pi; phi += coarse) {
      const double v = objective(theta, phi);
      if (v < best.value) best = {v, theta, phi};
    }
  }
  const Best start = best;
  const double span = 3.0 * coarse;
  for (double dt = -span; dt <= span; dt += resolution) {
    for (double dp = -span; dp <= span; dp += resolution) {
      const double v = objective(start.a + dt, start.b + dp);
      if (v < best.value) best = {v, start.a + dt, start.b + dp};
    }
  }
  best = polish(objective, best, resolution, 1e-12);
  return boundary_point(best.a, best.b, p);
}

std::vector<double> grid_minimize_d2(const std::function<double(double, double)>& f, double p,
                                     double resolution) {
  auto feasible = [&](double a, double b) {
    return std::pow(std::fabs(a), p) + std::pow(std::fabs(b), p) <= 1.0;
  };
  const double coarse = 2e-3;
  Best best;
  for (double a = -1.0; a <= 1.0; a += coarse) {
    for (double b = -1.0; b <= 1.0; b += coarse) {
      if (!feasible(a, b)) continue;
      const double v = f(a, b);
      if (v < best.value) best = {v, a, b};
    }
  }
  const Best start = best;
  const double span = 3.0 * coarse;
  for (double da = -span; da <= span; da += resolution) {
    for (double db = -span; db <= span; db += resolution) {
      const double a = start.a + da;
      const double b = start.b + db;
      if (!feasible(a, b)) continue;
      const double v = f(a, b);
      if (v < best.value) best = {v, a, b};
    }
  }
  auto inside = [&](double a, double b) {
    return feasible(a, b) ? f(a, b) : std::numeric_limits<double>::infinity();
  };
  best = polish(inside, best, resolution, 1e-12);

  // Boundary minima are only approached from inside by the square grid; scan the boundary curve
  // by angle as well.
  auto on_boundary = [&](double angle) {
    const std::vector<double> u = {std::cos(angle), std::sin(angle)};
    const double n = lp_norm(u, p);
    return std::pair{u[0] / n, u[1] / n};
  };
  auto boundary_value = [&](double angle, double) {
    const auto [a, b] = on_boundary(angle);
    return f(a, b);
  };
  const double pi = std::numbers::pi;
  Best edge;
  for (double angle = 0.0; angle < 2.0 * pi; angle += resolution) {
    const double v = boundary_value(angle, 0.0);
    if (v < edge.value) edge = {v, angle, 0.0};
  }
  edge = polish(boundary_value, edge, resolution, 1e-12);
  if (edge.value < best.value) {
    const auto [a, b] = on_boundary(edge.a);
    return {a, b};
  }
  return {best.a, best.b};
}

}  // namespace oco::oracle
