#pragma once

#include <functional>
#include <span>
#include <vector>

#include "oco/geometry.hpp"

namespace oco::oracle {

// Brute-force Bregman projection for d = 3: coarse sweep of the sphere in spherical angles,
// refined at `resolution` radians around the best coarse point; sphere points are mapped to
// the boundary of the p-ball by normalization, then a compass-search polish. Only meaningful
// for z outside the ball.
std::vector<double> grid_project_d3(double r, std::span<const double> z, double p,
                                    double resolution = 1e-3);

// Brute-force minimizer of f over the 2-D unit p-ball on a square grid, coarse then refined
// to `resolution` around the best coarse point and polished; the boundary curve is scanned
// separately by angle.
std::vector<double> grid_minimize_d2(const std::function<double(double, double)>& f, double p,
                                     double resolution = 1e-4);

}  // namespace oco::oracle
