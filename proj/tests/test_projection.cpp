#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "oco/geometry.hpp"
#include "oco/oracles.hpp"
#include "oco/projection.hpp"
#include "oco/regularizers.hpp"
#include "oco/rng.hpp"

using namespace oco;

namespace {

std::vector<double> outside_point(Rng& rng, std::size_t d, double p) {
  std::vector<double> z(d);
  for (auto& v : z) v = rng.normal();
  const double scale = (1.5 + 3.0 * rng.uniform()) / lp_norm(z, p);
  for (auto& v : z) v *= scale;
  return z;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("interior points are fixed") {
  const BallSpec spec{3, 4.0, 1.0};
  for (double r : {2.0, 3.0, 4.0}) {
    const auto x = bregman_project(r, std::vector<double>{0.5, 0.0, 0.0}, spec);
    CHECK(x == std::vector<double>{0.5, 0.0, 0.0});
  }
}

TEST_CASE("closed-form projections") {
  SUBCASE("scaled all-ones goes to the rescaled all-ones") {
    const BallSpec spec{16, 10.0, 1.0};
    const std::vector<double> z(16, 3.0);
    const auto x = bregman_project(10.0, z, spec);
    for (double v : x) CHECK(v == doctest::Approx(std::pow(16.0, -0.1)));
    const auto kkt = bregman_project_kkt(10.0, z, spec);
    CHECK(max_abs_diff(x, kkt) <= 1e-8);
  }
  SUBCASE("scaled basis vector goes to the basis vector") {
    const BallSpec spec{5, 10.0, 1.0};
    std::vector<double> z(5, 0.0);
    z[2] = -2.7;
    const auto x = bregman_project(2.0, z, spec);
    CHECK(x == std::vector<double>{0.0, 0.0, -1.0, 0.0, 0.0});
    const auto kkt = bregman_project_kkt(2.0, z, spec);
    CHECK(max_abs_diff(x, kkt) <= 1e-8);
  }
}

TEST_CASE("projection properties on random outside points") {
  Rng rng(21);
  for (double p : {2.5, 4.0, 10.0}) {
    for (double r : {2.0, 0.5 * (2.0 + p), p}) {
      const BallSpec spec{6, p, 1.0};
      for (int rep = 0; rep < 40; ++rep) {
        const auto z = outside_point(rng, 6, p);
        const auto x = bregman_project(r, z, spec);

        // On the boundary, with z's signs.
        CHECK(lp_norm(x, p) == doctest::Approx(1.0).epsilon(1e-9));
        for (std::size_t i = 0; i < 6; ++i) CHECK(x[i] * z[i] >= 0.0);

        // Idempotent.
        const auto again = bregman_project(r, x, spec);
        CHECK(max_abs_diff(again, x) <= 1e-9);

        // First-order certificate against random feasible points.
        for (int k = 0; k < 20; ++k) {
          const auto y = sample_ball(spec, rng);
          CHECK(projection_optimality_gap(r, x, z, y) >= -1e-7);
          CHECK(bregman(r, y, z) >= bregman(r, x, z) - 1e-9);
        }

        // Sign flips and permutations commute with the projection.
        std::vector<std::size_t> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::rotate(perm.begin(), perm.begin() + 2, perm.end());
        std::vector<double> zt(6);
        for (std::size_t i = 0; i < 6; ++i) zt[i] = (i % 2 ? -1.0 : 1.0) * z[perm[i]];
        const auto xt = bregman_project(r, zt, spec);
        for (std::size_t i = 0; i < 6; ++i) {
          CHECK(xt[i] == doctest::Approx((i % 2 ? -1.0 : 1.0) * x[perm[i]]).epsilon(1e-9).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("KKT solver agrees with a brute-force grid in d = 3") {
  Rng rng(5);
  for (int rep = 0; rep < 4; ++rep) {
    const double p = rep % 2 ? 3.0 : 6.0;
    const double r = rep < 2 ? 2.0 : p;
    const BallSpec spec{3, p, 1.0};
    const auto z = outside_point(rng, 3, p);
    const auto x = bregman_project(r, z, spec);
    const auto grid = oracle::grid_project_d3(r, z, p);
    CHECK(max_abs_diff(x, grid) <= 3e-3);
    // The solver's point is no worse than the grid's, up to its own stopping tolerance.
    const double best = bregman(r, grid, z);
    CHECK(bregman(r, x, z) <= best + kProjectionTol * (1.0 + best));
  }
}

TEST_CASE("projection handles extreme magnitudes") {
  const BallSpec spec{4, 10.0, 1.0};
  const std::vector<double> z{1e6, 1e-6, -3.0, 0.0};
  const auto x = bregman_project(2.0, z, spec);
  CHECK(lp_norm(x, 10.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(x[3] == 0.0);
  CHECK(x[0] > 0.0);
  CHECK(x[2] < 0.0);
}
