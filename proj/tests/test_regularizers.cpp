#include <doctest.h>

#include <cmath>
#include <vector>

#include "oco/errors.hpp"
#include "oco/geometry.hpp"
#include "oco/regularizers.hpp"
#include "oco/rng.hpp"

using namespace oco;

namespace {

std::vector<double> gaussian(Rng& rng, std::size_t d, double scale = 1.0) {
  std::vector<double> v(d);
  for (auto& x : v) x = scale * rng.normal();
  return v;
}

}  // namespace

TEST_CASE("phi values") {
  CHECK(phi_eval(2.0, std::vector<double>(5, 0.0)) == 0.0);
  CHECK(phi_eval(10.0, std::vector<double>{1.0, 0.0, 0.0}) == doctest::Approx(0.1));
  CHECK(phi_eval(2.0, std::vector<double>(8, 1.0)) == doctest::Approx(4.0));
  CHECK_THROWS_AS(phi_eval(1.5, std::vector<double>{1.0}), DomainError);
}

TEST_CASE("phi gradient") {
  CHECK(phi_grad(3.0, std::vector<double>{1.0, 0.0}) == std::vector<double>{1.0, 0.0});
  const auto g = phi_grad(2.0, std::vector<double>{-0.5, 0.5});
  CHECK(g[0] == doctest::Approx(-0.5));
  CHECK(g[1] == doctest::Approx(0.5));

  SUBCASE("matches central finite differences") {
    Rng rng(1);
    for (double r : {2.0, 3.0, 10.0}) {
      for (int rep = 0; rep < 20; ++rep) {
        auto x = gaussian(rng, 6, 0.7);
        const auto grad = phi_grad(r, x);
        for (std::size_t i = 0; i < x.size(); ++i) {
          const double h = 1e-6;
          auto xp = x;
          auto xm = x;
          xp[i] += h;
          xm[i] -= h;
          const double fd = (phi_eval(r, xp) - phi_eval(r, xm)) / (2.0 * h);
          CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("conjugate gradient inverts the gradient") {
  CHECK(conjugate_grad(4.0, std::vector<double>{1.0, 0.0}) == std::vector<double>{1.0, 0.0});
  for (double r : {2.0, 3.0, 10.0}) {
    const auto x = conjugate_grad(r, std::vector<double>{std::pow(2.0, r - 1.0), 0.0});
    CHECK(x[0] == doctest::Approx(2.0));
    CHECK(x[1] == 0.0);
  }
  Rng rng(2);
  for (double r : {2.0, 2.5, 10.0}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto theta = gaussian(rng, 5);
      const auto back = phi_grad(r, conjugate_grad(r, theta));
      for (std::size_t i = 0; i < theta.size(); ++i) {
        CHECK(back[i] == doctest::Approx(theta[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("bregman divergence") {
  Rng rng(4);
  const auto x = gaussian(rng, 4);
  const auto y = gaussian(rng, 4);
  CHECK(bregman(10.0, x, x) == 0.0);
  double half_sq = 0.0;
  for (std::size_t i = 0; i < 4; ++i) half_sq += 0.5 * (x[i] - y[i]) * (x[i] - y[i]);
  CHECK(bregman(2.0, x, y) == doctest::Approx(half_sq));

  SUBCASE("nonnegative on random pairs") {
    for (double r : {2.0, 3.0, 10.0}) {
      for (int rep = 0; rep < 500; ++rep) {
        const auto a = gaussian(rng, 3);
        const auto b = gaussian(rng, 3);
        CHECK(bregman(r, a, b) >= -1e-12);
      }
    }
  }

  SUBCASE("sup over the p-ball is at most the OMD diameter") {
    for (double p : {3.0, 10.0}) {
      for (std::size_t d : {std::size_t{2}, std::size_t{6}}) {
        const BallSpec spec{d, p, 1.0};
        const RegSpec reg = RegSpec::omd(p, spec);
        CHECK(reg.D == 2.0);
        double sup = 0.0;
        for (int rep = 0; rep < 20000; ++rep) {
          sup = std::max(sup, bregman(p, sample_ball(spec, rng), sample_ball(spec, rng)));
        }
        std::vector<double> e(d, 0.0);
        e[0] = 1.0;
        std::vector<double> minus_e(d, 0.0);
        minus_e[0] = -1.0;
        // Antipodal basis vectors attain it.
        CHECK(bregman(p, e, minus_e) == doctest::Approx(2.0));
        CHECK(sup <= 2.0 + 1e-12);
      }
    }
  }

  SUBCASE("phi_2 diameter on the p-ball") {
    const BallSpec spec{16, 4.0, 1.0};
    const RegSpec reg = RegSpec::omd(2.0, spec);
    CHECK(reg.D == doctest::Approx(2.0 * std::sqrt(16.0)));
    const std::vector<double> plus(16, std::pow(16.0, -0.25));
    std::vector<double> minus(16, -std::pow(16.0, -0.25));
    CHECK(bregman(2.0, plus, minus) == doctest::Approx(reg.D));
  }
}

TEST_CASE("regularizer constants") {
  const BallSpec spec{8, 10.0, 1.0};
  const RegSpec f2 = RegSpec::ftrl(2.0, spec);
  CHECK(f2.mu == 1.0);
  CHECK(f2.D == doctest::Approx(std::pow(8.0, 0.8) / 2.0));
  const RegSpec fp = RegSpec::ftrl(10.0, spec);
  CHECK(fp.mu == doctest::Approx(std::pow(2.0, -9.0)));
  CHECK(fp.D == doctest::Approx(0.1));
  CHECK(sharper_uniform_convexity_constant(10.0) >= uniform_convexity_constant(10.0));
  CHECK_THROWS_AS(RegSpec::ftrl(12.0, spec), DomainError);
  CHECK_THROWS_AS(RegSpec::omd(1.5, spec), DomainError);

  SUBCASE("FTRL D is the sup of phi_r over the ball") {
    Rng rng(8);
    for (double r : {2.0, 4.0, 10.0}) {
      const RegSpec reg = RegSpec::ftrl(r, spec);
      double sup = 0.0;
      for (int k = 0; k < 5000; ++k) sup = std::max(sup, phi_eval(r, sample_ball(spec, rng)));
      CHECK(sup <= reg.D + 1e-12);
      // The constant-magnitude boundary point attains the sup for r < p, a basis vector for r = p.
      const std::vector<double> flat(8, std::pow(8.0, -0.1));
      std::vector<double> e(8, 0.0);
      e[0] = 1.0;
      CHECK(std::max(phi_eval(r, flat), phi_eval(r, e)) == doctest::Approx(reg.D));
    }
  }
}

TEST_CASE("bregman pair helper") {
  const auto pair = make_bregman_pair(3.0, {1.0, 0.0}, {0.0, 1.0});
  CHECK(pair.divergence == doctest::Approx(bregman(3.0, pair.x, pair.y)));
}
