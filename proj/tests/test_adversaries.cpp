#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "oco/adversaries.hpp"
#include "oco/bounds.hpp"
#include "oco/errors.hpp"
#include "oco/geometry.hpp"
#include "oco/harness.hpp"
#include "oco/regularizers.hpp"
#include "oco/registry.hpp"
#include "oco/schedules.hpp"
#include "oco/sweep.hpp"

using namespace oco;

namespace {

std::vector<std::vector<double>> all_gradients(Adversary& adv, std::size_t T) {
  std::vector<std::vector<double>> out;
  for (std::size_t t = 1; t <= T; ++t) {
    std::vector<double> g(adv.desc().spec.d);
    adv.gradient(t, g);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("adversary ids round-trip") {
  for (auto kind : {AdversaryKind::CornerAlternation, AdversaryKind::RademacherLowdim,
                    AdversaryKind::RademacherHighdim, AdversaryKind::StrongconvexKiller,
                    AdversaryKind::OmdCornerVariant, AdversaryKind::QuadGrowth1d,
                    AdversaryKind::Random, AdversaryKind::Zero}) {
    CHECK(parse_adversary_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_adversary_kind("nope"), ContractError);
}

TEST_CASE("corner alternation") {
  const BallSpec spec{6, 10.0, 1.5};
  const std::size_t T = 40;
  CHECK(corner_alternation(1, spec, T)[0] == -1.5);
  CHECK(corner_alternation(2, spec, T)[0] == 1.5);
  std::vector<double> first_half(6, 0.0);
  std::vector<double> total(6, 0.0);
  for (std::size_t t = 1; t <= T; ++t) {
    const auto g = corner_alternation(t, spec, T);
    CHECK(lp_norm(g, spec.dual()) <= spec.L * (1.0 + 1e-12));
    for (std::size_t i = 0; i < 6; ++i) {
      total[i] += g[i];
      if (t <= T / 2) first_half[i] += g[i];
    }
  }
  for (double v : first_half) CHECK(v == 0.0);
  CHECK(linear_minimum_value(total, spec) == doctest::Approx(-spec.L * T / 2.0));

  SUBCASE("horizon is cut to a multiple of four and padded") {
    auto adv = make_adversary({AdversaryKind::CornerAlternation, spec, 42, 0, nullptr});
    CHECK(adv->effective_horizon() == 40);
    CHECK_FALSE(adv->warnings().empty());
    std::vector<double> g(6);
    adv->gradient(41, g);
    CHECK(lp_norm(g, 2.0) == 0.0);
    CHECK(*adv->competitor_value() == doctest::Approx(-spec.L * 20.0));
  }
}

TEST_CASE("rademacher constructions") {
  SUBCASE("d = 1 low-dim is a scalar sign stream") {
    const BallSpec spec{1, 4.0, 2.0};
    auto adv = make_adversary({AdversaryKind::RademacherLowdim, spec, 50, 3, nullptr});
    for (const auto& g : all_gradients(*adv, 50)) CHECK(std::fabs(g[0]) == 2.0);
  }
  SUBCASE("replay is independent of query order") {
    const BallSpec spec{5, 4.0, 1.0};
    auto a = make_adversary({AdversaryKind::RademacherLowdim, spec, 40, 9, nullptr});
    auto b = make_adversary({AdversaryKind::RademacherLowdim, spec, 40, 9, nullptr});
    const auto forward = all_gradients(*a, 40);
    for (std::size_t t = 40; t >= 1; --t) {
      std::vector<double> g(5);
      b->gradient(t, g);
      CHECK(g == forward[t - 1]);
    }
  }
  SUBCASE("high-dim competitor value") {
    const BallSpec spec{20, 10.0, 1.0};
    auto adv = make_adversary({AdversaryKind::RademacherHighdim, spec, 16, 1, nullptr});
    CHECK(*adv->competitor_value() == doctest::Approx(-std::pow(16.0, 0.9)));
    std::vector<double> G(20, 0.0);
    for (const auto& g : all_gradients(*adv, 16)) {
      for (std::size_t i = 0; i < 20; ++i) G[i] += g[i];
    }
    CHECK(linear_minimum_value(G, spec) == doctest::Approx(*adv->competitor_value()));
  }
  SUBCASE("contract errors on the wrong dimension regime") {
    CHECK_THROWS_AS(make_adversary({AdversaryKind::RademacherLowdim, BallSpec{10, 4.0, 1.0}, 5, 0, nullptr}),
                    ContractError);
    CHECK_THROWS_AS(make_adversary({AdversaryKind::RademacherHighdim, BallSpec{10, 4.0, 1.0}, 10, 0, nullptr}),
                    ContractError);
  }
  SUBCASE("a non-anticipating learner has zero expected loss") {
    const BallSpec spec{2, 4.0, 1.0};
    const int trials = 10000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int k = 0; k < trials; ++k) {
      auto learner = make_learner("ftrl-phi2", spec);
      auto adv = make_adversary({AdversaryKind::RademacherLowdim, spec, 8, static_cast<std::uint64_t>(k), nullptr});
      const auto trace = run_full_info(*learner, *adv, spec, 8);
      double loss = 0.0;
      for (const auto& r : trace.rounds) loss += r.loss;
      sum += loss;
      sum_sq += loss * loss;
    }
    const double mean = sum / trials;
    const double sd = std::sqrt(sum_sq / trials - mean * mean);
    CHECK(std::fabs(mean) <= 3.0 * sd / std::sqrt(static_cast<double>(trials)));
  }
}

TEST_CASE("strong-convexity killer") {
  const double p = 10.0;
  const std::size_t T = 8;
  const std::size_t d = strong_convexity_dimension_threshold(p, T);
  const BallSpec spec{d, p, 1.0};

  SUBCASE("uniform schedules always pick the first coordinate") {
    const Schedule s = Schedule::ftrl_anytime(RegSpec::ftrl(2.0, spec), 1.0);
    for (std::size_t t = 3; t <= T / 2; ++t) {
      const auto g = strongconvex_killer(t, spec, T, &s);
      CHECK(std::fabs(g[0]) == 1.0);
      CHECK(std::count(g.begin(), g.end(), 0.0) == static_cast<long>(d - 1));
    }
  }
  SUBCASE("coordinate-wise schedules are chased by their largest step") {
    std::vector<double> scales(d, 0.5);
    scales[7] = 0.9;
    const Schedule s = Schedule::coordinate_wise(2.0, scales, std::vector<double>(d, 0.5));
    const auto g = strongconvex_killer(3, spec, T, &s);
    CHECK(std::fabs(g[7]) == 1.0);
  }
  SUBCASE("gradients stay in the dual ball") {
    const Schedule s = Schedule::ftrl_anytime(RegSpec::ftrl(2.0, spec), 1.0);
    for (std::size_t t = 1; t <= T + 3; ++t) {
      CHECK(lp_norm(strongconvex_killer(t, spec, T, &s), spec.dual()) <= 1.0 + 1e-12);
    }
  }
  SUBCASE("linear regret for phi_2, much less for phi_p") {
    const double phi2 = run_request({"ftrl-phi2", "strongconvex-killer", spec, T, 0, {}}).final_regret();
    const double phip = run_request({"ftrl-phip", "strongconvex-killer", spec, T, 0, {}}).final_regret();
    CHECK(phi2 >= T / 8.0);
    CHECK(phip < phi2);
  }
  SUBCASE("needs a schedule view") {
    CHECK_THROWS_AS(strongconvex_killer(1, spec, T, nullptr), ContractError);
    CHECK_THROWS_AS(make_adversary({AdversaryKind::StrongconvexKiller, spec, T, 0, nullptr}), ContractError);
  }
}

TEST_CASE("OMD corner variant") {
  const BallSpec spec{9, 6.0, 1.2};
  const std::size_t T = 24;
  SUBCASE("constant step reproduces corner alternation") {
    const Schedule s = Schedule::fixed(0.3);
    for (std::size_t t = 1; t <= T; ++t) CHECK(omd_corner_variant(t, spec, T, &s) == corner_alternation(t, spec, T));
  }
  SUBCASE("gradients stay in the dual ball") {
    const Schedule s = Schedule::omd_anytime(RegSpec::omd(2.0, spec), spec.L);
    for (std::size_t t = 1; t <= T; ++t) {
      CHECK(lp_norm(omd_corner_variant(t, spec, T, &s), spec.dual()) <= spec.L * (1.0 + 1e-12));
    }
  }
  SUBCASE("linear regret for OMD-phi_2 in high dimension") {
    const BallSpec big{100000, 10.0, 1.0};
    const std::size_t T2 = 16;
    const double R = run_request({"omd-phi2", "omd-corner-variant", big, T2, 0, {}}).final_regret();
    CHECK(R >= T2 / 8.0);
  }
}

TEST_CASE("one-dimensional growth probe") {
  CHECK(quad_growth_1d(1, 8, 2.0) == -2.0);
  CHECK(quad_growth_1d(2, 8, 2.0) == 2.0);
  CHECK(quad_growth_1d(5, 8, 2.0) == -2.0);
  CHECK(quad_growth_1d(9, 8, 2.0) == 0.0);
  CHECK_THROWS_AS(make_adversary({AdversaryKind::QuadGrowth1d, BallSpec{2, 4.0, 1.0}, 8, 0, nullptr}),
                  ContractError);

  const BallSpec spec{1, 6.0, 1.0};
  std::vector<double> ratios;
  for (std::size_t T = 64; T <= 4096; T *= 2) {
    const auto phi2 = run_request({"ftrl-phi2", "quad-growth-1d", spec, T, 0, {}});
    CHECK(phi2.final_regret() <= phi2.rounds.back().bound + 1e-9);
    CHECK(phi2.rounds.back().competitor == doctest::Approx(-static_cast<double>(T) / 2.0));
    const auto phip = run_request({"ftrl-phip", "quad-growth-1d", spec, T, 0, {}});
    ratios.push_back(phip.final_regret() / std::sqrt(static_cast<double>(T)));
  }
  for (std::size_t k = 1; k < ratios.size(); ++k) CHECK(ratios[k] > ratios[k - 1]);
}

TEST_CASE("random and zero adversaries") {
  const BallSpec spec{7, 3.0, 0.8};
  auto adv = make_adversary({AdversaryKind::Random, spec, 30, 4, nullptr});
  for (const auto& g : all_gradients(*adv, 30)) {
    const double n = lp_norm(g, spec.dual());
    CHECK(n <= spec.L * (1.0 + 1e-12));
    CHECK(n >= 0.5 * spec.L * (1.0 - 1e-12));
  }
  auto zero = make_adversary({AdversaryKind::Zero, spec, 30, 4, nullptr});
  for (const auto& g : all_gradients(*zero, 30)) CHECK(lp_norm(g, 2.0) == 0.0);
}
