#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "oco/adversaries.hpp"
#include "oco/bandit.hpp"
#include "oco/config.hpp"
#include "oco/csv.hpp"
#include "oco/errors.hpp"
#include "oco/geometry.hpp"
#include "oco/harness.hpp"
#include "oco/learners.hpp"
#include "oco/registry.hpp"
#include "oco/sweep.hpp"

using namespace oco;

namespace {

bool same_value(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

// P(X >= k) for X ~ Binomial(n, q).
double binomial_upper_tail(std::size_t n, double q, std::size_t k) {
  double tail = 0.0;
  for (std::size_t j = k; j <= n; ++j) {
    const double log_pmf = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) +
                           j * std::log(q) + (n - j) * std::log1p(-q);
    tail += std::exp(log_pmf);
  }
  return tail;
}

}  // namespace

TEST_CASE("zero losses give zero regret") {
  for (const auto& id : learner_ids()) {
    if (id.find('<') != std::string::npos) continue;
    const BallSpec spec{9, 4.0, 1.0};
    const auto trace = run_request({id, "zero", spec, 20, 1, {}});
    REQUIRE(trace.rounds.size() == 20);
    for (const auto& r : trace.rounds) CHECK(r.regret == 0.0);
  }
}

TEST_CASE("trace records") {
  const BallSpec spec{5, 3.0, 1.0};
  const auto trace = run_request({"ftrl-phip", "random", spec, 30, 2, {}}, {true});
  double loss = 0.0;
  std::vector<double> G(5, 0.0);
  for (const auto& r : trace.rounds) {
    CHECK(r.x_pnorm <= 1.0 + kFeasibilitySlack);
    CHECK(r.x_pnorm == doctest::Approx(lp_norm(r.x, 3.0)));
    CHECK(r.loss == doctest::Approx(dot(r.g, r.x)));
    loss += r.loss;
    for (std::size_t i = 0; i < 5; ++i) G[i] += r.g[i];
    CHECK(r.competitor == doctest::Approx(linear_minimum_value(G, spec)));
    CHECK(r.regret == doctest::Approx(loss - r.competitor));
    CHECK(r.regret <= r.bound + 1e-9);
    CHECK(r.eta > 0.0);
  }
  CHECK(trace.header.T_effective == 30);
  CHECK(trace.header.learner == "ftrl-phip");
}

TEST_CASE("anytime learners are prefix consistent") {
  const BallSpec spec{7, 5.0, 1.0};
  for (const char* id : {"ftrl-phi2", "ftrl-phip", "ftrl-adaptive", "omd-phi2", "omd-phip", "omd-adaptive"}) {
    const auto full = run_request({id, "random", spec, 50, 8, {}});
    const auto prefix = run_request({id, "random", spec, 23, 8, {}});
    CHECK(full.rounds[22].regret == prefix.final_regret());
  }
}

TEST_CASE("harness contract errors") {
  const BallSpec spec{3, 4.0, 1.0};
  auto learner = make_learner("ftrl-phi2", BallSpec{4, 4.0, 1.0});
  auto adv = make_adversary({AdversaryKind::Zero, spec, 5, 0, nullptr});
  CHECK_THROWS_AS(run_full_info(*learner, *adv, spec, 5), ContractError);
}

TEST_CASE("CSV formatting and round trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(-kInfinity) == "-inf");
  CHECK(std::isnan(parse_double("nan")));
  CHECK(parse_double("inf") == kInfinity);
  CHECK(parse_double(format_double(1.0 / 3.0)) == 1.0 / 3.0);

  const BallSpec spec{6, 10.0, 1.5};
  auto trace = run_request({"uniform-random", "random", spec, 12, 4, {}});
  const auto rows = trace_rows(trace, "7");
  std::ostringstream os;
  write_csv(os, rows);
  CHECK(os.str().rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  std::istringstream is(os.str());
  const auto back = read_csv(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(back[k].run_id == "7");
    CHECK(back[k].learner == rows[k].learner);
    CHECK(back[k].t == rows[k].t);
    CHECK(back[k].regret == rows[k].regret);
    CHECK(same_value(back[k].bound, rows[k].bound));
    CHECK(same_value(back[k].eta, rows[k].eta));
    CHECK(back[k].x_pnorm == rows[k].x_pnorm);
  }
  // No bound for the random player.
  CHECK(std::isnan(rows[0].bound));

  std::istringstream bad("not,a,header\n");
  CHECK_THROWS_AS(read_csv(bad), ContractError);
  CHECK_THROWS_AS(write_csv_file("/nonexistent-dir/out.csv", rows), IoError);
}

TEST_CASE("config parsing") {
  std::istringstream in("# sweep\np = 10\n\nlearners = ftrl-phi2, ftrl-phip\ndims=4,8\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.at("p") == "10");
  CHECK(split_list(cfg.at("learners")) == std::vector<std::string>{"ftrl-phi2", "ftrl-phip"});
  std::istringstream broken("p 10\n");
  CHECK_THROWS_AS(parse_config(broken), ContractError);

  ConfigMap map = cfg;
  map["horizon"] = "16";
  const auto sc = sweep_config_from(map);
  CHECK(sc.p == 10.0);
  CHECK(sc.T == 16);
  CHECK(sc.dims == std::vector<std::size_t>{4, 8});
  map["colour"] = "red";
  CHECK_THROWS_AS(sweep_config_from(map), ContractError);
}

TEST_CASE("sweeps") {
  SweepConfig cfg;
  cfg.p = 10.0;
  cfg.T = 40;
  cfg.learners = {"ftrl-phi2", "ftrl-phip"};
  cfg.adversary = "corner-alternation";
  cfg.dims = {4, 64, 1024};
  cfg.seeds = 2;

  SUBCASE("single cell equals a direct run") {
    SweepConfig one = cfg;
    one.learners = {"ftrl-phi2"};
    one.dims = {64};
    one.seeds = 1;
    const auto rows = run_sweep(one);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].regret == run_request({"ftrl-phi2", "corner-alternation", BallSpec{64, 10.0, 1.0}, 40, 0, {}}).final_regret());
  }
  SUBCASE("ordering, determinism and worker count independence") {
    setenv("OCO_LAB_THREADS", "1", 1);
    const auto serial = run_sweep(cfg);
    setenv("OCO_LAB_THREADS", "3", 1);
    const auto threaded = run_sweep(cfg);
    unsetenv("OCO_LAB_THREADS");
    REQUIRE(serial.size() == 12);
    std::ostringstream a;
    std::ostringstream b;
    write_csv(a, serial);
    write_csv(b, threaded);
    CHECK(a.str() == b.str());
    CHECK(serial[0].learner == "ftrl-phi2");
    CHECK(serial[0].d == 4);
    CHECK(serial[1].seed == serial[0].seed + 1);
    // Deterministic adversary: both seeds of a cell agree.
    CHECK(serial[0].regret == serial[1].regret);
    // Fixed phi_p is dimension free on this construction; phi_2 grows.
    CHECK(serial[6].regret == doctest::Approx(serial[10].regret).epsilon(1e-9));
    CHECK(serial[0].regret < serial[2].regret);
    CHECK(serial[2].regret < serial[4].regret);
  }
}

TEST_CASE("bandit environments") {
  SUBCASE("big-p constants") {
    const BallSpec spec{256, 3.0, 1.0};
    auto env = bandit_bigp_env(spec, 8, 1);
    const double ps = spec.dual();
    CHECK(std::pow(env->epsilon(), ps) * 256.0 == doctest::Approx(1.0));
    // x* = -d^{-1/p} xi earns -L eps d^{1 - 1/p} / 5 = -L/5 per round.
    CHECK(env->competitor_value() == doctest::Approx(-0.2));
    CHECK(lp_norm(env->competitor(), 3.0) == doctest::Approx(1.0));
  }
  SUBCASE("hidden coordinate") {
    const BallSpec spec{10000, 1.25, 1.0};
    auto env = bandit_smallp_env(spec, 4, 3);
    std::size_t nonzero = 0;
    for (double m : env->mean_gradient()) {
      if (m != 0.0) {
        ++nonzero;
        CHECK(m == 0.5);
      }
    }
    CHECK(nonzero == 1);
    CHECK(bandit_smallp_sigma(1.25, 10000) ==
          doctest::Approx(1.0 / (8.0 * std::sqrt(5.0) * std::pow(10000.0, 0.2))));
    CHECK(env->sigma() == doctest::Approx(bandit_smallp_sigma(1.25, 10000)));

    BanditParams control;
    control.control = true;
    auto flat = bandit_smallp_env(spec, 4, 3, control);
    for (double m : flat->mean_gradient()) CHECK(m == 0.0);
  }
  SUBCASE("p = 1 noise level") {
    CHECK(bandit_p1_sigma(55) == doctest::Approx(1.0 / (4.0 * std::sqrt(2.0) * std::exp(1.0) * std::sqrt(std::log(55.0)))));
    // At d = e^4 the formula reduces to 1 / (8 sqrt 2 e).
    const double at_e4 = 1.0 / (4.0 * std::sqrt(2.0) * std::exp(1.0) * std::sqrt(4.0));
    CHECK(at_e4 == doctest::Approx(1.0 / (8.0 * std::sqrt(2.0) * std::exp(1.0))));
    CHECK_NOTHROW(bandit_p1_env(BallSpec{64, 1.0, 1.0}, 4, 1));
  }
  SUBCASE("feedback variance is ||x||_2^2 sigma^2") {
    const BallSpec spec{50, 1.25, 1.0};
    BanditParams control;
    control.control = true;
    auto env = bandit_p1_env(spec, 4, 7, control);
    std::vector<double> x(50, 0.0);
    x[0] = 0.6;
    x[3] = -0.3;
    const double expect = (0.36 + 0.09) * env->sigma() * env->sigma();
    const int n = 100000;
    double s = 0.0;
    double s2 = 0.0;
    for (int k = 0; k < n; ++k) {
      const double v = env->feedback(x);
      s += v;
      s2 += v * v;
    }
    const double mean = s / n;
    CHECK(std::fabs(mean) <= 4.0 * std::sqrt(expect / n));
    CHECK(s2 / n - mean * mean == doctest::Approx(expect).epsilon(0.03));
  }
  SUBCASE("Lipschitz budget holds on all but a delta fraction of traces") {
    const std::size_t traces = 10000;
    const double delta = 0.05;
    auto count = [&](auto make, const BallSpec& spec, std::size_t T) {
      std::size_t bad = 0;
      const std::vector<double> x(spec.d, 0.0);
      for (std::size_t k = 0; k < traces; ++k) {
        auto env = make(spec, T, k);
        bool over = false;
        for (std::size_t t = 0; t < T; ++t) {
          env->feedback(x);
          over = over || lp_norm(env->last_gradient(), spec.dual()) > spec.L;
        }
        if (over) ++bad;
      }
      return bad;
    };
    const std::size_t big = count([&](const BallSpec& s, std::size_t T, std::uint64_t seed) {
      return bandit_bigp_env(s, T, seed, delta);
    }, BallSpec{256, 3.0, 1.0}, 8);
    const std::size_t small = count([&](const BallSpec& s, std::size_t T, std::uint64_t seed) {
      return bandit_smallp_env(s, T, seed);
    }, BallSpec{1000, 1.25, 1.0}, 2);
    CHECK(binomial_upper_tail(traces, delta, big) >= 0.01);
    CHECK(binomial_upper_tail(traces, delta, small) >= 0.01);
  }
  CHECK_THROWS_AS(make_bandit_env("bandit-nope", BallSpec{4, 3.0, 1.0}, 4, 0), ContractError);
}

TEST_CASE("bandit pseudo-regret") {
  const BallSpec spec{256, 3.0, 1.0};
  auto env_factory = [&](std::uint64_t seed) { return bandit_bigp_env(spec, 8, seed); };
  auto uniform = [&](std::uint64_t seed, const BanditEnvironment&) -> std::unique_ptr<Learner> {
    return std::make_unique<UniformRandomLearner>(spec, seed);
  };
  auto oracle = [&](std::uint64_t, const BanditEnvironment& e) -> std::unique_ptr<Learner> {
    return std::make_unique<FixedPointLearner>(spec, e.competitor());
  };

  SUBCASE("zero horizon") {
    const auto est = run_bandit(uniform, env_factory, spec, 0, 50, 1);
    CHECK(est.mean == 0.0);
    CHECK(est.std_error == 0.0);
  }
  SUBCASE("oracle is consistent with zero, uniform play pays") {
    const auto o = run_bandit(oracle, env_factory, spec, 8, 1000, 2);
    CHECK(std::fabs(o.mean) <= 3.0 * o.std_error + 1e-12);
    const auto u = run_bandit(uniform, env_factory, spec, 8, 1000, 3);
    CHECK(u.mean - 1.6448536269514722 * u.std_error >= 8.0 / 80.0);
    CHECK(u.samples.size() == 1000);
  }
  SUBCASE("same seed, same estimate") {
    const auto a = run_bandit(uniform, env_factory, spec, 8, 64, 9);
    const auto b = run_bandit(uniform, env_factory, spec, 8, 64, 9);
    CHECK(a.samples == b.samples);
  }
  SUBCASE("gradient learners are rejected") {
    auto ftrl = [&](std::uint64_t, const BanditEnvironment&) { return make_learner("ftrl-phi2", spec); };
    CHECK_THROWS_AS(run_bandit(ftrl, env_factory, spec, 8, 4, 0), ContractError);
  }
}
