#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oco/acceptance.hpp"
#include "oco/config.hpp"
#include "oco/csv.hpp"
#include "oco/errors.hpp"
#include "oco/harness.hpp"
#include "oco/registry.hpp"
#include "oco/sweep.hpp"

namespace {

void write_output(const std::string& path, const std::vector<oco::CsvRow>& rows) {
  if (path.empty() || path == "-") {
    oco::write_csv(std::cout, rows);
  } else {
    oco::write_csv_file(path, rows);
  }
}

std::vector<double> parse_numbers(const std::string& list) {
  std::vector<double> out;
  for (const auto& item : oco::split_list(list)) out.push_back(oco::parse_double(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oco-lab: online convex optimization on lp-balls"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "play one learner against one adversary, one row per round");
  oco::RunRequest request;
  request.spec = oco::BallSpec{1, 2.0, 1.0};
  std::string run_out = "-";
  double t0 = -1.0;
  std::string coord_scales;
  std::string coord_powers;
  bool show_warnings = false;
  run->add_option("--learner", request.learner, "learner id")->required();
  run->add_option("--adversary", request.adversary, "adversary id")->required();
  run->add_option("--p", request.spec.p, "ball exponent")->required();
  run->add_option("--d", request.spec.d, "dimension")->required();
  run->add_option("--horizon", request.T, "number of rounds")->required();
  run->add_option("--lipschitz", request.spec.L, "Lipschitz budget L")->default_val(1.0);
  run->add_option("--seed", request.seed, "seed")->default_val(0);
  run->add_option("--out", run_out, "CSV path, '-' for stdout")->default_val("-");
  run->add_option("--t0", t0, "switch point for adaptive learners");
  run->add_option("--coord-scales", coord_scales, "ftrl-coordwise step scales, comma separated");
  run->add_option("--coord-powers", coord_powers, "ftrl-coordwise decay powers, comma separated");
  run->add_flag("--warnings", show_warnings, "print adversary warnings to stderr");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid of (learner, d, seed) cells, one row per cell");
  std::string config_path;
  oco::ConfigMap overrides;
  sweep->add_option("--config", config_path, "key = value file; keys are the flag names");
  for (const char* key : {"p", "lipschitz", "horizon", "learners", "adversary", "dims", "seeds", "seed", "out"}) {
    sweep->add_option_function<std::string>(std::string("--") + key,
                                            [&overrides, key](const std::string& v) { overrides[key] = v; },
                                            std::string("overrides the config key ") + key);
  }

  // bandit
  auto* bandit = app.add_subcommand("bandit", "Monte-Carlo pseudo-regret under bandit feedback");
  std::string env_id;
  std::string bandit_learner;
  std::size_t trials = 1000;
  oco::BallSpec bandit_spec{256, 3.0, 1.0};
  std::size_t bandit_T = 8;
  std::uint64_t bandit_seed = 0;
  oco::BanditParams params;
  std::string bandit_out;
  bandit->add_option("--env", env_id, "bandit-bigp | bandit-smallp | bandit-p1")->required();
  bandit->add_option("--learner", bandit_learner, "uniform-random | oracle")->required();
  bandit->add_option("--trials", trials, "number of trials")->default_val(1000);
  bandit->add_option("--p", bandit_spec.p, "ball exponent")->default_val(3.0);
  bandit->add_option("--d", bandit_spec.d, "dimension")->default_val(256);
  bandit->add_option("--horizon", bandit_T, "rounds per trial")->default_val(8);
  bandit->add_option("--lipschitz", bandit_spec.L, "Lipschitz budget L")->default_val(1.0);
  bandit->add_option("--seed", bandit_seed, "seed")->default_val(0);
  bandit->add_option("--delta", params.delta, "failure probability of the Lipschitz budget")->default_val(0.05);
  bandit->add_option("--c1", params.c1, "concentration constant c1")->default_val(1.0);
  bandit->add_option("--C1", params.C1, "concentration constant C1")->default_val(1.0);
  bandit->add_flag("--control", params.control, "zero-mean losses (hidden-coordinate environments)");
  bandit->add_option("--out", bandit_out, "per-trial regrets, one per line");

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance suite, one line per criterion");
  int only = 0;
  verify->add_option("--criterion", only, "run a single criterion by number");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      request.options.t0 = t0;
      request.options.coord_scales = parse_numbers(coord_scales);
      request.options.coord_powers = parse_numbers(coord_powers);
      const auto trace = oco::run_request(request);
      if (show_warnings) {
        for (const auto& w : trace.header.warnings) std::cerr << "warning: " << w << '\n';
      }
      write_output(run_out, oco::trace_rows(trace, "0"));
      return 0;
    }
    if (sweep->parsed()) {
      oco::ConfigMap config;
      if (!config_path.empty()) config = oco::read_config_file(config_path);
      for (const auto& [k, v] : overrides) config[k] = v;
      const auto cfg = oco::sweep_config_from(config);
      write_output(cfg.out, oco::run_sweep(cfg));
      return 0;
    }
    if (bandit->parsed()) {
      oco::BanditLearnerFactory make_learner;
      if (bandit_learner == "oracle") {
        make_learner = [&](std::uint64_t, const oco::BanditEnvironment& e) {
          return std::unique_ptr<oco::Learner>(new oco::FixedPointLearner(bandit_spec, e.competitor()));
        };
      } else {
        make_learner = [&](std::uint64_t s, const oco::BanditEnvironment&) {
          oco::LearnerOptions o;
          o.seed = s;
          return oco::make_learner(bandit_learner, bandit_spec, o);
        };
      }
      const auto est = oco::run_bandit(
          make_learner,
          [&](std::uint64_t s) { return oco::make_bandit_env(env_id, bandit_spec, bandit_T, s, params); },
          bandit_spec, bandit_T, trials, bandit_seed);
      for (const auto& w : est.warnings) std::cerr << "warning: " << w << '\n';
      std::cout << "env=" << env_id << " learner=" << bandit_learner << " trials=" << trials
                << " mean=" << oco::format_double(est.mean)
                << " stderr=" << oco::format_double(est.std_error) << '\n';
      if (!bandit_out.empty()) {
        std::ofstream out(bandit_out);
        if (!out) throw oco::IoError("cannot open '" + bandit_out + "' for writing");
        for (double v : est.samples) out << oco::format_double(v) << '\n';
      }
      return 0;
    }
    if (verify->parsed()) {
      bool ok = true;
      if (only != 0) {
        const auto r = oco::acceptance::run_criterion(only);
        std::cout << oco::acceptance::format_result(r) << std::endl;
        ok = r.passed;
      } else {
        for (const auto& r : oco::acceptance::run_all(&std::cout)) ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "oco-lab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
