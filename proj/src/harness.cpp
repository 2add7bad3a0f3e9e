#include "oco/harness.hpp"

#include <cmath>

#include "oco/errors.hpp"
#include "oco/parallel.hpp"

namespace oco {

RegretTrace run_full_info(Learner& learner, Adversary& adversary, const BallSpec& spec,
                          std::size_t T, const RunOptions& options) {
  spec.validate();
  if (learner.spec().d != spec.d || adversary.desc().spec.d != spec.d) {
    throw ContractError("learner, adversary and run disagree on the dimension");
  }
  RegretTrace trace;
  trace.header.spec = spec;
  trace.header.learner = learner.id();
  trace.header.adversary = adversary.id();
  trace.header.seed = adversary.desc().seed;
  trace.header.T_requested = T;
  trace.header.T_effective = std::min(T, adversary.effective_horizon());
  trace.header.warnings = adversary.warnings();
  trace.rounds.reserve(T);

  std::vector<double> g(spec.d);
  std::vector<double> G(spec.d, 0.0);
  double learner_loss = 0.0;
  for (std::size_t t = 1; t <= T; ++t) {
    const auto x = learner.play();
    if (x.size() != spec.d) throw ContractError("learner played a point of the wrong dimension");
    RoundRecord rec;
    rec.t = t;
    rec.eta = learner.current_eta();
    rec.x_pnorm = lp_norm(x, spec.p);
    if (!(rec.x_pnorm <= 1.0 + kFeasibilitySlack)) throw InfeasiblePointError(t, rec.x_pnorm);
    if (options.keep_points) rec.x.assign(x.begin(), x.end());

    adversary.gradient(t, g);
    rec.loss = dot(g, x);
    learner_loss += rec.loss;
    for (std::size_t i = 0; i < spec.d; ++i) G[i] += g[i];
    rec.competitor = linear_minimum_value(G, spec);
    rec.regret = learner_loss - rec.competitor;
    if (auto b = learner.regret_bound(t)) rec.bound = *b;
    if (options.keep_points) rec.g = g;

    if (learner.needs_gradient()) {
      learner.observe(g);
    } else {
      learner.observe_value(rec.loss);
    }
    trace.rounds.push_back(std::move(rec));
  }
  return trace;
}

BanditEstimate run_bandit(const BanditLearnerFactory& make_learner, const BanditEnvFactory& make_env,
                          const BallSpec& spec, std::size_t T, std::size_t trials,
                          std::uint64_t seed) {
  spec.validate();
  if (trials < 1) throw ContractError("bandit estimate needs at least one trial");
  BanditEstimate out;
  out.samples.assign(trials, 0.0);
  std::vector<std::vector<std::string>> warnings(trials);
  const Rng root(seed);

  parallel_for(trials, [&](std::size_t k) {
    const Rng trial = root.split(k);
    auto env = make_env(trial.split(0)());
    auto learner = make_learner(trial.split(1)(), *env);
    if (learner->needs_gradient()) {
      throw ContractError("learner " + learner->id() + " requests full gradients in bandit mode");
    }
    if (env->spec().d != spec.d || learner->spec().d != spec.d) {
      throw ContractError("bandit learner, environment and run disagree on the dimension");
    }
    const auto mean = env->mean_gradient();
    double regret = 0.0;
    for (std::size_t t = 1; t <= T; ++t) {
      const auto x = learner->play();
      const double norm = lp_norm(x, spec.p);
      if (!(norm <= 1.0 + kFeasibilitySlack)) throw InfeasiblePointError(t, norm);
      regret += dot(mean, x) - env->competitor_value();
      learner->observe_value(env->feedback(x));
    }
    out.samples[k] = regret;
    if (k == 0) warnings[k] = env->warnings();
  });

  double sum = 0.0;
  for (double v : out.samples) sum += v;
  out.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0.0;
    for (double v : out.samples) ss += (v - out.mean) * (v - out.mean);
    out.std_error = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
  }
  out.warnings = warnings[0];
  return out;
}

}  // namespace oco
