#include "oco/sweep.hpp"

#include "oco/errors.hpp"
#include "oco/parallel.hpp"

namespace oco {

RegretTrace run_request(const RunRequest& request, const RunOptions& options) {
  auto learner = make_learner(request.learner, request.spec, request.options);
  AdversaryDesc desc;
  desc.kind = parse_adversary_kind(request.adversary);
  desc.spec = request.spec;
  desc.T = request.T;
  desc.seed = request.seed;
  desc.schedule_view = learner->schedule();
  auto adversary = make_adversary(desc);
  auto trace = run_full_info(*learner, *adversary, request.spec, request.T, options);
  trace.header.seed = request.seed;
  return trace;
}

void SweepConfig::validate() const {
  if (learners.empty()) throw ContractError("sweep needs at least one learner");
  if (dims.empty()) throw ContractError("sweep needs a nonempty dimension grid");
  if (seeds < 1) throw ContractError("sweep needs at least one seed per cell");
  BallSpec{dims.front(), p, L}.validate();
}

SweepConfig sweep_config_from(const ConfigMap& config) {
  SweepConfig out;
  auto get = [&](const char* key) -> const std::string* {
    const auto it = config.find(key);
    return it == config.end() ? nullptr : &it->second;
  };
  static const char* known[] = {"p", "lipschitz", "horizon", "learners", "adversary",
                                "dims", "seeds", "seed", "out"};
  for (const auto& [key, value] : config) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ContractError("unknown sweep key '" + key + "'");
  }
  try {
    if (auto v = get("p")) out.p = std::stod(*v);
    if (auto v = get("lipschitz")) out.L = std::stod(*v);
    if (auto v = get("horizon")) out.T = std::stoul(*v);
    if (auto v = get("learners")) out.learners = split_list(*v);
    if (auto v = get("adversary")) out.adversary = *v;
    if (auto v = get("dims")) {
      for (const auto& item : split_list(*v)) out.dims.push_back(std::stoul(item));
    }
    if (auto v = get("seeds")) out.seeds = std::stoul(*v);
    if (auto v = get("seed")) out.seed = std::stoull(*v);
    if (auto v = get("out")) out.out = *v;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ContractError*>(&e)) throw;
    throw ContractError(std::string("bad sweep value: ") + e.what());
  }
  return out;
}

std::vector<CsvRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t per_learner = config.dims.size() * config.seeds;
  const std::size_t cells = config.learners.size() * per_learner;
  std::vector<CsvRow> rows(cells);
  parallel_for(cells, [&](std::size_t cell) {
    RunRequest request;
    request.learner = config.learners[cell / per_learner];
    const std::size_t rest = cell % per_learner;
    request.spec = BallSpec{config.dims[rest / config.seeds], config.p, config.L};
    request.seed = config.seed + rest % config.seeds;
    request.adversary = config.adversary;
    request.T = config.T;
    const auto trace = run_request(request);
    RoundRecord last;
    if (!trace.rounds.empty()) last = trace.rounds.back();
    rows[cell] = make_row(trace, last, std::to_string(cell));
  });
  return rows;
}

void sweep(const SweepConfig& config) {
  if (config.out.empty()) throw ContractError("sweep needs an output path");
  const auto rows = run_sweep(config);
  write_csv_file(config.out, rows);
}

}  // namespace oco
