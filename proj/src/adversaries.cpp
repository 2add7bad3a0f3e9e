#include "oco/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "oco/errors.hpp"

namespace oco {

namespace {

const std::map<AdversaryKind, std::string>& kind_names() {
  static const std::map<AdversaryKind, std::string> names = {
      {AdversaryKind::CornerAlternation, "corner-alternation"},
      {AdversaryKind::RademacherLowdim, "rademacher-lowdim"},
      {AdversaryKind::RademacherHighdim, "rademacher-highdim"},
      {AdversaryKind::StrongconvexKiller, "strongconvex-killer"},
      {AdversaryKind::OmdCornerVariant, "omd-corner-variant"},
      {AdversaryKind::QuadGrowth1d, "quad-growth-1d"},
      {AdversaryKind::Random, "random"},
      {AdversaryKind::Zero, "zero"},
  };
  return names;
}

// Value of every coordinate of v = d^{-1/p*} (1, ..., 1).
double corner_level(const BallSpec& spec) {
  return std::pow(static_cast<double>(spec.d), -1.0 / spec.dual());
}

void fill_corner(std::size_t t, const BallSpec& spec, std::size_t half, std::span<double> g) {
  std::fill(g.begin(), g.end(), 0.0);
  if (t <= half) {
    g[0] = (t % 2 == 0) ? spec.L : -spec.L;
  } else if (t <= 2 * half) {
    std::fill(g.begin(), g.end(), -spec.L * corner_level(spec));
  }
}

std::size_t argmax_step(const StepSchedule& view, std::size_t s, std::size_t d) {
  if (!view.coordinatewise()) return 0;
  std::size_t best = 0;
  double top = view.eta(s, 0);
  for (std::size_t i = 1; i < d; ++i) {
    const double e = view.eta(s, i);
    if (e > top) {
      top = e;
      best = i;
    }
  }
  return best;
}

void fill_killer(std::size_t t, const BallSpec& spec, std::size_t half, const StepSchedule& view,
                 std::span<double> g) {
  std::fill(g.begin(), g.end(), 0.0);
  const double sign = (t % 2 == 0) ? 1.0 : -1.0;
  if (t > 2 * half) return;
  if (t <= 2) {
    std::fill(g.begin(), g.end(), sign * spec.L * corner_level(spec));
  } else if (t <= half) {
    g[argmax_step(view, 2 * ((t - 1) / 2), spec.d)] = sign * spec.L;
  } else {
    std::fill(g.begin(), g.end(), -spec.L * corner_level(spec));
  }
}

void fill_omd_corner(std::size_t t, const BallSpec& spec, std::size_t half,
                     const StepSchedule& view, std::span<double> g) {
  fill_corner(t, spec, half, g);
  if (t <= half && t % 2 == 1) g[0] = -(view.eta(t + 1) / view.eta(t)) * spec.L;
}

const StepSchedule& require_view(const StepSchedule* view, AdversaryKind kind) {
  if (view == nullptr) {
    throw ContractError(to_string(kind) + " reads the learner's step sizes; no schedule view given");
  }
  return *view;
}

class CornerFamily final : public Adversary {
 public:
  explicit CornerFamily(const AdversaryDesc& desc) : Adversary(desc) {
    effective_ = adjusted_horizon(desc.T);
    if (desc.kind == AdversaryKind::QuadGrowth1d && desc.spec.d != 1) {
      throw ContractError("quad-growth-1d is a one-dimensional construction; got d = " +
                          std::to_string(desc.spec.d));
    }
    if (adversary_needs_schedule(desc.kind)) require_view(desc.schedule_view, desc.kind);
    if (effective_ != desc.T) {
      warnings_.push_back("horizon reduced from " + std::to_string(desc.T) + " to " +
                          std::to_string(effective_) + "; remaining rounds carry zero loss");
    }
  }

  void gradient(std::size_t t, std::span<double> g) override {
    const std::size_t half = effective_ / 2;
    switch (desc_.kind) {
      case AdversaryKind::StrongconvexKiller:
        fill_killer(t, desc_.spec, half, *desc_.schedule_view, g);
        break;
      case AdversaryKind::OmdCornerVariant:
        fill_omd_corner(t, desc_.spec, half, *desc_.schedule_view, g);
        break;
      default:
        fill_corner(t, desc_.spec, half, g);
    }
  }

  std::optional<double> competitor_value() const override {
    return -desc_.spec.L * static_cast<double>(effective_) / 2.0;
  }
};

class RademacherLowdim final : public Adversary {
 public:
  explicit RademacherLowdim(const AdversaryDesc& desc) : Adversary(desc), rng_(desc.seed) {
    if (desc.spec.d > desc.T) throw ContractError("rademacher-lowdim needs d <= T");
    block_ = desc.T / desc.spec.d;
    effective_ = block_ * desc.spec.d;
  }

  void gradient(std::size_t t, std::span<double> g) override {
    std::fill(g.begin(), g.end(), 0.0);
    if (t < 1 || t > effective_) return;
    const std::size_t i = (t - 1) / block_;
    g[i] = desc_.spec.L * rng_.split(t).rademacher();
  }

 private:
  Rng rng_;
  std::size_t block_ = 1;
};

class RademacherHighdim final : public Adversary {
 public:
  explicit RademacherHighdim(const AdversaryDesc& desc) : Adversary(desc), rng_(desc.seed) {
    if (desc.spec.d <= desc.T) {
      throw ContractError("rademacher-highdim needs d > T (d = " + std::to_string(desc.spec.d) +
                          ", T = " + std::to_string(desc.T) + ")");
    }
    effective_ = desc.T;
  }

  void gradient(std::size_t t, std::span<double> g) override {
    std::fill(g.begin(), g.end(), 0.0);
    if (t < 1 || t > effective_) return;
    g[t - 1] = desc_.spec.L * rng_.split(t).rademacher();
  }

  std::optional<double> competitor_value() const override {
    return -desc_.spec.L * std::pow(static_cast<double>(effective_), 1.0 / desc_.spec.dual());
  }

 private:
  Rng rng_;
};

class RandomDrift final : public Adversary {
 public:
  explicit RandomDrift(const AdversaryDesc& desc) : Adversary(desc), rng_(desc.seed) {
    effective_ = desc.T;
    Rng init = rng_.split(0);
    drift_.resize(desc.spec.d);
    for (auto& v : drift_) v = init.normal();
  }

  void gradient(std::size_t t, std::span<double> g) override {
    Rng r = rng_.split(t);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = drift_[i] + r.normal();
    const double norm = lp_norm(std::span<const double>(g.data(), g.size()), desc_.spec.dual());
    const double scale = norm > 0.0 ? desc_.spec.L * (0.5 + 0.5 * r.uniform()) / norm : 0.0;
    for (auto& v : g) v *= scale;
  }

 private:
  Rng rng_;
  std::vector<double> drift_;
};

class ZeroLoss final : public Adversary {
 public:
  explicit ZeroLoss(const AdversaryDesc& desc) : Adversary(desc) { effective_ = desc.T; }
  void gradient(std::size_t, std::span<double> g) override { std::fill(g.begin(), g.end(), 0.0); }
  std::optional<double> competitor_value() const override { return 0.0; }
};

}  // namespace

std::string to_string(AdversaryKind kind) { return kind_names().at(kind); }

AdversaryKind parse_adversary_kind(std::string_view id) {
  for (const auto& [kind, name] : kind_names()) {
    if (name == id) return kind;
  }
  throw ContractError("unknown adversary '" + std::string(id) + "'");
}

bool adversary_needs_schedule(AdversaryKind kind) {
  return kind == AdversaryKind::StrongconvexKiller || kind == AdversaryKind::OmdCornerVariant;
}

std::size_t adjusted_horizon(std::size_t T) { return T - T % 4; }

std::unique_ptr<Adversary> make_adversary(const AdversaryDesc& desc) {
  desc.spec.validate();
  switch (desc.kind) {
    case AdversaryKind::CornerAlternation:
    case AdversaryKind::StrongconvexKiller:
    case AdversaryKind::OmdCornerVariant:
    case AdversaryKind::QuadGrowth1d:
      return std::make_unique<CornerFamily>(desc);
    case AdversaryKind::RademacherLowdim:
      return std::make_unique<RademacherLowdim>(desc);
    case AdversaryKind::RademacherHighdim:
      return std::make_unique<RademacherHighdim>(desc);
    case AdversaryKind::Random:
      return std::make_unique<RandomDrift>(desc);
    case AdversaryKind::Zero:
      return std::make_unique<ZeroLoss>(desc);
  }
  throw ContractError("unsupported adversary kind");
}

std::vector<double> corner_alternation(std::size_t t, const BallSpec& spec, std::size_t T) {
  std::vector<double> g(spec.d);
  fill_corner(t, spec, adjusted_horizon(T) / 2, g);
  return g;
}

std::vector<double> strongconvex_killer(std::size_t t, const BallSpec& spec, std::size_t T,
                                        const StepSchedule* view) {
  std::vector<double> g(spec.d);
  fill_killer(t, spec, adjusted_horizon(T) / 2, require_view(view, AdversaryKind::StrongconvexKiller), g);
  return g;
}

std::vector<double> omd_corner_variant(std::size_t t, const BallSpec& spec, std::size_t T,
                                       const StepSchedule* view) {
  std::vector<double> g(spec.d);
  fill_omd_corner(t, spec, adjusted_horizon(T) / 2, require_view(view, AdversaryKind::OmdCornerVariant), g);
  return g;
}

double quad_growth_1d(std::size_t t, std::size_t T, double L) {
  const std::size_t half = adjusted_horizon(T) / 2;
  if (t <= half) return (t % 2 == 0) ? L : -L;
  return t <= 2 * half ? -L : 0.0;
}

}  // namespace oco
