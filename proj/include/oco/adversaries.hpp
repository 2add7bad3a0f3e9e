#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oco/geometry.hpp"
#include "oco/schedules.hpp"

namespace oco {

enum class AdversaryKind {
  CornerAlternation,
  RademacherLowdim,
  RademacherHighdim,
  StrongconvexKiller,
  OmdCornerVariant,
  QuadGrowth1d,
  Random,  // drifting Gaussian directions inside the dual ball; for conformance matrices
  Zero,
};

std::string to_string(AdversaryKind kind);
AdversaryKind parse_adversary_kind(std::string_view id);
bool adversary_needs_schedule(AdversaryKind kind);

struct AdversaryDesc {
  AdversaryKind kind = AdversaryKind::Zero;
  BallSpec spec;
  std::size_t T = 0;
  std::uint64_t seed = 0;
  const StepSchedule* schedule_view = nullptr;
};

// Largest multiple of 4 not above T.
std::size_t adjusted_horizon(std::size_t T);

class Adversary {
 public:
  explicit Adversary(AdversaryDesc desc) : desc_(desc) {}
  virtual ~Adversary() = default;

  std::string id() const { return to_string(desc_.kind); }
  const AdversaryDesc& desc() const { return desc_; }
  // Rounds that carry the construction; later rounds emit zero losses.
  std::size_t effective_horizon() const { return effective_; }
  // Writes g_t (t is 1-based) into g, which must have length d.
  virtual void gradient(std::size_t t, std::span<double> g) = 0;
  // Closed-form competitor value over the effective horizon, where the construction gives one.
  virtual std::optional<double> competitor_value() const { return std::nullopt; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 protected:
  AdversaryDesc desc_;
  std::size_t effective_ = 0;
  std::vector<std::string> warnings_;
};

std::unique_ptr<Adversary> make_adversary(const AdversaryDesc& desc);

// Single-round forms of the deterministic constructions. T is the requested horizon.
std::vector<double> corner_alternation(std::size_t t, const BallSpec& spec, std::size_t T);
std::vector<double> strongconvex_killer(std::size_t t, const BallSpec& spec, std::size_t T,
                                        const StepSchedule* view);
std::vector<double> omd_corner_variant(std::size_t t, const BallSpec& spec, std::size_t T,
                                       const StepSchedule* view);
double quad_growth_1d(std::size_t t, std::size_t T, double L);

}  // namespace oco
