#ifndef SWARMDIFF_MOBILITY_HPP
#define SWARMDIFF_MOBILITY_HPP

#include <string>
#include <string_view>

#include "swarmdiff/rng.hpp"

namespace swarmdiff::mobility {

enum class WalkKind { Crw, Lw, Hybrid };

/// Per-robot motion policy. For Lévy and hybrid walks a min/max relocation
/// length of 0 means "unset"; resolve() fills the defaults from the arena
/// geometry before the policy is used.
struct WalkPolicy {
  WalkKind kind = WalkKind::Crw;
  double rho = 0.0;       // heading correlation in [0,1] (CRW, Hybrid)
  double alpha = 0.0;     // relocation-length tail exponent > 1 (LW, Hybrid)
  double min_step = 0.0;  // meters (LW, Hybrid)
  double max_step = 0.0;  // meters (LW, Hybrid)

  static WalkPolicy crw(double rho);
  static WalkPolicy lw(double alpha, double min_step = 0.0, double max_step = 0.0);
  static WalkPolicy hybrid(double rho, double alpha, double min_step = 0.0,
                           double max_step = 0.0);

  bool uses_rho() const { return kind != WalkKind::Lw; }
  bool uses_alpha() const { return kind != WalkKind::Crw; }

  /// Fill unset relocation bounds: min_step defaults to the distance covered
  /// in one tick, max_step to the arena diagonal. Throws std::invalid_argument
  /// if the resolved policy violates its parameter domain.
  WalkPolicy resolved(double arena_side, double tick_distance) const;

  void validate() const;
};

/// Textual form used by the CLI: "crw:0.7", "lw:2.0", "hybrid:0.6,1.8"
/// (rho first, alpha second). Throws std::invalid_argument on malformed input.
WalkPolicy parse_walk_policy(std::string_view text);
std::string to_string(const WalkPolicy& policy);

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians in [-pi, pi)
};

/// Pose plus the distance left in the current relocation leg. Lévy and hybrid
/// walks draw a new heading and leg length only when the previous leg is
/// spent; CRW ignores the leg state and turns every tick.
struct Walker {
  Pose pose;
  double leg_remaining = 0.0;
};

/// Normalize an angle into [-pi, pi).
double wrap_angle(double a);

/// Wrapped-Cauchy turn angle centered at 0 with concentration rho (rho is the
/// mean resultant length; rho=0 is uniform, rho=1 a point mass at 0).
double sample_turn_crw(double rho, Rng& rng);

/// Inverse CDF of the truncated power law with density ~ s^(-alpha) on
/// [min_step, max_step], evaluated at u in [0,1].
double levy_step_quantile(double alpha, double min_step, double max_step, double u);

/// Draw a relocation length from the truncated power law.
double sample_step_levy(double alpha, double min_step, double max_step, Rng& rng);

/// Advance one tick: speed*dt meters of travel, walls reflect specularly.
/// The walker never leaves [0, arena_side]^2.
void advance(Walker& walker, const WalkPolicy& policy, double speed, double dt,
             double arena_side, Rng& rng);

}  // namespace swarmdiff::mobility

#endif
