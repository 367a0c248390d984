#include "swarmdiff/mobility.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swarmdiff::mobility {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

double parse_number(std::string_view s, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(std::string(s), &pos);
  } catch (const std::exception&) {
    fail(std::string("walk policy: bad ") + what + " '" + std::string(s) + "'");
  }
  if (pos != s.size()) fail(std::string("walk policy: bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

WalkPolicy WalkPolicy::crw(double rho) {
  WalkPolicy p;
  p.kind = WalkKind::Crw;
  p.rho = rho;
  p.validate();
  return p;
}

WalkPolicy WalkPolicy::lw(double alpha, double min_step, double max_step) {
  WalkPolicy p;
  p.kind = WalkKind::Lw;
  p.alpha = alpha;
  p.min_step = min_step;
  p.max_step = max_step;
  p.validate();
  return p;
}

WalkPolicy WalkPolicy::hybrid(double rho, double alpha, double min_step, double max_step) {
  WalkPolicy p;
  p.kind = WalkKind::Hybrid;
  p.rho = rho;
  p.alpha = alpha;
  p.min_step = min_step;
  p.max_step = max_step;
  p.validate();
  return p;
}

void WalkPolicy::validate() const {
  if (uses_rho() && !(rho >= 0.0 && rho <= 1.0)) fail("walk policy: rho must be in [0,1]");
  if (uses_alpha()) {
    if (!(alpha > 1.0)) fail("walk policy: alpha must be > 1");
    if (min_step < 0.0 || max_step < 0.0) fail("walk policy: negative relocation bound");
    if (min_step > 0.0 && max_step > 0.0 && min_step > max_step)
      fail("walk policy: min_step > max_step");
  }
}

WalkPolicy WalkPolicy::resolved(double arena_side, double tick_distance) const {
  WalkPolicy p = *this;
  if (p.uses_alpha()) {
    const double diagonal = arena_side * std::numbers::sqrt2;
    if (p.min_step <= 0.0) p.min_step = tick_distance;
    if (p.max_step <= 0.0) p.max_step = diagonal;
    if (!(p.min_step > 0.0)) fail("walk policy: min_step must be > 0");
    if (p.min_step > p.max_step) fail("walk policy: min_step > max_step");
    if (p.max_step > diagonal * (1.0 + 1e-12)) fail("walk policy: max_step exceeds arena diagonal");
  }
  p.validate();
  return p;
}

WalkPolicy parse_walk_policy(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail("walk policy: expected '<kind>:<params>'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  if (kind == "crw") {
    return WalkPolicy::crw(parse_number(args, "rho"));
  }
  if (kind == "lw") {
    return WalkPolicy::lw(parse_number(args, "alpha"));
  }
  if (kind == "hybrid") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) fail("walk policy: hybrid needs 'rho,alpha'");
    return WalkPolicy::hybrid(parse_number(args.substr(0, comma), "rho"),
                              parse_number(args.substr(comma + 1), "alpha"));
  }
  fail("walk policy: unknown kind '" + std::string(kind) + "'");
}

std::string to_string(const WalkPolicy& policy) {
  switch (policy.kind) {
    case WalkKind::Crw:
      return "crw:" + format_number(policy.rho);
    case WalkKind::Lw:
      return "lw:" + format_number(policy.alpha);
    case WalkKind::Hybrid:
      return "hybrid:" + format_number(policy.rho) + "," + format_number(policy.alpha);
  }
  fail("walk policy: corrupt kind");
}

double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a - kPi;
}

double sample_turn_crw(double rho, Rng& rng) {
  if (!(rho >= 0.0 && rho <= 1.0)) fail("sample_turn_crw: rho must be in [0,1]");
  if (rho == 1.0) return 0.0;  // point mass: no turning
  const double u = rng.uniform();
  const double scale = (1.0 - rho) / (1.0 + rho);
  return 2.0 * std::atan(scale * std::tan(kPi * (u - 0.5)));
}

double levy_step_quantile(double alpha, double min_step, double max_step, double u) {
  if (!(alpha > 1.0)) fail("levy step: alpha must be > 1");
  if (!(min_step > 0.0) || min_step > max_step) fail("levy step: bad relocation bounds");
  if (min_step == max_step) return min_step;
  const double a = std::pow(min_step, 1.0 - alpha);
  const double b = std::pow(max_step, 1.0 - alpha);
  return std::pow(a + u * (b - a), 1.0 / (1.0 - alpha));
}

double sample_step_levy(double alpha, double min_step, double max_step, Rng& rng) {
  return levy_step_quantile(alpha, min_step, max_step, rng.uniform());
}

namespace {

// Move dist meters along the heading, folding specularly at the walls.
void move_with_reflection(Pose& p, double dist, double arena_side) {
  double nx = p.x + dist * std::cos(p.heading);
  double ny = p.y + dist * std::sin(p.heading);
  bool flip_x = false;
  while (nx < 0.0 || nx > arena_side) {
    nx = nx < 0.0 ? -nx : 2.0 * arena_side - nx;
    flip_x = !flip_x;
  }
  bool flip_y = false;
  while (ny < 0.0 || ny > arena_side) {
    ny = ny < 0.0 ? -ny : 2.0 * arena_side - ny;
    flip_y = !flip_y;
  }
  double h = p.heading;
  if (flip_x) h = kPi - h;
  if (flip_y) h = -h;
  p.x = nx;
  p.y = ny;
  p.heading = wrap_angle(h);
}

}  // namespace

void advance(Walker& walker, const WalkPolicy& policy, double speed, double dt,
             double arena_side, Rng& rng) {
  if (!(dt > 0.0)) fail("advance: dt must be > 0");
  if (!(speed >= 0.0)) fail("advance: negative speed");
  const double dist = speed * dt;
  switch (policy.kind) {
    case WalkKind::Crw:
      walker.pose.heading = wrap_angle(walker.pose.heading + sample_turn_crw(policy.rho, rng));
      break;
    case WalkKind::Lw:
      if (walker.leg_remaining <= 0.0) {
        walker.pose.heading = rng.uniform(-kPi, kPi);
        walker.leg_remaining = sample_step_levy(policy.alpha, policy.min_step, policy.max_step, rng);
      }
      walker.leg_remaining -= dist;
      break;
    case WalkKind::Hybrid:
      if (walker.leg_remaining <= 0.0) {
        walker.pose.heading = wrap_angle(walker.pose.heading + sample_turn_crw(policy.rho, rng));
        walker.leg_remaining = sample_step_levy(policy.alpha, policy.min_step, policy.max_step, rng);
      }
      walker.leg_remaining -= dist;
      break;
  }
  move_with_reflection(walker.pose, dist, arena_side);
}

}  // namespace swarmdiff::mobility
