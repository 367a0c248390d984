#ifndef SWARMDIFF_MICRO_HPP
#define SWARMDIFF_MICRO_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "swarmdiff/sim.hpp"

namespace swarmdiff::micro {

/// Kinetic prediction of the mean time between encounters:
/// arena_side^2 / (comm_range * (n_robots - 1) * speed).
double tau_ideal(double arena_side, double comm_range, int n_robots, double speed);

struct MicroEstimate {
  double tau_ideal = 0.0;      // seconds
  double tau_empirical = 0.0;  // seconds
  std::size_t n_gaps = 0;
  double iqr_lo = 0.0;
  double iqr_hi = 0.0;
};

/// Pooled per-robot inter-encounter statistics from a time-sorted event log.
/// Rising edges only; bursts of re-crossings of the same pair closer than
/// debounce_window seconds apart count as one encounter. The interval before
/// each robot's first encounter and after its last one is censored and
/// excluded. Returns nullopt when no complete gap exists.
std::optional<MicroEstimate> estimate_tau_empirical(
    std::span<const sim::EncounterEvent> log, int n_robots, double debounce_window);

/// Convenience wrapper: tau_ideal from the config, debounce window
/// 2*comm_range/speed (one traversal of the communication disk).
std::optional<MicroEstimate> estimate(const sim::SimConfig& config,
                                      std::span<const sim::EncounterEvent> log);

struct BetaFit {
  double beta = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // (tau_ideal, tau_empirical)
};

/// Least squares through the origin: beta = sum(x*y)/sum(x^2); r_squared is
/// computed against the through-origin model (uncentered total sum of
/// squares). Throws std::invalid_argument when no point has x != 0.
BetaFit fit_beta(std::span<const std::pair<double, double>> points);

}  // namespace swarmdiff::micro

#endif
