#include "swarmdiff/micro.hpp"

#include <map>
#include <stdexcept>

#include "swarmdiff/stats.hpp"

namespace swarmdiff::micro {

double tau_ideal(double arena_side, double comm_range, int n_robots, double speed) {
  if (n_robots < 2) throw std::invalid_argument("tau_ideal: need at least 2 robots");
  if (!(arena_side > 0.0 && comm_range > 0.0 && speed > 0.0))
    throw std::invalid_argument("tau_ideal: parameters must be positive");
  return arena_side * arena_side / (comm_range * (n_robots - 1) * speed);
}

std::optional<MicroEstimate> estimate_tau_empirical(
    std::span<const sim::EncounterEvent> log, int n_robots, double debounce_window) {
  if (n_robots < 1) throw std::invalid_argument("estimate_tau_empirical: bad robot count");

  // Chain-merge debounce: an edge extends the current burst of its pair if it
  // falls within the window of the previous raw edge; only burst starts count.
  std::map<std::pair<int, int>, double> last_edge;
  std::vector<std::vector<double>> encounter_times(n_robots);
  for (const auto& ev : log) {
    if (ev.kind != sim::EncounterEvent::Kind::Rising) continue;
    if (ev.a < 0 || ev.b < 0 || ev.a >= n_robots || ev.b >= n_robots)
      throw std::invalid_argument("estimate_tau_empirical: robot index out of range");
    const auto key = std::pair{ev.a, ev.b};
    const auto it = last_edge.find(key);
    const bool fresh = it == last_edge.end() || ev.t - it->second >= debounce_window;
    last_edge[key] = ev.t;
    if (fresh) {
      encounter_times[ev.a].push_back(ev.t);
      encounter_times[ev.b].push_back(ev.t);
    }
  }

  std::vector<double> gaps;
  for (const auto& times : encounter_times)
    for (std::size_t i = 1; i < times.size(); ++i) gaps.push_back(times[i] - times[i - 1]);
  if (gaps.empty()) return std::nullopt;

  MicroEstimate est;
  est.tau_empirical = stats::mean(gaps);
  est.n_gaps = gaps.size();
  est.iqr_lo = stats::quantile(gaps, 0.25);
  est.iqr_hi = stats::quantile(gaps, 0.75);
  return est;
}

std::optional<MicroEstimate> estimate(const sim::SimConfig& config,
                                      std::span<const sim::EncounterEvent> log) {
  const double debounce = 2.0 * config.comm_range / config.speed;
  auto est = estimate_tau_empirical(log, config.n_robots, debounce);
  if (!est) return std::nullopt;
  est->tau_ideal = tau_ideal(config.arena_side, config.comm_range, config.n_robots, config.speed);
  return est;
}

BetaFit fit_beta(std::span<const std::pair<double, double>> points) {
  if (points.empty()) throw std::invalid_argument("fit_beta: no points");
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    sxy += x * y;
    sxx += x * x;
    syy += y * y;
  }
  if (sxx <= 0.0) throw std::invalid_argument("fit_beta: all tau_ideal values are zero");

  BetaFit fit;
  fit.beta = sxy / sxx;
  double ss_res = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - fit.beta * x;
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  fit.points.assign(points.begin(), points.end());
  return fit;
}

}  // namespace swarmdiff::micro
