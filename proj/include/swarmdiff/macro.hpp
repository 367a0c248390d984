#ifndef SWARMDIFF_MACRO_HPP
#define SWARMDIFF_MACRO_HPP

#include <span>
#include <vector>

namespace swarmdiff::macro {

/// Parameters shared by all swarm-level diffusion laws.
struct MacroParams {
  double lambda = 0.5;  // mixture weight in [0,1]: 0 logistic, 1 Gompertz
  double tau = 1.0;     // mean encounter interval, seconds
  double t0 = 0.0;      // anchor time where the curve passes through I0
  double I0 = 0.05;     // initial informed fraction in (0,1)
  int n_robots = 20;

  /// I0 pinned to 1/n, the single informed source at the start of a run.
  static MacroParams for_swarm(int n_robots, double tau, double t0 = 0.0, double lambda = 0.5);

  void validate() const;
};

/// Growth limited by the stock of uninformed robots: I*(1-I)/tau.
double logistic_rate(double informed_frac, double tau);

/// Growth limited by message surprisal: (I/tau)*ln(1/I); 0 at both endpoints
/// by continuity.
double gompertz_rate(double informed_frac, double tau);

/// lambda * gompertz_rate + (1-lambda) * logistic_rate.
double combined_rate(double informed_frac, const MacroParams& params);

double logistic_closed(double t, const MacroParams& params);
double gompertz_closed(double t, const MacroParams& params);

/// Closed-form mixture lambda*gompertz_closed + (1-lambda)*logistic_closed,
/// the working approximation to the combined rate equation.
double blend_closed(double t, const MacroParams& params);

struct ModelCurve {
  std::vector<double> t;
  std::vector<double> informed_frac;
};

/// Classical fixed-step 4th-order integration of the combined rate equation
/// from (t0, I0), sampled on the grid. Internal step is
/// min(smallest grid spacing, tau/1000); the state is clamped to [1e-12, 1].
/// The grid must be nondecreasing and start at or after t0.
ModelCurve integrate_combined(const MacroParams& params, std::span<const double> grid);

/// Uniform grid of n_points on [t0, t0 + 10*tau], the span over which both
/// closed forms run from I0 to saturation.
std::vector<double> default_grid(const MacroParams& params, int n_points = 1000);

}  // namespace swarmdiff::macro

#endif
