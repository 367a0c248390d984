#ifndef SWARMDIFF_STATS_HPP
#define SWARMDIFF_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace swarmdiff::stats {

/// Sum with pairwise recursion; associative enough to be reproducible when
/// chunks are reduced in index order.
double pairwise_sum(std::span<const double> values);

double mean(std::span<const double> values);

/// Linear-interpolation quantile (R type 7). q in [0, 1]; values need not be
/// sorted. Throws std::invalid_argument on empty input.
double quantile(std::vector<double> values, double q);

double median(std::vector<double> values);

struct Spearman {
  double rho = 0.0;
  double p_positive = 1.0;  // one-sided P(rho_null >= rho)
  double p_negative = 1.0;  // one-sided P(rho_null <= rho)
  int n = 0;
  bool defined = false;     // false when either rank vector is constant
};

/// Spearman rank correlation with midrank ties. Exact permutation p-values
/// for n <= 8, Student-t approximation above.
Spearman spearman(std::span<const double> x, std::span<const double> y);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

/// One-sided survival P(T > t) for Student's t with df degrees of freedom.
double student_t_sf(double t, double df);

}  // namespace swarmdiff::stats

#endif
