#pragma once

#include <span>
#include <vector>

namespace translin {

struct TailThreshold {
  double r = 0.0;
  double threshold = 0.0;          // (ln(X0/s_min) + r) / delta
  double probability_bound = 1.0;  // e^-r
};

/// Multiplicative drift bounds for a process on {0} cup [s_min, s_max] with
/// E[X_t - X_{t+1} | F_t] >= delta X_t. s_max does not enter the bounds.
struct MultiplicativeDriftBound {
  double initial = 0.0;  // X0
  double s_min = 0.0;
  double delta = 0.0;
  double expected_time = 0.0;  // (ln(X0/s_min) + 1) / delta
  std::vector<TailThreshold> tails;

  double threshold(double r) const;
};

/// Requires X0 >= s_min > 0, delta > 0 and r >= 0.
MultiplicativeDriftBound multiplicative_drift_bounds(double initial, double s_min, double delta, std::span<const double> r_list = {});

}  // namespace translin
