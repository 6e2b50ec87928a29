#include "translin/drift_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace translin {

double MultiplicativeDriftBound::threshold(double r) const { return (std::log(initial / s_min) + r) / delta; }

MultiplicativeDriftBound multiplicative_drift_bounds(double initial, double s_min, double delta, std::span<const double> r_list) {
  if (!(s_min > 0.0)) throw std::invalid_argument("multiplicative_drift_bounds: s_min must be positive");
  if (!(initial >= s_min)) throw std::invalid_argument("multiplicative_drift_bounds: X0 must be at least s_min");
  if (!(delta > 0.0)) throw std::invalid_argument("multiplicative_drift_bounds: delta must be positive");
  MultiplicativeDriftBound out{initial, s_min, delta, 0.0, {}};
  out.expected_time = out.threshold(1.0);
  for (double r : r_list) {
    if (!(r >= 0.0)) throw std::invalid_argument("multiplicative_drift_bounds: r must be non-negative");
    out.tails.push_back({r, out.threshold(r), std::exp(-r)});
  }
  return out;
}

}  // namespace translin
