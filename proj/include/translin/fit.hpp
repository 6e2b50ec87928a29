#pragma once

#include <cstddef>
#include <span>

#include "json.hpp"

namespace translin {

struct FitPoint {
  double n = 0.0;
  double value = 0.0;
};

struct PowerFit {
  double coefficient = 0.0;  // a in T = a n^q
  double exponent = 0.0;     // q
  double rms_log_residual = 0.0;
};

struct FitResult {
  std::size_t points = 0;
  double nlogn_coefficient = 0.0;  // c in T = c n ln n
  double nlogn_rms_residual = 0.0;
  PowerFit power;

  nlohmann::json to_json() const;
};

/// Least-squares fit of log T = log a + q log n. Needs >= 3 distinct n.
PowerFit fit_power(std::span<const FitPoint> rows);

/// Least-squares fits of T = c n ln n and T = a n^q. Needs >= 3 distinct n > 1.
FitResult fit_nlogn(std::span<const FitPoint> rows);

}  // namespace translin
