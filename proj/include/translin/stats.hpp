#pragma once

#include <cstddef>
#include <span>

namespace translin {

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // unbiased; 0 for fewer than two values
  double median = 0.0;
};

SampleSummary summarize(std::span<const double> values);

}  // namespace translin
