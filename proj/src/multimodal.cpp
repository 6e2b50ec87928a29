#include "translin/multimodal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace translin {

MultimodalInstance::MultimodalInstance(std::size_t n, std::optional<std::uint64_t> exponent)
    : n_(n), exponent_(exponent.value_or(static_cast<std::uint64_t>(n) * n)) {
  if (n < 2) throw std::invalid_argument("MultimodalInstance: n must be at least 2");
  if (exponent_ == 0) throw std::invalid_argument("MultimodalInstance: exponent must be positive");
}

Eigen::Vector2d MultimodalInstance::parts(const BitString& x) const {
  if (x.size() != n_) throw std::invalid_argument("MultimodalInstance: length of x differs from n");
  Eigen::Vector2d total(0.0, static_cast<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    if (x[i]) total += part_weights(i);
  return total;
}

double MultimodalInstance::combine(const Eigen::Vector2d& parts) const {
  return parts[0] + std::pow(parts[1] / (static_cast<double>(n_) - 0.5), static_cast<double>(exponent_));
}

bool MultimodalInstance::is_optimal(const BitString& x) const {
  if (x.size() != n_ || !x[0]) return false;
  for (std::size_t i = 1; i < n_; ++i)
    if (x[i]) return false;
  return true;
}

double eval_multimodal(const MultimodalInstance& inst, const BitString& x) { return inst(x); }

MultimodalStructure verify_multimodal_structure(const MultimodalInstance& inst) {
  const std::size_t n = inst.size();
  if (n > 20) throw std::invalid_argument("verify_multimodal_structure: n above the enumeration cap of 20");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> values(count);
  for (std::uint64_t v = 0; v < count; ++v) values[v] = inst(BitString::from_mask(v, n));

  MultimodalStructure out;
  out.single_ones_are_strict_local_optima = true;
  for (std::size_t j = 1; j < n; ++j) {
    const std::uint64_t point = std::uint64_t{1} << j;
    for (std::size_t k = 0; k < n; ++k)
      if (!(values[point ^ (std::uint64_t{1} << k)] > values[point])) out.single_ones_are_strict_local_optima = false;
  }
  out.unique_global_minimum_at_first_unit = true;
  for (std::uint64_t v = 0; v < count; ++v)
    if (v != 1 && !(values[v] > values[1])) out.unique_global_minimum_at_first_unit = false;
  return out;
}

}  // namespace translin
