#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "translin/bitstring.hpp"

namespace translin {

/// f(x) = (x_1/2 + sum_{i>=2} x_i) + (zeros(x) / (n - 1/2))^E.
///
/// The negative-weight counterexample: every point with a single one-bit at
/// positions 2..n is a strict local optimum, and (1,0,...,0) is the unique
/// global minimum. E defaults to n^2.
class MultimodalInstance {
 public:
  explicit MultimodalInstance(std::size_t n, std::optional<std::uint64_t> exponent = std::nullopt);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  /// (l1(x), number of zero bits).
  Eigen::Vector2d parts(const BitString& x) const;
  Eigen::Vector2d part_weights(std::size_t i) const { return {i == 0 ? 0.5 : 1.0, -1.0}; }
  double combine(const Eigen::Vector2d& parts) const;
  double operator()(const BitString& x) const { return combine(parts(x)); }
  bool is_optimal(const BitString& x) const;

  BitString global_optimum() const { return BitString::unit(n_, 0); }

 private:
  std::size_t n_;
  std::uint64_t exponent_;
};

double eval_multimodal(const MultimodalInstance& inst, const BitString& x);

struct MultimodalStructure {
  bool single_ones_are_strict_local_optima = false;
  bool unique_global_minimum_at_first_unit = false;
};

/// Exhaustive check over all 2^n points (n <= 20).
MultimodalStructure verify_multimodal_structure(const MultimodalInstance& inst);

}  // namespace translin
