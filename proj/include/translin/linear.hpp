#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "translin/bitstring.hpp"

namespace translin {

/// Linear pseudo-Boolean function with non-negative weights.
///
/// Weights are kept in the caller's order and, additionally, in a stable
/// ascending order; `order()` maps sorted index -> original index and
/// `sorted_index()` is its inverse.
class LinearFunction {
 public:
  explicit LinearFunction(Eigen::VectorXd weights);
  explicit LinearFunction(std::span<const double> weights);

  std::size_t arity() const noexcept { return static_cast<std::size_t>(weights_.size()); }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  const Eigen::VectorXd& sorted_weights() const noexcept { return sorted_; }
  std::span<const std::size_t> order() const noexcept { return order_; }
  std::span<const std::size_t> sorted_index() const noexcept { return sorted_index_; }

  /// Smallest sorted index carrying the same weight as sorted index `i`.
  std::size_t first_equal(std::size_t i) const { return first_equal_.at(i); }

  friend bool operator==(const LinearFunction& a, const LinearFunction& b) { return a.weights_ == b.weights_; }

 private:
  Eigen::VectorXd weights_;
  Eigen::VectorXd sorted_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> sorted_index_;
  std::vector<std::size_t> first_equal_;
};

/// Sum of w_i y_i in the function's original index order.
double eval_linear(const LinearFunction& fn, const BitString& y);

/// Places a k-ary function on a subset B of the positions of an m-bit string.
/// Positions are 0-based and strictly increasing; position B[j] has rank j.
class DomainEmbedding {
 public:
  DomainEmbedding(std::vector<std::size_t> positions, std::size_t domain_size);

  std::size_t size() const noexcept { return positions_.size(); }
  std::size_t domain_size() const noexcept { return ranks_.size(); }
  std::span<const std::size_t> positions() const noexcept { return positions_; }
  bool contains(std::size_t position) const { return rank(position).has_value(); }
  std::optional<std::size_t> rank(std::size_t position) const;

  friend bool operator==(const DomainEmbedding& a, const DomainEmbedding& b) {
    return a.positions_ == b.positions_ && a.ranks_.size() == b.ranks_.size();
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> positions_;
  std::vector<std::size_t> ranks_;
};

/// Sum over i in B of w_{r(i)} x_i; bits outside B are ignored.
double eval_extended(const LinearFunction& fn, const DomainEmbedding& embedding, const BitString& x);

}  // namespace translin
