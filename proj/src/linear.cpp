#include "translin/linear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace translin {

LinearFunction::LinearFunction(Eigen::VectorXd weights) : weights_(std::move(weights)) {
  if (weights_.size() == 0) throw std::invalid_argument("LinearFunction: weights must be non-empty");
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] < 0.0)
      throw std::invalid_argument("LinearFunction: weights must be finite and non-negative");
  }
  const std::size_t k = arity();
  order_.resize(k);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return weights_[a] < weights_[b]; });
  sorted_.resize(weights_.size());
  sorted_index_.resize(k);
  first_equal_.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    sorted_[j] = weights_[order_[j]];
    sorted_index_[order_[j]] = j;
    first_equal_[j] = (j > 0 && sorted_[j] == sorted_[j - 1]) ? first_equal_[j - 1] : j;
  }
}

LinearFunction::LinearFunction(std::span<const double> weights)
    : LinearFunction(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(weights.data(), weights.size()))) {}

double eval_linear(const LinearFunction& fn, const BitString& y) {
  if (y.size() != fn.arity()) throw std::invalid_argument("eval_linear: length of y differs from arity");
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i]) total += fn.weights()[static_cast<Eigen::Index>(i)];
  return total;
}

DomainEmbedding::DomainEmbedding(std::vector<std::size_t> positions, std::size_t domain_size)
    : positions_(std::move(positions)), ranks_(domain_size, kAbsent) {
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    if (positions_[j] >= domain_size) throw std::invalid_argument("DomainEmbedding: position outside the domain");
    if (j > 0 && positions_[j] <= positions_[j - 1])
      throw std::invalid_argument("DomainEmbedding: positions must be strictly increasing");
    ranks_[positions_[j]] = j;
  }
}

std::optional<std::size_t> DomainEmbedding::rank(std::size_t position) const {
  if (position >= ranks_.size() || ranks_[position] == kAbsent) return std::nullopt;
  return ranks_[position];
}

double eval_extended(const LinearFunction& fn, const DomainEmbedding& embedding, const BitString& x) {
  if (embedding.size() != fn.arity()) throw std::invalid_argument("eval_extended: embedding size differs from arity");
  if (x.size() != embedding.domain_size()) throw std::invalid_argument("eval_extended: length of x differs from domain");
  double total = 0.0;
  const auto positions = embedding.positions();
  for (std::size_t j = 0; j < positions.size(); ++j)
    if (x[positions[j]]) total += fn.weights()[static_cast<Eigen::Index>(j)];
  return total;
}

}  // namespace translin
