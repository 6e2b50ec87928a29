#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "translin/bitstring.hpp"
#include "translin/ea.hpp"
#include "translin/linear.hpp"
#include "translin/objective.hpp"

namespace translin {

/// Potential for a linear function with weights w_1 <= ... <= w_k:
/// g_i = (1 + 1/n)^(beta(i) - 1), beta(i) the first index with weight w_i.
/// Indices here are 0-based, so g_i = (1 + 1/n)^beta(i).
class PotentialFunction {
 public:
  /// Throws std::invalid_argument if the weights are not ascending.
  PotentialFunction(std::span<const double> sorted_weights, std::size_t n);

  std::size_t arity() const noexcept { return static_cast<std::size_t>(coefficients_.size()); }
  std::size_t base_n() const noexcept { return n_; }
  const Eigen::VectorXd& coefficients() const noexcept { return coefficients_; }
  double coefficient(std::size_t i) const { return coefficients_[static_cast<Eigen::Index>(i)]; }
  std::size_t beta(std::size_t i) const { return beta_.at(i); }

 private:
  std::size_t n_;
  Eigen::VectorXd coefficients_;
  std::vector<std::size_t> beta_;
};

PotentialFunction build_potential(const LinearFunction& fn, std::size_t n);

/// Both potentials of a composite plus phi's per-position coefficient
/// g1_{r1(i)} [i in B1] + g2_{r2(i)} [i in B2].
struct PotentialPair {
  PotentialFunction first;
  PotentialFunction second;
  Eigen::VectorXd position_coefficients;
};

PotentialPair build_potentials(const CompositeObjective& f);

/// phi(x) = g1(z) + g2(y), each sum taken in its own sorted-weight order.
double eval_phi(const CompositeObjective& f, const PotentialPair& pots, const BitString& x);

/// (1/n) * sum_{i=1..k} (1 + 1/n)^(i-1): the expected potential gain when all
/// k bits are zeros that flip with probability 1/n. Zero for k = 0.
double zero_gain_series(std::size_t k, std::size_t n);

/// Expected potential loss on the focus function when sorted index `index`
/// is the single flipping one-bit and every lower-weight zero-bit flips with
/// probability 1/n, each charged its worst-case coefficient (1 + 1/n)^(j-1):
///   g_{i*} - (1/n) * sum_{j < beta(i*)} (1 + 1/n)^(j-1).
/// This is identically 1.
double single_flip_drift_value(const PotentialFunction& pot, std::size_t index);

/// (1+1) EA on a composite with phi recorded in the trace; p from `config`.
RunTrace run_ea(const CompositeObjective& f, const EAConfig& config, RandomSource& rng,
                std::optional<BitString> start = std::nullopt);

}  // namespace translin
