#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "translin/bitstring.hpp"
#include "translin/objective.hpp"
#include "translin/random.hpp"

namespace translin {

/// Items with independent Normal(mu_i, sigma_i^2) weights and a confidence
/// level alpha_c. The fractile K_alpha is fixed at construction.
class ChanceInstance {
 public:
  ChanceInstance(Eigen::VectorXd mu, Eigen::VectorXd sigma, double confidence);

  std::size_t size() const noexcept { return static_cast<std::size_t>(mu_.size()); }
  const Eigen::VectorXd& mu() const noexcept { return mu_; }
  const Eigen::VectorXd& sigma() const noexcept { return sigma_; }
  double confidence() const noexcept { return confidence_; }
  double fractile() const noexcept { return fractile_; }

  double mean(const BitString& x) const;
  double variance(const BitString& x) const;
  double stddev(const BitString& x) const;

 private:
  Eigen::VectorXd mu_;
  Eigen::VectorXd sigma_;
  double confidence_;
  double fractile_;
};

/// g(x) = sum mu_i x_i + K_alpha * sqrt(sum sigma_i^2 x_i).
double chance_value(const ChanceInstance& c, const BitString& x);

/// Full-overlap composite: n = 2m, s = m, alpha = 1/2, l1 = mu with identity,
/// l2 = sigma^2 with scale(K_alpha) after square root. Requires alpha_c >= 1/2
/// so that the second transform is monotone.
CompositeObjective build_chance(const ChanceInstance& c);

struct LevelEstimate {
  double level = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Fraction of sampled realisations of w(x) = sum w_i x_i not exceeding g(x).
/// Requires sigma(x) > 0 and at least 10^4 samples.
LevelEstimate chance_level_check(const ChanceInstance& c, const BitString& x, std::size_t samples, RandomSource& rng);

}  // namespace translin
