#include "translin/chance.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "translin/normal.hpp"

namespace translin {

ChanceInstance::ChanceInstance(Eigen::VectorXd mu, Eigen::VectorXd sigma, double confidence)
    : mu_(std::move(mu)), sigma_(std::move(sigma)), confidence_(confidence) {
  if (mu_.size() == 0) throw std::invalid_argument("ChanceInstance: needs at least one item");
  if (mu_.size() != sigma_.size()) throw std::invalid_argument("ChanceInstance: mu and sigma differ in length");
  for (Eigen::Index i = 0; i < mu_.size(); ++i) {
    if (!(mu_[i] >= 0.0) || !(sigma_[i] >= 0.0) || !std::isfinite(mu_[i]) || !std::isfinite(sigma_[i]))
      throw std::invalid_argument("ChanceInstance: mu and sigma must be finite and non-negative");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("ChanceInstance: alpha_c must lie in (0, 1)");
  fractile_ = normal_quantile(confidence);
}

double ChanceInstance::mean(const BitString& x) const {
  if (x.size() != size()) throw std::invalid_argument("ChanceInstance: length of x differs from item count");
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    if (x[i]) total += mu_[static_cast<Eigen::Index>(i)];
  return total;
}

double ChanceInstance::variance(const BitString& x) const {
  if (x.size() != size()) throw std::invalid_argument("ChanceInstance: length of x differs from item count");
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const double s = sigma_[static_cast<Eigen::Index>(i)];
    if (x[i]) total += s * s;
  }
  return total;
}

double ChanceInstance::stddev(const BitString& x) const { return std::sqrt(variance(x)); }

double chance_value(const ChanceInstance& c, const BitString& x) { return c.mean(x) + c.fractile() * c.stddev(x); }

CompositeObjective build_chance(const ChanceInstance& c) {
  if (c.confidence() < 0.5)
    throw std::invalid_argument("build_chance: alpha_c < 1/2 gives K_alpha < 0, which is not a monotone transform");
  const std::size_t m = c.size();
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  Eigen::VectorXd variances = c.sigma().array().square();
  Subfunction first{LinearFunction(c.mu()), DomainEmbedding(all, m), MonotoneTransform::identity()};
  Subfunction second{LinearFunction(std::move(variances)), DomainEmbedding(all, m),
                     MonotoneTransform::compose(MonotoneTransform::scale(c.fractile()), MonotoneTransform::square_root())};
  return CompositeObjective(2 * m, m, Rational{1, 2}, std::move(first), std::move(second));
}

LevelEstimate chance_level_check(const ChanceInstance& c, const BitString& x, std::size_t samples, RandomSource& rng) {
  if (samples < 10000) throw std::invalid_argument("chance_level_check: needs at least 10^4 samples");
  if (!(c.variance(x) > 0.0)) throw std::invalid_argument("chance_level_check: x has zero variance");
  const double threshold = chance_value(c, x);
  const auto selected = x.one_positions();
  std::size_t hits = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    double w = 0.0;
    for (auto i : selected) w += rng.normal(c.mu()[static_cast<Eigen::Index>(i)], c.sigma()[static_cast<Eigen::Index>(i)]);
    if (w <= threshold) ++hits;
  }
  LevelEstimate out;
  out.samples = samples;
  out.level = static_cast<double>(hits) / static_cast<double>(samples);
  out.standard_error = std::sqrt(out.level * (1.0 - out.level) / static_cast<double>(samples));
  return out;
}

}  // namespace translin
