#include "translin/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace translin {

PotentialFunction::PotentialFunction(std::span<const double> sorted_weights, std::size_t n)
    : n_(n), coefficients_(static_cast<Eigen::Index>(sorted_weights.size())), beta_(sorted_weights.size()) {
  if (n == 0) throw std::invalid_argument("PotentialFunction: n must be positive");
  if (sorted_weights.empty()) throw std::invalid_argument("PotentialFunction: needs at least one weight");
  const double base = 1.0 + 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < sorted_weights.size(); ++i) {
    if (i > 0 && sorted_weights[i] < sorted_weights[i - 1])
      throw std::invalid_argument("PotentialFunction: weights must be sorted ascending");
    beta_[i] = (i > 0 && sorted_weights[i] == sorted_weights[i - 1]) ? beta_[i - 1] : i;
    coefficients_[static_cast<Eigen::Index>(i)] = std::pow(base, static_cast<double>(beta_[i]));
  }
}

PotentialFunction build_potential(const LinearFunction& fn, std::size_t n) {
  const auto& sorted = fn.sorted_weights();
  return PotentialFunction(std::span<const double>(sorted.data(), static_cast<std::size_t>(sorted.size())), n);
}

PotentialPair build_potentials(const CompositeObjective& f) {
  PotentialPair pair{build_potential(f.first().linear, f.n()), build_potential(f.second().linear, f.n()),
                     Eigen::VectorXd::Zero(static_cast<Eigen::Index>(f.size()))};
  auto add = [&](const Subfunction& sub, const PotentialFunction& pot) {
    const auto positions = sub.embedding.positions();
    for (std::size_t j = 0; j < positions.size(); ++j)
      pair.position_coefficients[static_cast<Eigen::Index>(positions[j])] += pot.coefficient(sub.linear.sorted_index()[j]);
  };
  add(f.first(), pair.first);
  add(f.second(), pair.second);
  return pair;
}

double eval_phi(const CompositeObjective& f, const PotentialPair& pots, const BitString& x) {
  if (pots.first.arity() != f.first().linear.arity() || pots.second.arity() != f.second().linear.arity() ||
      pots.first.base_n() != f.n() || pots.second.base_n() != f.n() ||
      static_cast<std::size_t>(pots.position_coefficients.size()) != f.size())
    throw std::invalid_argument("eval_phi: potentials were not built for this instance");
  if (x.size() != f.size()) throw std::invalid_argument("eval_phi: length of x differs from n - s");
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) total += pots.position_coefficients[static_cast<Eigen::Index>(i)];
  return total;
}

double zero_gain_series(std::size_t k, std::size_t n) {
  if (n < 1) throw std::invalid_argument("zero_gain_series: n must be at least 1");
  const double base = 1.0 + 1.0 / static_cast<double>(n);
  double term = 1.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sum += term;
    term *= base;
  }
  return sum / static_cast<double>(n);
}

double single_flip_drift_value(const PotentialFunction& pot, std::size_t index) {
  if (index >= pot.arity()) throw std::out_of_range("single_flip_drift_value: index out of range");
  const std::size_t lower = pot.beta(index);
  const double loss = zero_gain_series(lower, pot.base_n());
  return pot.coefficient(index) - loss;
}

RunTrace run_ea(const CompositeObjective& f, const EAConfig& config, RandomSource& rng, std::optional<BitString> start) {
  const PotentialPair pots = build_potentials(f);
  const auto& c = pots.position_coefficients;
  return run_ea<CompositeObjective>(f, config, rng, std::span<const double>(c.data(), static_cast<std::size_t>(c.size())),
                                    std::move(start));
}

}  // namespace translin
