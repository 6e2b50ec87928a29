#pragma once

// Reference implementations used only by the tests. They work from the raw
// instance data (weights, positions, transform stages) and deliberately
// share no code paths with the library beyond those accessors.

#include <cmath>
#include <cstdint>
#include <vector>

#include "translin/objective.hpp"

namespace oracle {

using translin::CompositeObjective;
using translin::MonotoneTransform;

inline double apply_stages(const MonotoneTransform& h, double v) {
  for (const auto& st : h.stages()) {
    switch (st.kind) {
      case MonotoneTransform::Kind::identity: break;
      case MonotoneTransform::Kind::square: v = v * v; break;
      case MonotoneTransform::Kind::square_root: v = std::sqrt(v); break;
      case MonotoneTransform::Kind::power: v = std::pow(v, st.a); break;
      case MonotoneTransform::Kind::scale: v = st.a * v; break;
      case MonotoneTransform::Kind::affine: v = st.a * v + st.b; break;
    }
  }
  return v;
}

struct Part {
  std::vector<std::size_t> positions;
  std::vector<double> weights;
  MonotoneTransform h;
};

struct Flat {
  std::size_t n = 0;
  std::size_t m = 0;
  Part p1, p2;
};

inline Part flatten(const translin::Subfunction& sf) {
  Part p;
  p.positions.assign(sf.embedding.positions().begin(), sf.embedding.positions().end());
  const auto& w = sf.linear.weights();
  for (Eigen::Index i = 0; i < w.size(); ++i) p.weights.push_back(w[i]);
  p.h = sf.transform;
  return p;
}

inline Flat flatten(const CompositeObjective& f) { return {f.n(), f.size(), flatten(f.first()), flatten(f.second())}; }

inline double part_sum(const Part& p, std::uint64_t mask) {
  double total = 0.0;
  for (std::size_t j = 0; j < p.positions.size(); ++j)
    if ((mask >> p.positions[j]) & 1U) total += p.weights[j];
  return total;
}

inline double value(const Flat& f, std::uint64_t mask) {
  return apply_stages(f.p1.h, part_sum(f.p1, mask)) + apply_stages(f.p2.h, part_sum(f.p2, mask));
}

// g for weight w: (1 + 1/n)^(number of weights strictly below w). Ties share
// the coefficient of their first sorted occurrence, so no sort is needed.
inline std::vector<double> potential(const Part& p, std::size_t n) {
  std::vector<double> g(p.weights.size());
  for (std::size_t j = 0; j < p.weights.size(); ++j) {
    std::size_t below = 0;
    for (double other : p.weights)
      if (other < p.weights[j]) ++below;
    g[j] = std::pow(1.0 + 1.0 / static_cast<double>(n), static_cast<double>(below));
  }
  return g;
}

struct Phi {
  std::vector<double> g1, g2;
};

inline double phi(const Flat& f, const Phi& g, std::uint64_t mask) {
  double total = 0.0;
  for (std::size_t j = 0; j < f.p1.positions.size(); ++j)
    if ((mask >> f.p1.positions[j]) & 1U) total += g.g1[j];
  for (std::size_t j = 0; j < f.p2.positions.size(); ++j)
    if ((mask >> f.p2.positions[j]) & 1U) total += g.g2[j];
  return total;
}

// E[phi(x) - phi(x')] by summing over every mutation mask.
inline double drift(const Flat& f, std::uint64_t x, double p) {
  const Phi g{potential(f.p1, f.n), potential(f.p2, f.n)};
  const double fx = value(f, x);
  const double px = phi(f, g, x);
  double total = 0.0;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << f.m); ++z) {
    const std::uint64_t y = x ^ z;
    if (!(value(f, y) <= fx)) continue;
    const int k = __builtin_popcountll(z);
    const double prob = std::pow(p, k) * std::pow(1.0 - p, static_cast<double>(f.m) - k);
    total += prob * (px - phi(f, g, y));
  }
  return total;
}

// Phi(x) by composite Simpson integration of the density from 0.
inline double normal_cdf(double x) {
  const int steps = 20000;
  const double h = x / steps;
  auto pdf = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI); };
  double acc = pdf(0.0) + pdf(x);
  for (int i = 1; i < steps; ++i) acc += (i % 2 ? 4.0 : 2.0) * pdf(i * h);
  return 0.5 + acc * h / 3.0;
}

inline double binomial_pmf(std::size_t k, std::size_t n, double p) {
  const double logc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(logc + k * std::log(p) + (n - k) * std::log1p(-p));
}

}  // namespace oracle
