#include "translin/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace translin {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad rational '" + text + "'");
    return static_cast<std::int64_t>(v);
  };
  Rational r;
  if (slash == std::string::npos) {
    r = {parse_int(text), 1};
  } else {
    r = {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  }
  if (r.den <= 0) throw std::invalid_argument("rational '" + text + "' needs a positive denominator");
  return r;
}

void validate_dimensions(std::size_t n, std::size_t s, const Rational& alpha) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (alpha.den <= 0 || alpha.num <= 0) throw std::invalid_argument("alpha must be a positive rational");
  if (2 * alpha.num < alpha.den) throw std::invalid_argument("alpha must be at least 1/2");
  if (!(alpha.value() < std::log(2.0))) throw std::invalid_argument("alpha must be below ln 2");
  const auto scaled = static_cast<std::int64_t>(n) * alpha.num;
  if (scaled % alpha.den != 0)
    throw std::invalid_argument("alpha*n = " + alpha.to_string() + "*" + std::to_string(n) + " is not an integer");
  const auto first = static_cast<std::size_t>(scaled / alpha.den);
  if (s > n - first)
    throw std::invalid_argument("overlap s = " + std::to_string(s) + " exceeds (1-alpha)n = " + std::to_string(n - first));
}

CompositeObjective::CompositeObjective(std::size_t n, std::size_t s, Rational alpha, Subfunction first, Subfunction second)
    : n_(n), s_(s), alpha_(alpha), first_(std::move(first)), second_(std::move(second)) {
  validate_dimensions(n, s, alpha);
  const std::size_t m = n - s;
  const auto a1 = static_cast<std::size_t>(static_cast<std::int64_t>(n) * alpha.num / alpha.den);
  const std::size_t a2 = n - a1;
  if (first_.linear.arity() != a1 || first_.embedding.size() != a1)
    throw std::invalid_argument("first subfunction must depend on alpha*n = " + std::to_string(a1) + " bits");
  if (second_.linear.arity() != a2 || second_.embedding.size() != a2)
    throw std::invalid_argument("second subfunction must depend on (1-alpha)n = " + std::to_string(a2) + " bits");
  if (first_.embedding.domain_size() != m || second_.embedding.domain_size() != m)
    throw std::invalid_argument("embeddings must live on n - s = " + std::to_string(m) + " positions");

  position_weights_ = Eigen::Matrix<double, Eigen::Dynamic, 2>::Zero(static_cast<Eigen::Index>(m), 2);
  std::vector<int> cover(m, 0);
  const auto p1 = first_.embedding.positions();
  for (std::size_t j = 0; j < p1.size(); ++j) {
    position_weights_(static_cast<Eigen::Index>(p1[j]), 0) = first_.linear.weights()[static_cast<Eigen::Index>(j)];
    ++cover[p1[j]];
  }
  const auto p2 = second_.embedding.positions();
  for (std::size_t j = 0; j < p2.size(); ++j) {
    position_weights_(static_cast<Eigen::Index>(p2[j]), 1) = second_.linear.weights()[static_cast<Eigen::Index>(j)];
    ++cover[p2[j]];
  }
  const auto shared = static_cast<std::size_t>(std::count(cover.begin(), cover.end(), 2));
  if (shared != s) throw std::invalid_argument("|B1 cap B2| must equal s = " + std::to_string(s));
  if (std::find(cover.begin(), cover.end(), 0) != cover.end())
    throw std::invalid_argument("B1 cup B2 must cover every position");
}

double CompositeObjective::epsilon() const noexcept { return 2.0 - std::exp(alpha_.value()); }

Eigen::Vector2d CompositeObjective::parts(const BitString& x) const {
  Eigen::Vector2d total = Eigen::Vector2d::Zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) total += part_weights(i);
  return total;
}

bool CompositeObjective::is_optimal(const BitString& x) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && (position_weights_(static_cast<Eigen::Index>(i), 0) > 0.0 || position_weights_(static_cast<Eigen::Index>(i), 1) > 0.0))
      return false;
  }
  return true;
}

double eval_composite(const CompositeObjective& f, const BitString& x) {
  if (x.size() != f.size()) throw std::invalid_argument("eval_composite: length of x differs from n - s");
  return f(x);
}

bool is_optimal(const CompositeObjective& f, const BitString& x) {
  if (x.size() != f.size()) throw std::invalid_argument("is_optimal: length of x differs from n - s");
  return f.is_optimal(x);
}

namespace {

std::vector<std::size_t> iota_positions(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out(end - begin);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

}  // namespace

CompositeObjective build_separable(std::span<const double> w1, std::span<const double> w2) {
  if (w1.empty() || w2.empty()) throw std::invalid_argument("build_separable: weights must be non-empty");
  if (w1.size() != w2.size()) throw std::invalid_argument("build_separable: both halves need n/2 weights");
  const std::size_t half = w1.size();
  const std::size_t n = 2 * half;
  Subfunction first{LinearFunction(w1), DomainEmbedding(iota_positions(0, half), n), MonotoneTransform::square()};
  Subfunction second{LinearFunction(w2), DomainEmbedding(iota_positions(half, n), n), MonotoneTransform::square_root()};
  return CompositeObjective(n, 0, Rational{1, 2}, std::move(first), std::move(second));
}

std::string to_string(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::uniform_integer: return "uniform-integer";
    case WeightScheme::exponential_doubling: return "exponential-doubling";
    case WeightScheme::all_ones: return "all-ones";
  }
  return "?";
}

std::string to_string(EmbeddingScheme scheme) {
  return scheme == EmbeddingScheme::canonical ? "canonical" : "random";
}

WeightScheme parse_weight_scheme(const std::string& text) {
  if (text == "uniform-integer") return WeightScheme::uniform_integer;
  if (text == "exponential-doubling") return WeightScheme::exponential_doubling;
  if (text == "all-ones") return WeightScheme::all_ones;
  throw std::invalid_argument("unknown weight scheme '" + text + "'");
}

EmbeddingScheme parse_embedding_scheme(const std::string& text) {
  if (text == "canonical") return EmbeddingScheme::canonical;
  if (text == "random") return EmbeddingScheme::random;
  throw std::invalid_argument("unknown embedding scheme '" + text + "'");
}

namespace {

Eigen::VectorXd draw_weights(const GenerationSpec& spec, std::size_t k, RandomSource& rng) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    switch (spec.weights) {
      case WeightScheme::uniform_integer:
        w[static_cast<Eigen::Index>(i)] = static_cast<double>(rng.uniform_int(spec.weight_lo, spec.weight_hi));
        break;
      case WeightScheme::exponential_doubling: w[static_cast<Eigen::Index>(i)] = std::ldexp(1.0, static_cast<int>(i)); break;
      case WeightScheme::all_ones: w[static_cast<Eigen::Index>(i)] = 1.0; break;
    }
  }
  return w;
}

}  // namespace

CompositeObjective generate_instance(const GenerationSpec& spec, RandomSource& rng) {
  validate_dimensions(spec.n, spec.s, spec.alpha);
  if (spec.weights == WeightScheme::uniform_integer && spec.weight_lo > spec.weight_hi)
    throw std::invalid_argument("generate_instance: weight range is empty");
  const std::size_t m = spec.n - spec.s;
  const auto a1 = static_cast<std::size_t>(static_cast<std::int64_t>(spec.n) * spec.alpha.num / spec.alpha.den);
  const std::size_t a2 = spec.n - a1;

  std::vector<std::size_t> b1;
  std::vector<std::size_t> b2;
  if (spec.embedding == EmbeddingScheme::canonical) {
    b1 = iota_positions(0, a1);
    b2 = iota_positions(a1 - spec.s, m);
  } else {
    std::vector<std::size_t> perm = iota_positions(0, m);
    for (std::size_t i = m; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_int(0, i - 1)]);
    b1.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(a1));
    b2.assign(perm.end() - static_cast<std::ptrdiff_t>(a2), perm.end());
    std::sort(b1.begin(), b1.end());
    std::sort(b2.begin(), b2.end());
  }
  Eigen::VectorXd w1 = draw_weights(spec, a1, rng);
  Eigen::VectorXd w2 = draw_weights(spec, a2, rng);
  Subfunction first{LinearFunction(std::move(w1)), DomainEmbedding(std::move(b1), m), spec.transform1};
  Subfunction second{LinearFunction(std::move(w2)), DomainEmbedding(std::move(b2), m), spec.transform2};
  return CompositeObjective(spec.n, spec.s, spec.alpha, std::move(first), std::move(second));
}

CompositeObjective onemax_instance(std::size_t n, std::size_t s) {
  GenerationSpec spec;
  spec.n = n;
  spec.s = s;
  spec.weights = WeightScheme::all_ones;
  RandomSource unused(0);
  return generate_instance(spec, unused);
}

}  // namespace translin
