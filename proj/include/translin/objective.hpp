#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "translin/bitstring.hpp"
#include "translin/linear.hpp"
#include "translin/random.hpp"
#include "translin/transform.hpp"

namespace translin {

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 2;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parses "a/b" or an integer.
Rational parse_rational(const std::string& text);

/// A linear function placed on part of the search space and passed through
/// a monotone transform: h(l*(x)).
struct Subfunction {
  LinearFunction linear;
  DomainEmbedding embedding;
  MonotoneTransform transform;
};

/// f(x) = h1(l1*(x)) + h2(l2*(x)) on {0,1}^(n-s).
///
/// Invariants checked on construction: 1/2 <= alpha < ln 2, alpha*n is an
/// integer, |B1| = alpha*n, |B2| = (1-alpha)*n, |B1 cap B2| = s <= (1-alpha)n,
/// and B1 cup B2 covers every position.
class CompositeObjective {
 public:
  CompositeObjective(std::size_t n, std::size_t s, Rational alpha, Subfunction first, Subfunction second);

  std::size_t n() const noexcept { return n_; }
  std::size_t s() const noexcept { return s_; }
  /// Domain size n - s.
  std::size_t size() const noexcept { return n_ - s_; }
  const Rational& alpha() const noexcept { return alpha_; }
  /// 2 - e^alpha, the largest epsilon with alpha <= ln(2 - epsilon).
  double epsilon() const noexcept;
  double default_mutation_probability() const noexcept { return 1.0 / static_cast<double>(n_); }

  const Subfunction& first() const noexcept { return first_; }
  const Subfunction& second() const noexcept { return second_; }

  /// (l1*(x), l2*(x)).
  Eigen::Vector2d parts(const BitString& x) const;
  /// Weights of position i in l1* and l2* (zero when outside B).
  Eigen::Vector2d part_weights(std::size_t i) const { return position_weights_.row(static_cast<Eigen::Index>(i)).transpose(); }
  const Eigen::Matrix<double, Eigen::Dynamic, 2>& position_weights() const noexcept { return position_weights_; }
  double combine(const Eigen::Vector2d& parts) const { return first_.transform(parts[0]) + second_.transform(parts[1]); }
  double operator()(const BitString& x) const { return combine(parts(x)); }

  /// True iff every position with a positive weight in either function is 0.
  bool is_optimal(const BitString& x) const;

 private:
  std::size_t n_;
  std::size_t s_;
  Rational alpha_;
  Subfunction first_;
  Subfunction second_;
  Eigen::Matrix<double, Eigen::Dynamic, 2> position_weights_;
};

double eval_composite(const CompositeObjective& f, const BitString& x);
bool is_optimal(const CompositeObjective& f, const BitString& x);

/// (sum_{i<=n/2} w1_i x_i)^2 + sqrt(sum_{i>n/2} w2_i x_i), s = 0, alpha = 1/2.
CompositeObjective build_separable(std::span<const double> w1, std::span<const double> w2);

enum class WeightScheme { uniform_integer, exponential_doubling, all_ones };
enum class EmbeddingScheme { canonical, random };

std::string to_string(WeightScheme scheme);
std::string to_string(EmbeddingScheme scheme);
WeightScheme parse_weight_scheme(const std::string& text);
EmbeddingScheme parse_embedding_scheme(const std::string& text);

struct GenerationSpec {
  std::size_t n = 8;
  std::size_t s = 0;
  Rational alpha{1, 2};
  WeightScheme weights = WeightScheme::uniform_integer;
  std::uint64_t weight_lo = 1;
  std::uint64_t weight_hi = 100;
  MonotoneTransform transform1 = MonotoneTransform::identity();
  MonotoneTransform transform2 = MonotoneTransform::identity();
  EmbeddingScheme embedding = EmbeddingScheme::canonical;
};

/// Throws std::invalid_argument unless (n, s, alpha) admits a valid instance.
void validate_dimensions(std::size_t n, std::size_t s, const Rational& alpha);

/// Canonical layout: B1 = {1..alpha n}, B2 = {alpha n - s + 1 .. n - s}.
/// Random layout: a uniform permutation of the positions, B1 taking the first
/// alpha n entries and B2 the last (1 - alpha) n.
CompositeObjective generate_instance(const GenerationSpec& spec, RandomSource& rng);

/// OneMax on n - s bits as a composite (unit weights, identity transforms).
CompositeObjective onemax_instance(std::size_t n, std::size_t s = 0);

}  // namespace translin
