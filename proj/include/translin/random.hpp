#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace translin {

/// Seeded pseudo-random stream (xoshiro256**, period 2^256 - 1).
///
/// The state is derived from the pair (seed, stream) through SplitMix64, so
/// every replicate index of one master seed gets its own decorrelated stream.
/// All derived distributions are implemented here rather than through
/// <random> so that identical seeds give identical draws on any platform.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed = 0, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Independent stream keyed by `index` under the same master seed.
  RandomSource substream(std::uint64_t index) const { return RandomSource(seed_, index); }

  std::uint64_t next_u64() noexcept;
  std::uint64_t operator()() noexcept { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept;
  /// Uniform on (0, 1].
  double uniform_open01() noexcept;
  /// Uniform integer in [lo, hi], unbiased.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  bool bernoulli(double p) noexcept { return uniform01() < p; }
  /// Standard normal draw (Marsaglia polar method).
  double normal() noexcept;
  double normal(double mean, double stddev) noexcept { return mean + stddev * normal(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> state_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Mixes a structured job key into a single stream index.
std::uint64_t stream_key(std::uint64_t tag, std::uint64_t major, std::uint64_t minor) noexcept;

}  // namespace translin
