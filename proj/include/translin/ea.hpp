#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "translin/bitstring.hpp"
#include "translin/mutation.hpp"
#include "translin/random.hpp"

namespace translin {

struct EAConfig {
  double mutation_probability = 0.5;
  std::uint64_t max_iterations = 1;
  std::uint64_t trace_stride = 0;  // 0 records the endpoints only

  /// p = 1/n for the instance's nominal dimension n (not the domain size).
  static EAConfig for_dimension(std::size_t n, std::uint64_t max_iterations, std::uint64_t trace_stride = 0);
  void validate() const;
};

struct TraceSample {
  std::uint64_t iteration = 0;
  double f = 0.0;
  double phi = 0.0;
  std::size_t ones = 0;
  friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

struct RunTrace {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::optional<std::uint64_t> hitting_time;  // empty when the budget ran out
  std::uint64_t iterations = 0;
  std::uint64_t accepted_steps = 0;  // accepted mutations that changed the point
  std::vector<TraceSample> samples;
  BitString final_state;

  bool budget_exhausted() const noexcept { return !hitting_time.has_value(); }
  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

nlohmann::json to_json(const RunTrace& trace);

/// Objective of the form combine(parts(x)) where parts is affine in the bits:
/// setting bit i adds part_weights(i) to parts(x). The EA loop uses this to
/// score offspring from the flipped positions alone.
template <class F>
concept IncrementalObjective = requires(const F& f, const BitString& x, std::size_t i, const Eigen::Vector2d& parts) {
  { f.size() } -> std::convertible_to<std::size_t>;
  { f.parts(x) } -> std::convertible_to<Eigen::Vector2d>;
  { f.part_weights(i) } -> std::convertible_to<Eigen::Vector2d>;
  { f.combine(parts) } -> std::convertible_to<double>;
  { f.is_optimal(x) } -> std::convertible_to<bool>;
};

/// One iteration of the (1+1) EA: mutate, keep the offspring unless it is worse.
template <class F>
  requires std::invocable<const F&, const BitString&>
std::pair<BitString, MutationEvent> elitist_step(const BitString& x, const F& f, double p, RandomSource& rng) {
  auto [y, event] = standard_bit_mutation(x, p, rng);
  if (f(y) <= f(x)) {
    event.accepted = true;
    return {std::move(y), std::move(event)};
  }
  return {x, std::move(event)};
}

BitString uniform_bitstring(std::size_t length, RandomSource& rng);

/// Runs the (1+1) EA from `start` (uniform when absent) until the objective
/// reports an optimal point or the iteration budget is spent.
/// `phi_coefficients`, when non-empty, gives the per-position weights of a
/// linear potential that is recorded alongside f in the trace.
template <IncrementalObjective F>
RunTrace run_ea(const F& f, const EAConfig& config, RandomSource& rng, std::span<const double> phi_coefficients = {},
                std::optional<BitString> start = std::nullopt) {
  config.validate();
  const std::size_t m = f.size();
  RunTrace trace;
  trace.seed = rng.seed();
  trace.stream = rng.stream();

  BitString x = start ? std::move(*start) : uniform_bitstring(m, rng);
  const bool track_phi = !phi_coefficients.empty();
  auto phi_of = [&](const BitString& s) {
    if (!track_phi) return std::numeric_limits<double>::quiet_NaN();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (s[i]) total += phi_coefficients[i];
    return total;
  };

  Eigen::Vector2d parts = f.parts(x);
  double value = f.combine(parts);
  double phi = phi_of(x);
  std::size_t ones = x.one_count();
  auto record = [&](std::uint64_t t) {
    if (trace.samples.empty() || trace.samples.back().iteration != t) trace.samples.push_back({t, value, phi, ones});
  };
  record(0);

  if (f.is_optimal(x)) {
    trace.hitting_time = 0;
    trace.final_state = std::move(x);
    return trace;
  }

  std::vector<std::size_t> flips;
  flips.reserve(16);
  std::uint64_t t = 0;
  while (t < config.max_iterations) {
    sample_flip_positions(m, config.mutation_probability, rng, flips);
    ++t;
    if (!flips.empty()) {
      Eigen::Vector2d candidate = parts;
      for (auto i : flips) {
        if (x[i]) {
          candidate -= f.part_weights(i);
        } else {
          candidate += f.part_weights(i);
        }
      }
      if (f.combine(candidate) <= value) {
        for (auto i : flips) x.flip(i);
        parts = f.parts(x);
        value = f.combine(parts);
        phi = phi_of(x);
        ones = x.one_count();
        ++trace.accepted_steps;
        if (f.is_optimal(x)) {
          trace.hitting_time = t;
          break;
        }
      }
    }
    if (config.trace_stride > 0 && t % config.trace_stride == 0) record(t);
  }
  trace.iterations = t;
  record(t);
  trace.final_state = std::move(x);
  return trace;
}

}  // namespace translin
