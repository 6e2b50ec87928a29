#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "translin/bitstring.hpp"
#include "translin/mutation.hpp"
#include "translin/objective.hpp"
#include "translin/potential.hpp"
#include "translin/random.hpp"

namespace translin {

/// Classes of a mutation relative to y, the restriction of x to B2:
/// multiple_ones is S1 (>= 2 one-bits of y flip), single_one is S2.
enum class EventClass : std::size_t { none = 0, single_one = 1, multiple_ones = 2 };

struct EventClassification {
  EventClass kind = EventClass::none;
  std::optional<std::size_t> flipped_position;  // i* as a position of x
  std::optional<std::size_t> flipped_rank;      // i* as a sorted index of l2
  // S2 only: every flipping zero-bit of y has sorted index below beta(i*).
  bool zero_flips_below_beta = false;
};

EventClassification classify_event(const BitString& x, const MutationEvent& event, const CompositeObjective& f);

struct ClassDrift {
  double probability = 0.0;  // Pr(class)
  double drift = 0.0;        // E[(phi(x) - phi(x')) * 1{class}]
  double conditional() const noexcept { return probability > 0.0 ? drift / probability : 0.0; }
};

struct SingleOneDrift {
  std::size_t position = 0;
  std::size_t rank = 0;
  double probability = 0.0;
  double drift = 0.0;
};

struct DriftSample {
  BitString state;
  double phi = 0.0;
  double drift = 0.0;                   // E[phi(x) - phi(x') | x]
  double acceptance_probability = 0.0;  // Pr(x' != x)
  std::array<ClassDrift, 3> by_class{};
  std::vector<std::size_t> one_bits;     // I
  std::vector<SingleOneDrift> single_one;  // S2 split by i*

  const ClassDrift& of(EventClass c) const { return by_class[static_cast<std::size_t>(c)]; }
};

inline constexpr std::size_t kMaxExactBits = 20;
inline constexpr std::size_t kMaxSweepBits = 12;

/// Exact one-step drift of phi at x by enumerating all 2^m mutation masks.
DriftSample exact_drift(const CompositeObjective& f, const PotentialPair& pots, const BitString& x, double p);

struct DriftEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

/// Sample mean of phi(x) - phi(x') over independent mutate-and-select steps.
DriftEstimate monte_carlo_drift(const CompositeObjective& f, const PotentialPair& pots, const BitString& x, double p,
                                std::size_t trials, RandomSource& rng);

/// e^-3 * epsilon / (2n) with epsilon = 2 - e^alpha.
double reference_delta(const CompositeObjective& f);

struct DriftRecord {
  std::uint64_t state_index = 0;
  std::size_t ones = 0;
  double phi = 0.0;
  double drift = 0.0;
  double ratio = 0.0;
};

struct DriftReport {
  std::string instance;
  std::vector<DriftRecord> records;  // non-optimal states only
  double min_ratio = 0.0;
  double delta_ref = 0.0;
  double epsilon = 0.0;
  bool pass = false;

  /// Recomputes min_ratio and pass from the records.
  void finalize();
  std::string to_csv() const;
  nlohmann::json summary_json() const;
};

/// Exact drift at every non-optimal state (m <= 12).
DriftReport exhaustive_drift_check(const CompositeObjective& f, double p);
/// Exact drift at the supplied states (m <= 20); optimal states are skipped.
DriftReport exhaustive_drift_check(const CompositeObjective& f, double p, std::span<const BitString> states);

}  // namespace translin
