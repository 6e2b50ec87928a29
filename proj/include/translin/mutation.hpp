#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "translin/bitstring.hpp"
#include "translin/random.hpp"

namespace translin {

/// Record of one mutation: which positions flipped, split by the parent's bit value.
struct MutationEvent {
  std::vector<std::size_t> flipped_one_bits;   // parent had 1, ascending
  std::vector<std::size_t> flipped_zero_bits;  // parent had 0, ascending
  bool accepted = false;

  std::size_t flip_count() const noexcept { return flipped_one_bits.size() + flipped_zero_bits.size(); }
  std::vector<std::size_t> flipped_positions() const;
  BitString mask(std::size_t length) const;
};

/// Positions flipped by one standard bit mutation of a `length`-bit string,
/// written to `out` in ascending order. Uses geometric gap sampling, so the
/// cost is proportional to the number of flips. Requires 0 < p <= 1.
void sample_flip_positions(std::size_t length, double p, RandomSource& rng, std::vector<std::size_t>& out);

MutationEvent make_event(const BitString& parent, const std::vector<std::size_t>& flips);

/// Flips each bit of x independently with probability p.
std::pair<BitString, MutationEvent> standard_bit_mutation(const BitString& x, double p, RandomSource& rng);

}  // namespace translin
