#include "translin/mutation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace translin {

std::vector<std::size_t> MutationEvent::flipped_positions() const {
  std::vector<std::size_t> out;
  out.reserve(flip_count());
  std::merge(flipped_one_bits.begin(), flipped_one_bits.end(), flipped_zero_bits.begin(), flipped_zero_bits.end(),
             std::back_inserter(out));
  return out;
}

BitString MutationEvent::mask(std::size_t length) const {
  BitString out(length);
  for (auto i : flipped_one_bits) out.set(i, true);
  for (auto i : flipped_zero_bits) out.set(i, true);
  return out;
}

void sample_flip_positions(std::size_t length, double p, RandomSource& rng, std::vector<std::size_t>& out) {
  assert(p > 0.0 && p <= 1.0);
  out.clear();
  if (p >= 1.0) {
    for (std::size_t i = 0; i < length; ++i) out.push_back(i);
    return;
  }
  const double log_keep = std::log1p(-p);
  // pos is one past the last examined position.
  std::size_t pos = 0;
  while (pos < length) {
    const double gap = std::floor(std::log(rng.uniform_open01()) / log_keep);
    if (gap >= static_cast<double>(length - pos)) break;
    pos += static_cast<std::size_t>(gap);
    out.push_back(pos);
    ++pos;
  }
}

MutationEvent make_event(const BitString& parent, const std::vector<std::size_t>& flips) {
  MutationEvent event;
  for (auto i : flips) (parent[i] ? event.flipped_one_bits : event.flipped_zero_bits).push_back(i);
  return event;
}

std::pair<BitString, MutationEvent> standard_bit_mutation(const BitString& x, double p, RandomSource& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("standard_bit_mutation: p must lie in (0, 1]");
  std::vector<std::size_t> flips;
  sample_flip_positions(x.size(), p, rng, flips);
  MutationEvent event = make_event(x, flips);
  BitString y = x;
  for (auto i : flips) y.flip(i);
  return {std::move(y), std::move(event)};
}

}  // namespace translin
