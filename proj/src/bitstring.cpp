#include "translin/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace translin {

BitString::BitString(std::size_t length, bool value) : bits_(length, value ? 1 : 0) {}

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BitString: elements must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitString BitString::from_string(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.bits_[i] = 1;
    } else if (text[i] != '0') {
      throw std::invalid_argument("BitString: expected only '0' and '1' characters");
    }
  }
  return out;
}

BitString BitString::from_mask(std::uint64_t mask, std::size_t length) {
  if (length > 64) throw std::invalid_argument("BitString::from_mask: length exceeds 64");
  BitString out(length);
  for (std::size_t i = 0; i < length; ++i) out.bits_[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return out;
}

BitString BitString::unit(std::size_t length, std::size_t position) {
  if (position >= length) throw std::out_of_range("BitString::unit: position out of range");
  BitString out(length);
  out.bits_[position] = 1;
  return out;
}

bool BitString::at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("BitString::at");
  return bits_[i] != 0;
}

std::size_t BitString::one_count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::size_t> BitString::one_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

BitString BitString::complemented() const {
  BitString out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

std::uint64_t BitString::to_mask() const {
  if (size() > 64) throw std::logic_error("BitString::to_mask: length exceeds 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < size(); ++i) mask |= static_cast<std::uint64_t>(bits_[i]) << i;
  return mask;
}

std::string BitString::to_string() const {
  std::string out(size(), '0');
  for (std::size_t i = 0; i < size(); ++i)
    if (bits_[i]) out[i] = '1';
  return out;
}

}  // namespace translin
