#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace translin {

/// Fixed-length sequence of bits. Every element is 0 or 1.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length, bool value = false);
  BitString(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1' characters, leftmost character is position 0.
  static BitString from_string(std::string_view text);
  /// Bit i of the result is bit i of `mask`; length must be at most 64.
  static BitString from_mask(std::uint64_t mask, std::size_t length);
  /// Single one-bit at `position`, zeros elsewhere.
  static BitString unit(std::size_t length, std::size_t position);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) noexcept { bits_[i] ^= 1; }

  std::size_t one_count() const noexcept;
  std::size_t zero_count() const noexcept { return size() - one_count(); }
  std::vector<std::size_t> one_positions() const;

  BitString complemented() const;
  std::uint64_t to_mask() const;
  std::string to_string() const;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace translin
