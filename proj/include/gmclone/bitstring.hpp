#ifndef GMCLONE_BITSTRING_HPP
#define GMCLONE_BITSTRING_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gmclone/errors.hpp"

namespace gmclone {

// A computational-basis label |i_1 i_2 ... i_n>. Position 0 is the leftmost
// ket symbol (qubit 1) and the most significant bit of the packed value, so
// for equal lengths lexicographic order coincides with numeric order.
class BitString {
 public:
  static constexpr std::size_t max_length = 63;

  BitString() = default;

  BitString(std::size_t length, std::uint64_t value) : value_(value), length_(length) {
    if (length > max_length) {
      throw DomainError("bitstring length " + std::to_string(length) + " exceeds " +
                        std::to_string(max_length));
    }
    if (length < 64 && (value >> length) != 0) {
      throw DomainError("value " + std::to_string(value) + " does not fit in " +
                        std::to_string(length) + " bits");
    }
  }

  static BitString parse(std::string_view text) {
    if (text.size() > max_length) {
      throw DomainError("bitstring too long: " + std::to_string(text.size()));
    }
    std::uint64_t value = 0;
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw DomainError("invalid bit character '" + std::string(1, c) + "'");
      }
      value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(text.size(), value);
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::uint64_t value() const noexcept { return value_; }

  int operator[](std::size_t pos) const noexcept {
    return static_cast<int>((value_ >> (length_ - 1 - pos)) & 1U);
  }

  int popcount() const noexcept { return std::popcount(value_); }

  /// Ones among positions [first, first + count).
  int popcount(std::size_t first, std::size_t count) const noexcept {
    if (count == 0) return 0;
    const std::uint64_t shifted = value_ >> (length_ - first - count);
    const std::uint64_t mask = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    return std::popcount(shifted & mask);
  }

  std::string to_string() const {
    std::string out(length_, '0');
    for (std::size_t k = 0; k < length_; ++k) {
      if ((*this)[k]) out[k] = '1';
    }
    return out;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
    const std::size_t common = a.length_ < b.length_ ? a.length_ : b.length_;
    const std::uint64_t pa = common == 0 ? 0 : a.value_ >> (a.length_ - common);
    const std::uint64_t pb = common == 0 ? 0 : b.value_ >> (b.length_ - common);
    if (pa != pb) return pa <=> pb;
    return a.length_ <=> b.length_;
  }

 private:
  std::uint64_t value_ = 0;
  std::size_t length_ = 0;
};

/// Big-endian index: sum_k bits[k] * 2^(n-1-k).
inline std::uint64_t bit_index(const BitString& bits) {
  if (bits.empty()) throw DomainError("bit_index of an empty bitstring");
  return bits.value();
}

inline BitString index_bits(std::size_t length, std::uint64_t index) {
  return BitString(length, index);
}

}  // namespace gmclone

#endif  // GMCLONE_BITSTRING_HPP
