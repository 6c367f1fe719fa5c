#pragma once

// Binary words of length n <= 64 stored in a machine word.
//
// Coordinate 1 is the leftmost character of the textual form and the most
// significant bit of the width-n field, so the integer value of a word equals
// the binary number spelled by its literal ("000011" == 3).

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hcube/error.hpp"

namespace hcube {

using word_t = std::uint64_t;

inline constexpr int kMaxLength = 64;

[[nodiscard]] constexpr word_t low_mask(int n) noexcept {
  return n >= 64 ? ~word_t{0} : ((word_t{1} << n) - 1);
}

[[nodiscard]] constexpr int popcount(word_t w) noexcept { return std::popcount(w); }

[[nodiscard]] constexpr int parity_of(word_t w) noexcept { return std::popcount(w) & 1; }

/// Bit position (0 = least significant) holding 1-based coordinate `coord`.
[[nodiscard]] constexpr int bit_of_coordinate(int n, int coord) noexcept { return n - coord; }

[[nodiscard]] constexpr std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

class BinaryWord {
 public:
  constexpr BinaryWord() = default;

  BinaryWord(word_t bits, int length) : bits_(bits), length_(length) {
    require(length >= 1 && length <= kMaxLength, ErrorCode::Shape,
            "word length must be in 1..64, got " + std::to_string(length));
    require((bits & ~low_mask(length)) == 0, ErrorCode::Shape, "word has bits beyond its length");
  }

  static BinaryWord zero(int n) { return {0, n}; }
  static BinaryWord ones(int n) { return {low_mask(n), n}; }
  static BinaryWord unit(int n, int coord) {
    require(coord >= 1 && coord <= n, ErrorCode::Index, "coordinate out of range");
    return {word_t{1} << bit_of_coordinate(n, coord), n};
  }

  /// Parses a fixed-width binary literal, or a hex literal "0x..." which
  /// needs the width supplied explicitly.
  static BinaryWord parse(std::string_view text, std::optional<int> width = std::nullopt) {
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
      require(width.has_value(), ErrorCode::Parse, "hex word literal needs an explicit width");
      word_t value = 0;
      for (char ch : text.substr(2)) {
        int digit = -1;
        if (ch >= '0' && ch <= '9') digit = ch - '0';
        else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
        require(digit >= 0, ErrorCode::Parse, "bad hex digit in '" + std::string(text) + "'");
        require((value >> 60) == 0, ErrorCode::Parse, "hex literal too long");
        value = (value << 4) | static_cast<word_t>(digit);
      }
      require((value & ~low_mask(*width)) == 0, ErrorCode::Parse, "hex literal exceeds width");
      return {value, *width};
    }
    require(!text.empty() && text.size() <= kMaxLength, ErrorCode::Parse,
            "binary word literal must have 1..64 characters");
    require(!width || static_cast<int>(text.size()) == *width, ErrorCode::Parse,
            "word '" + std::string(text) + "' does not have length " + std::to_string(width.value_or(0)));
    word_t value = 0;
    for (char ch : text) {
      require(ch == '0' || ch == '1', ErrorCode::Parse, "bad binary digit in '" + std::string(text) + "'");
      value = (value << 1) | static_cast<word_t>(ch - '0');
    }
    return {value, static_cast<int>(text.size())};
  }

  [[nodiscard]] constexpr word_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr int length() const noexcept { return length_; }
  [[nodiscard]] constexpr int weight() const noexcept { return popcount(bits_); }
  [[nodiscard]] constexpr int parity() const noexcept { return parity_of(bits_); }

  [[nodiscard]] constexpr int coordinate(int coord) const noexcept {
    return static_cast<int>((bits_ >> bit_of_coordinate(length_, coord)) & 1U);
  }

  [[nodiscard]] std::string to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int c = 1; c <= length_; ++c) s[static_cast<std::size_t>(c - 1)] = coordinate(c) ? '1' : '0';
    return s;
  }

  friend BinaryWord operator^(BinaryWord lhs, BinaryWord rhs) {
    require(lhs.length_ == rhs.length_, ErrorCode::Shape, "adding words of different lengths");
    return {lhs.bits_ ^ rhs.bits_, lhs.length_};
  }
  friend BinaryWord operator+(BinaryWord lhs, BinaryWord rhs) { return lhs ^ rhs; }

  friend constexpr bool operator==(BinaryWord, BinaryWord) = default;
  friend constexpr auto operator<=>(BinaryWord, BinaryWord) = default;

 private:
  word_t bits_ = 0;
  int length_ = 1;
};

[[nodiscard]] inline int distance(BinaryWord u, BinaryWord v) {
  require(u.length() == v.length(), ErrorCode::Shape, "distance between words of different lengths");
  return popcount(u.bits() ^ v.bits());
}

/// Renders the low `n` bits of `w` as a binary literal.
[[nodiscard]] inline std::string format_word(word_t w, int n) { return BinaryWord(w & low_mask(n), n).to_string(); }

}  // namespace hcube
