#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace peano {

// Movement alphabet of the curve iterations: 1 = up, 2 = right, 3 = down,
// 4 = left. No other values are representable.
class Letter {
 public:
  explicit constexpr Letter(int value)
      : v_(static_cast<std::uint8_t>(value)) {
    if (value < 1 || value > 4) {
      throw std::invalid_argument("letter value must be in 1..4, got " +
                                  std::to_string(value));
    }
  }

  static constexpr Letter from_digit(char c) {
    if (c < '1' || c > '4') {
      throw std::invalid_argument(std::string("letter digit must be '1'..'4', got '") +
                                  c + "'");
    }
    return Letter(c - '0');
  }

  constexpr int value() const { return v_; }
  constexpr char digit() const { return static_cast<char>('0' + v_); }

  friend constexpr auto operator<=>(Letter a, Letter b) = default;

 private:
  std::uint8_t v_;
};

static_assert(sizeof(Letter) == 1 && std::is_trivially_copyable_v<Letter>);

inline std::ostream& operator<<(std::ostream& os, Letter l) {
  return os << l.digit();
}

using Word = std::vector<Letter>;

Word word_from_string(std::string_view digits);
std::string word_to_string(const Word& w);

// The 1..4 values of a word viewed as bytes, no copy.
std::span<const std::uint8_t> raw_values(const Word& w);

// The reverse-and-relabel transforms. phi1 relabels by the cyclic decrement
// 1->4, 2->1, 3->2, 4->3; phi2 by the cyclic increment 1->2, 2->3, 3->4,
// 4->1. The relabels are mutually inverse, so phi2(phi1(w)) == w.
enum class Transform { phi1, phi2 };

constexpr Letter relabel(Letter l, Transform t) {
  const int shift = (t == Transform::phi1) ? 3 : 1;
  return Letter((l.value() - 1 + shift) % 4 + 1);
}

// reverse(w), then relabel every letter. Accepts any word, not only the
// curve iterations.
Word apply_transform(const Word& w, Transform t);

}  // namespace peano
