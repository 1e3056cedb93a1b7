#include "peano/letter.hpp"

namespace peano {

Word word_from_string(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '1' || c > '4') {
      throw std::invalid_argument("bad letter '" + std::string(1, c) +
                                  "' at offset " + std::to_string(i));
    }
    w.push_back(Letter(c - '0'));
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(l.digit());
  return s;
}

std::span<const std::uint8_t> raw_values(const Word& w) {
  // Letter is a single byte holding the 1..4 value; byte-typed access is
  // always permitted.
  return {reinterpret_cast<const std::uint8_t*>(w.data()), w.size()};
}

Word apply_transform(const Word& w, Transform t) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(relabel(*it, t));
  }
  return out;
}

}  // namespace peano
