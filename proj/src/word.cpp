#include "peano/word.hpp"

#include <stdexcept>
#include <string>

namespace peano {

namespace {

Letter shifted(int base, int shift) {
  return Letter((base - 1 + shift) % 4 + 1);
}

}  // namespace

std::uint64_t word_length(int n) {
  if (n < 1 || n > kMaxIteration) {
    throw std::out_of_range("iteration index must be in 1..31, got " +
                            std::to_string(n));
  }
  return (std::uint64_t{1} << (2 * n)) - 1;
}

Word build_word(int n, int cap) {
  if (n < 1) {
    throw std::out_of_range("iteration index must be >= 1, got " +
                            std::to_string(n));
  }
  if (cap > kMaxIteration) cap = kMaxIteration;
  if (n > cap) {
    throw std::length_error(
        "X_" + std::to_string(n) + " exceeds the build cap of " +
        std::to_string(cap) + "; use LetterStream or letter_at instead");
  }
  Word w = word_from_string("123");
  for (int k = 2; k <= n; ++k) {
    const Word prev = std::move(w);
    const Word head = apply_transform(prev, Transform::phi1);
    const Word tail = apply_transform(prev, Transform::phi2);
    w = Word();
    w.reserve(4 * prev.size() + 3);
    w.insert(w.end(), head.begin(), head.end());
    w.push_back(Letter(1));
    w.insert(w.end(), prev.begin(), prev.end());
    w.push_back(Letter(2));
    w.insert(w.end(), prev.begin(), prev.end());
    w.push_back(Letter(3));
    w.insert(w.end(), tail.begin(), tail.end());
  }
  return w;
}

Letter letter_at(int n, std::uint64_t i) {
  const std::uint64_t len = word_length(n);
  if (i >= len) {
    throw std::out_of_range("position " + std::to_string(i) +
                            " out of range for |X_" + std::to_string(n) +
                            "| = " + std::to_string(len));
  }
  bool reversed = false;
  int shift = 0;
  for (int level = n; level > 1; --level) {
    const std::uint64_t sub = word_length(level - 1);
    const std::uint64_t pos = reversed ? word_length(level) - 1 - i : i;
    reversed = false;
    if (pos < sub) {  // phi1(X_{level-1})
      i = pos;
      reversed = true;
      shift = (shift + 3) & 3;
    } else if (pos == sub) {
      return shifted(1, shift);
    } else if (pos < 2 * sub + 1) {
      i = pos - (sub + 1);
    } else if (pos == 2 * sub + 1) {
      return shifted(2, shift);
    } else if (pos < 3 * sub + 2) {
      i = pos - (2 * sub + 2);
    } else if (pos == 3 * sub + 2) {
      return shifted(3, shift);
    } else {  // phi2(X_{level-1})
      i = pos - (3 * sub + 3);
      reversed = true;
      shift = (shift + 1) & 3;
    }
  }
  const std::uint64_t pos = reversed ? 2 - i : i;
  return shifted(static_cast<int>(pos) + 1, shift);
}

LetterStream::LetterStream(int n) : total_(word_length(n)) {
  stack_.reserve(static_cast<std::size_t>(n));
  stack_.push_back(Frame{static_cast<std::uint8_t>(n), 0, 0, false});
}

Letter LetterStream::next() {
  if (!has_next()) throw std::out_of_range("letter stream exhausted");
  for (;;) {
    Frame& f = stack_.back();
    if (f.level == 1) {
      const int idx = f.seg++;
      const bool rev = f.reversed;
      const int shift = f.shift;
      if (f.seg == 3) stack_.pop_back();
      ++produced_;
      return shifted((rev ? 2 - idx : idx) + 1, shift);
    }
    if (f.seg == 7) {
      stack_.pop_back();
      continue;
    }
    const int j = f.seg++;
    const int real_j = f.reversed ? 6 - j : j;
    const std::uint8_t level = f.level;
    const std::uint8_t shift = f.shift;
    const bool rev = f.reversed;
    switch (real_j) {
      case 1:
        ++produced_;
        return shifted(1, shift);
      case 3:
        ++produced_;
        return shifted(2, shift);
      case 5:
        ++produced_;
        return shifted(3, shift);
      case 0:  // phi1(X_{level-1})
        stack_.push_back(Frame{static_cast<std::uint8_t>(level - 1), 0,
                               static_cast<std::uint8_t>((shift + 3) & 3),
                               !rev});
        break;
      case 6:  // phi2(X_{level-1})
        stack_.push_back(Frame{static_cast<std::uint8_t>(level - 1), 0,
                               static_cast<std::uint8_t>((shift + 1) & 3),
                               !rev});
        break;
      default:  // the two plain copies of X_{level-1}
        stack_.push_back(
            Frame{static_cast<std::uint8_t>(level - 1), 0, shift, rev});
        break;
    }
  }
}

}  // namespace peano
