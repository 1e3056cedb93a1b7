#pragma once

#include <cstdint>
#include <vector>

#include "peano/letter.hpp"

namespace peano {

// Largest iteration whose positions fit an unsigned 64-bit integer
// (|X_31| = 4^31 - 1).
inline constexpr int kMaxIteration = 31;

// Largest iteration materialized in memory by default (4^12 - 1 letters,
// about 16.7M). letter_at and LetterStream keep working above it.
inline constexpr int kDefaultBuildCap = 12;

// |X_n| = 4^n - 1. Throws std::out_of_range unless 1 <= n <= 31.
std::uint64_t word_length(int n);

// Materializes X_n; X_1 = 123 and
// X_n = phi1(X_{n-1}) 1 X_{n-1} 2 X_{n-1} 3 phi2(X_{n-1}).
// Throws std::length_error above the cap.
Word build_word(int n, int cap = kDefaultBuildCap);

// X_n together with its iteration index.
//
// Invariants (checked in tests): |X_n| = 4^n - 1; the first letter is 1 for
// odd n and 2 for even n; the last letter is 3 for odd n and 2 for even n.
class PeanoWord {
 public:
  explicit PeanoWord(int n, int cap = kDefaultBuildCap)
      : n_(n), letters_(build_word(n, cap)) {}

  int iteration() const { return n_; }
  const Word& letters() const { return letters_; }
  std::uint64_t size() const { return letters_.size(); }

 private:
  int n_;
  Word letters_;
};

// X_n[i] without materializing the word. Descends the decomposition in O(n)
// carrying a pending (reversal parity, cyclic relabel shift) pair; the pair
// is closed under composition because the phi relabels are cyclic shifts.
Letter letter_at(int n, std::uint64_t i);

// Front-to-back cursor over X_n driven by an explicit descent stack of at
// most n frames; the word is never materialized.
class LetterStream {
 public:
  explicit LetterStream(int n);

  std::uint64_t size() const { return total_; }
  bool has_next() const { return produced_ < total_; }
  Letter next();

 private:
  struct Frame {
    std::uint8_t level;
    std::uint8_t seg;    // next segment (0..6), or next base letter (0..2)
    std::uint8_t shift;  // pending cyclic relabel, applied on emit
    bool reversed;       // pending reversal
  };
  std::vector<Frame> stack_;
  std::uint64_t total_;
  std::uint64_t produced_ = 0;
};

}  // namespace peano
