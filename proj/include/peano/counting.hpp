#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "peano/letter.hpp"
#include "peano/pattern.hpp"
#include "peano/word.hpp"

namespace peano {

// Occurrence counts and binomials outgrow 64 bits quickly; everything is
// counted exactly.
using BigCount = boost::multiprecision::cpp_int;

// Occurrences of each letter value.
struct FrequencyVector {
  std::array<BigCount, 4> count;  // count[v-1] = occurrences of letter v

  const BigCount& of(int letter_value) const { return count.at(letter_value - 1); }
  BigCount total() const { return count[0] + count[1] + count[2] + count[3]; }
  std::string str() const;  // "(a,b,c,d)"
  bool operator==(const FrequencyVector&) const = default;
};

// Adjacent-pair statistics: rises w[i] < w[i+1], descents w[i] > w[i+1],
// equals w[i] == w[i+1]. rises + descents + equals == |w| - 1.
struct AdjacencyStats {
  BigCount rises;
  BigCount descents;
  BigCount equals;
  bool operator==(const AdjacencyStats&) const = default;
};

FrequencyVector letter_frequencies(const Word& w);
FrequencyVector letter_frequencies(LetterStream& s);  // drains the stream

AdjacencyStats adjacency_stats(const Word& w);
AdjacencyStats adjacency_stats(LetterStream& s);  // drains the stream

// Ground-truth occurrence count. An occurrence of a pattern with letters
// p_1..p_r is a strictly increasing index sequence i_1 < ... < i_r such
// that letters sharing a block sit at consecutive word positions, anchors
// pin i_1 = 0 / i_r = |w|-1, and p_a < p_b <=> w[i_a] < w[i_b],
// p_a = p_b <=> w[i_a] = w[i_b]. Counting is by index sequences.
//
// Implementation: every monotone assignment of the pattern's distinct
// letters onto distinct word values fixes a concrete block sequence; the
// assignments partition the occurrences, and each concrete sequence is
// counted by a prefix-sum dynamic program in O(blocks * |w|).
BigCount count_occurrences(const Word& w, const Pattern& p);

// Same semantics over an arbitrary byte sequence (the order/equality
// isomorphism does not care what the alphabet is).
BigCount count_occurrences(std::span<const std::uint8_t> w, const Pattern& p);

// Independent cross-check: enumerates index subsets directly. Requires
// |w| <= 14 and at most 5 pattern letters; throws std::length_error beyond.
BigCount count_occurrences_naive(const Word& w, const Pattern& p);
BigCount count_occurrences_naive(std::span<const std::uint8_t> w, const Pattern& p);

// The anchored run families:
//   tau1(x,y) = [x-y^l)    tau2(x,y) = (x^l-y]    tau3(x,y,z) = [x-y^l-z]
enum class TauKind { tau1, tau2, tau3 };

const char* tau_kind_name(TauKind kind);

// Counts an anchored run pattern from letter frequencies plus the word's
// first and last letters alone, so it stays exact for words of any length.
// For each letter value whose relations to the anchor letters match the
// pattern's, it contributes C(pool, l) where pool excludes the anchor
// positions holding that value. z is ignored unless kind is tau3.
// l = 0: tau1/tau2 give 1; tau3 gives 1 iff first/last relate as x/z.
BigCount count_anchored_run(const FrequencyVector& freqs, Letter first,
                            Letter last, TauKind kind, int x, int y, int z,
                            unsigned ell);

// Pattern shapes the anchored-run counter accepts. z is 0 unless tau3.
struct TauShape {
  TauKind kind;
  int x;
  int y;
  int z;
  unsigned ell;
};

// Recognizes [x-y^l), (x^l-y] and [x-y^l-z] in a parsed pattern (all blocks
// singletons, run letters uniform). Returns nullopt for anything else.
std::optional<TauShape> classify_tau(const Pattern& p);

}  // namespace peano
