#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "peano/letter.hpp"

namespace peano {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A maximal dash-free run of pattern letters; its letters must be matched
// at consecutive word positions.
struct Block {
  std::vector<Letter> letters;
  bool operator==(const Block&) const = default;
};

// Parsed pattern. "[" anchors the first pattern letter to the word's first
// position and "]" the last pattern letter to the last position; dashes
// separate blocks. Exponents are expanded at parse time, so the AST never
// carries them.
struct Pattern {
  bool left_anchor = false;
  bool right_anchor = false;
  std::vector<Block> blocks;

  std::size_t letter_count() const {
    std::size_t r = 0;
    for (const Block& b : blocks) r += b.letters.size();
    return r;
  }
  bool operator==(const Pattern&) const = default;
};

// Grammar:
//   pattern := [ "[" | "(" ] block { "-" block } [ "]" | ")" ]
//   block   := atom { atom }
//   atom    := letter [ "^" number ]
//   letter  := "1" | "2" | "3" | "4"
//   number  := decimal digits, value >= 0
// "(" and ")" are plain delimiters; only "[" and "]" anchor. "y^l" expands
// to l dash-separated singleton blocks ("y^0" to nothing, collapsing the
// dashes around it), and "^" is legal only when its letter is the sole atom
// of its block. A pattern whose every letter collapses away is an error.
Pattern parse_pattern(std::string_view text);

// Canonical form: "[" iff anchored left, blocks joined by "-", letters
// concatenated, "]" iff anchored right; exponents are never printed.
// parse_pattern(format_pattern(p)) == p.
std::string format_pattern(const Pattern& p);

}  // namespace peano
