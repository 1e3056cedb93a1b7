#include "peano/pattern.hpp"

namespace peano {

namespace {

// Guards against runaway exponents; far beyond anything the counters accept.
constexpr std::size_t kMaxPatternLetters = 1'000'000;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
};

// One atom: a letter, optionally "^number". Appends the expansion to out.
// had_exponent reports whether the atom carried "^".
Letter parse_atom(Cursor& c, std::size_t& exponent, bool& had_exponent) {
  if (c.done()) c.fail("expected a pattern letter");
  const char ch = c.peek();
  if (ch < '1' || ch > '4') {
    c.fail(std::string("expected a pattern letter '1'..'4', got '") + ch + "'");
  }
  const Letter letter(ch - '0');
  ++c.pos;
  had_exponent = false;
  exponent = 1;
  if (!c.done() && c.peek() == '^') {
    const std::size_t caret = c.pos;
    ++c.pos;
    if (c.done() || c.peek() < '0' || c.peek() > '9') {
      throw ParseError("'^' must be followed by a decimal number", caret);
    }
    std::size_t value = 0;
    while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
      value = value * 10 + static_cast<std::size_t>(c.peek() - '0');
      if (value > kMaxPatternLetters) {
        throw ParseError("exponent too large", caret);
      }
      ++c.pos;
    }
    had_exponent = true;
    exponent = value;
  }
  return letter;
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  Cursor c{text};
  Pattern p;

  if (c.done()) c.fail("empty pattern");
  if (c.peek() == '[') {
    p.left_anchor = true;
    ++c.pos;
  } else if (c.peek() == '(') {
    ++c.pos;
  }

  std::size_t total_letters = 0;
  bool first_block = true;
  for (;;) {
    if (!first_block) {
      if (c.done() || c.peek() != '-') break;
      ++c.pos;
    }
    first_block = false;

    // block := atom { atom }
    std::vector<Letter> letters;
    bool block_has_exponent = false;
    std::size_t exponent = 1;
    Letter exp_letter(1);
    std::size_t atoms = 0;
    const std::size_t block_start = c.pos;
    while (!c.done() && c.peek() >= '1' && c.peek() <= '4') {
      std::size_t e;
      bool had;
      const Letter l = parse_atom(c, e, had);
      ++atoms;
      if (had) {
        block_has_exponent = true;
        exponent = e;
        exp_letter = l;
      } else {
        letters.push_back(l);
      }
      if (block_has_exponent && atoms > 1) {
        throw ParseError("'^' is only legal on a letter that is alone in its block",
                         block_start);
      }
    }
    if (atoms == 0) {
      if (c.done()) c.fail("expected a block after '-'");
      c.fail(std::string("expected a pattern letter, got '") + c.peek() + "'");
    }

    if (block_has_exponent) {
      // y^l: l dash-separated singleton blocks; y^0 vanishes.
      total_letters += exponent;
      if (total_letters > kMaxPatternLetters) {
        throw ParseError("pattern too long after exponent expansion", block_start);
      }
      for (std::size_t i = 0; i < exponent; ++i) {
        p.blocks.push_back(Block{{exp_letter}});
      }
    } else {
      total_letters += letters.size();
      if (total_letters > kMaxPatternLetters) {
        throw ParseError("pattern too long", block_start);
      }
      p.blocks.push_back(Block{std::move(letters)});
    }
  }

  if (!c.done() && c.peek() == ']') {
    p.right_anchor = true;
    ++c.pos;
  } else if (!c.done() && c.peek() == ')') {
    ++c.pos;
  }
  if (!c.done()) {
    c.fail(std::string("unexpected character '") + c.peek() + "'");
  }
  if (p.blocks.empty()) {
    throw ParseError("pattern has no letters (every exponent collapsed)", 0);
  }
  return p;
}

std::string format_pattern(const Pattern& p) {
  std::string s;
  if (p.left_anchor) s.push_back('[');
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i > 0) s.push_back('-');
    for (Letter l : p.blocks[i].letters) s.push_back(l.digit());
  }
  if (p.right_anchor) s.push_back(']');
  return s;
}

}  // namespace peano
