#include <random>

#include "doctest.h"
#include "peano/pattern.hpp"

using namespace peano;

namespace {

Block block(std::initializer_list<int> vals) {
  Block b;
  for (int v : vals) b.letters.push_back(Letter(v));
  return b;
}

Pattern random_pattern(std::mt19937_64& rng) {
  Pattern p;
  p.left_anchor = rng() % 2 == 0;
  p.right_anchor = rng() % 2 == 0;
  const int nblocks = 1 + static_cast<int>(rng() % 3);
  for (int b = 0; b < nblocks; ++b) {
    Block blk;
    const int nletters = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nletters; ++i) {
      blk.letters.push_back(Letter(static_cast<int>(rng() % 4) + 1));
    }
    p.blocks.push_back(std::move(blk));
  }
  return p;
}

}  // namespace

TEST_CASE("parsing the notation") {
  SUBCASE("classical dashes") {
    const Pattern p = parse_pattern("2-31");
    CHECK(!p.left_anchor);
    CHECK(!p.right_anchor);
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0] == block({2}));
    CHECK(p.blocks[1] == block({3, 1}));
  }
  SUBCASE("exponents expand to dashed singletons") {
    const Pattern p = parse_pattern("[1-2^3)");
    CHECK(p.left_anchor);
    CHECK(!p.right_anchor);
    REQUIRE(p.blocks.size() == 4);
    CHECK(p.blocks[0] == block({1}));
    for (int i = 1; i <= 3; ++i) CHECK(p.blocks[i] == block({2}));
  }
  SUBCASE("zero exponents vanish") {
    const Pattern p = parse_pattern("[2-1^0-3]");
    CHECK(p.left_anchor);
    CHECK(p.right_anchor);
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0] == block({2}));
    CHECK(p.blocks[1] == block({3}));
  }
  SUBCASE("adjacent letters form one block") {
    const Pattern p = parse_pattern("12");
    CHECK(p.blocks.size() == 1);
    CHECK(p.blocks[0] == block({1, 2}));
  }
  SUBCASE("parens are plain delimiters") {
    CHECK(parse_pattern("(2-31)") == parse_pattern("2-31"));
    CHECK(parse_pattern("(1^2-1]").right_anchor);
    CHECK(!parse_pattern("(1^2-1]").left_anchor);
  }
  SUBCASE("multi-digit exponent") {
    CHECK(parse_pattern("2^11").blocks.size() == 11);
  }
}

TEST_CASE("exponent block counts") {
  for (unsigned ell : {1u, 2u, 5u, 9u}) {
    const Pattern p = parse_pattern("[1-2^" + std::to_string(ell) + ")");
    CHECK(p.blocks.size() == ell + 1);
  }
  CHECK(parse_pattern("[1-2^0)").blocks.size() == 1);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_pattern(""), ParseError);
  CHECK_THROWS_AS(parse_pattern("["), ParseError);
  CHECK_THROWS_AS(parse_pattern("[]"), ParseError);
  CHECK_THROWS_AS(parse_pattern("1-"), ParseError);
  CHECK_THROWS_AS(parse_pattern("-1"), ParseError);
  CHECK_THROWS_AS(parse_pattern("1--2"), ParseError);
  CHECK_THROWS_AS(parse_pattern("5"), ParseError);
  CHECK_THROWS_AS(parse_pattern("1^"), ParseError);
  CHECK_THROWS_AS(parse_pattern("1 2"), ParseError);
  CHECK_THROWS_AS(parse_pattern("1^0"), ParseError);
  CHECK_THROWS_AS(parse_pattern("1^0-2^0"), ParseError);
  CHECK_THROWS_AS(parse_pattern("12]3"), ParseError);

  // "^" inside a multi-letter block is never legal
  CHECK_THROWS_AS(parse_pattern("12^3"), ParseError);
  CHECK_THROWS_AS(parse_pattern("1^2 3"), ParseError);

  try {
    parse_pattern("2-5");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("a caret number is greedy") {
  // 2^31 is one atom repeated 31 times, not 2^3 followed by 1
  CHECK(parse_pattern("2^31").blocks.size() == 31);
}

TEST_CASE("canonical formatting") {
  Pattern p;
  p.blocks = {block({2}), block({3, 1})};
  CHECK(format_pattern(p) == "2-31");

  Pattern q;
  q.left_anchor = true;
  q.blocks = {block({1}), block({2}), block({2})};
  CHECK(format_pattern(q) == "[1-2-2");
  CHECK(format_pattern(parse_pattern("[1-2^2)")) == "[1-2-2");

  Pattern r;
  r.left_anchor = true;
  r.right_anchor = true;
  r.blocks = {block({1}), block({2}), block({3})};
  CHECK(format_pattern(r) == "[1-2-3]");
}

TEST_CASE("round trip: parse after format is the identity") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    const Pattern p = random_pattern(rng);
    const std::string s = format_pattern(p);
    REQUIRE(parse_pattern(s) == p);
    REQUIRE(format_pattern(parse_pattern(s)) == s);
  }
  for (const char* s : {"2-31", "[1-2^3)", "[2-1^0-3]", "12", "(1^2-1]",
                        "[12-3", "1-1-1", "[1]", "4^2-21]"}) {
    const Pattern p = parse_pattern(s);
    CHECK(parse_pattern(format_pattern(p)) == p);
  }
}
