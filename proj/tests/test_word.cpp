#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "peano/letter.hpp"
#include "peano/word.hpp"
#include "peano/word_io.hpp"

using namespace peano;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t len) {
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(Letter(static_cast<int>(rng() % 4) + 1));
  }
  return w;
}

Word drained(LetterStream s) {
  Word w;
  w.reserve(s.size());
  while (s.has_next()) w.push_back(s.next());
  return w;
}

}  // namespace

TEST_CASE("letters validate their value") {
  CHECK(Letter(1).value() == 1);
  CHECK(Letter(4).digit() == '4');
  CHECK_THROWS_AS(Letter(0), std::invalid_argument);
  CHECK_THROWS_AS(Letter(5), std::invalid_argument);
  CHECK_THROWS_AS(Letter::from_digit('0'), std::invalid_argument);
  CHECK_THROWS_AS(word_from_string("1231x"), std::invalid_argument);
}

TEST_CASE("relabels are mutually inverse cyclic shifts") {
  CHECK(relabel(Letter(1), Transform::phi1) == Letter(4));
  CHECK(relabel(Letter(2), Transform::phi1) == Letter(1));
  CHECK(relabel(Letter(3), Transform::phi1) == Letter(2));
  CHECK(relabel(Letter(4), Transform::phi1) == Letter(3));
  CHECK(relabel(Letter(1), Transform::phi2) == Letter(2));
  CHECK(relabel(Letter(4), Transform::phi2) == Letter(1));
  for (int v = 1; v <= 4; ++v) {
    CHECK(relabel(relabel(Letter(v), Transform::phi1), Transform::phi2) == Letter(v));
  }
}

TEST_CASE("apply_transform reverses and relabels") {
  CHECK(word_to_string(apply_transform(word_from_string("123"), Transform::phi1)) == "214");
  CHECK(word_to_string(apply_transform(word_from_string("123"), Transform::phi2)) == "432");
  CHECK(word_to_string(apply_transform(word_from_string("1"), Transform::phi1)) == "4");

  // phi2 after phi1 is the identity on every word.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, rng() % 15);
    const Word round = apply_transform(apply_transform(w, Transform::phi1), Transform::phi2);
    REQUIRE(round.size() == w.size());
    REQUIRE(round == w);
  }
}

TEST_CASE("word_length") {
  CHECK(word_length(1) == 3);
  CHECK(word_length(2) == 15);
  CHECK(word_length(3) == 63);
  CHECK(word_length(31) == (std::uint64_t{1} << 62) - 1);
  CHECK_THROWS_AS(word_length(0), std::out_of_range);
  CHECK_THROWS_AS(word_length(32), std::out_of_range);
}

TEST_CASE("build_word matches the published iterations") {
  CHECK(word_to_string(build_word(1)) == "123");
  CHECK(word_to_string(build_word(2)) == "214112321233432");
  CHECK(build_word(3).size() == 63);
}

TEST_CASE("build_word above the cap advises streaming") {
  CHECK_THROWS_WITH_AS(build_word(5, 4), doctest::Contains("LetterStream"),
                       std::length_error);
  CHECK_THROWS_AS(build_word(0), std::out_of_range);
}

TEST_CASE("the recursive decomposition holds for every built word") {
  for (int n = 2; n <= 10; ++n) {
    const Word prev = build_word(n - 1);
    Word expected = apply_transform(prev, Transform::phi1);
    expected.push_back(Letter(1));
    expected.insert(expected.end(), prev.begin(), prev.end());
    expected.push_back(Letter(2));
    expected.insert(expected.end(), prev.begin(), prev.end());
    expected.push_back(Letter(3));
    const Word tail = apply_transform(prev, Transform::phi2);
    expected.insert(expected.end(), tail.begin(), tail.end());
    REQUIRE(build_word(n) == expected);
  }
}

TEST_CASE("word shape invariants: length and boundary letters") {
  for (int n = 1; n <= 9; ++n) {
    const PeanoWord w(n);
    REQUIRE(w.size() == word_length(n));
    CHECK(w.letters().front() == Letter(n % 2 == 1 ? 1 : 2));
    CHECK(w.letters().back() == Letter(n % 2 == 1 ? 3 : 2));
  }
}

TEST_CASE("letter_at spot values") {
  CHECK(letter_at(2, 0) == Letter(2));
  CHECK(letter_at(2, 7) == Letter(2));
  CHECK(letter_at(1, 2) == Letter(3));
  CHECK_THROWS_AS(letter_at(1, 3), std::out_of_range);
  CHECK_THROWS_AS(letter_at(0, 0), std::out_of_range);
  CHECK_THROWS_AS(letter_at(32, 0), std::out_of_range);
}

TEST_CASE("letter_at equals the built word everywhere") {
  for (int n = 1; n <= 6; ++n) {
    const Word w = build_word(n);
    for (std::uint64_t i = 0; i < w.size(); ++i) {
      REQUIRE(letter_at(n, i) == w[i]);
    }
  }
}

TEST_CASE("letter_at reaches the deep end by parity") {
  CHECK(letter_at(30, 0) == Letter(2));
  CHECK(letter_at(30, word_length(30) - 1) == Letter(2));
  CHECK(letter_at(31, 0) == Letter(1));
  CHECK(letter_at(31, word_length(31) - 1) == Letter(3));
}

TEST_CASE("stream yields the word front to back") {
  {
    LetterStream s(2);
    CHECK(s.next() == Letter(2));
    CHECK(s.next() == Letter(1));
    CHECK(s.next() == Letter(4));
    CHECK(s.next() == Letter(1));
    CHECK(s.next() == Letter(1));
  }
  CHECK(word_to_string(drained(LetterStream(1))) == "123");
  CHECK(drained(LetterStream(3)).size() == 63);
  for (int n = 1; n <= 7; ++n) {
    REQUIRE(drained(LetterStream(n)) == build_word(n));
  }
  LetterStream done(1);
  done.next();
  done.next();
  done.next();
  CHECK(!done.has_next());
  CHECK_THROWS_AS(done.next(), std::out_of_range);
}

TEST_CASE("text round trip") {
  for (int n = 1; n <= 4; ++n) {
    const Word w = build_word(n);
    std::stringstream ss;
    write_text(ss, w);
    CHECK(read_text(ss) == w);
  }
  std::stringstream empty;
  CHECK_THROWS_AS(read_text(empty), std::runtime_error);
}

TEST_CASE("packed layout is bit-exact") {
  std::stringstream ss;
  write_packed(ss, build_word(2), 2);
  const std::string bytes = ss.str();
  REQUIRE(bytes.size() == 8 + 1 + 8 + 4);
  CHECK(bytes.substr(0, 8) == "PEANOW01");
  CHECK(static_cast<unsigned char>(bytes[8]) == 2);
  CHECK(static_cast<unsigned char>(bytes[9]) == 15);  // length, little-endian
  for (int i = 10; i < 17; ++i) CHECK(bytes[i] == 0);
  // 214112321233432 at 2 bits per letter, little-endian within bytes
  CHECK(static_cast<unsigned char>(bytes[17]) == 0x31);
  CHECK(static_cast<unsigned char>(bytes[18]) == 0x64);
  CHECK(static_cast<unsigned char>(bytes[19]) == 0xA4);
  CHECK(static_cast<unsigned char>(bytes[20]) == 0x1B);
}

TEST_CASE("packed round trip for assorted lengths") {
  std::mt19937_64 rng(11);
  for (std::size_t len : {std::size_t{0}, std::size_t{1}, std::size_t{2},
                          std::size_t{3}, std::size_t{4}, std::size_t{5},
                          std::size_t{63}, std::size_t{100}}) {
    const Word w = random_word(rng, len);
    std::stringstream ss;
    write_packed(ss, w, 7);
    const PackedWord back = read_packed(ss);
    CHECK(back.n == 7);
    REQUIRE(back.letters == w);
  }
  std::stringstream bad("PEANOXXX");
  CHECK_THROWS_AS(read_packed(bad), std::runtime_error);
}

TEST_CASE("streaming writers agree with the materialized writers") {
  for (int n = 1; n <= 5; ++n) {
    std::stringstream a, b;
    LetterStream s(n);
    write_text_stream(a, s);
    write_text(b, build_word(n));
    REQUIRE(a.str() == b.str());

    std::stringstream c, d;
    LetterStream s2(n);
    write_packed_stream(c, s2, n);
    write_packed(d, build_word(n), n);
    REQUIRE(c.str() == d.str());
  }
}
