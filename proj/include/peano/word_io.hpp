#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "peano/letter.hpp"
#include "peano/word.hpp"

namespace peano {

// Text form: one line of ASCII digits '1'..'4' plus a trailing newline.
//
// Packed form: 8-byte magic "PEANOW01", one byte iteration index, an 8-byte
// little-endian letter count, then the letters at 2 bits each (value - 1),
// little-endian within each byte (letter i sits in byte i/4 at bit 2*(i%4)).
inline constexpr std::array<char, 8> kPackedMagic = {'P', 'E', 'A', 'N',
                                                     'O', 'W', '0', '1'};

void write_text(std::ostream& os, const Word& w);
Word read_text(std::istream& is);

void write_packed(std::ostream& os, const Word& w, int n);

struct PackedWord {
  int n;
  Word letters;
};
PackedWord read_packed(std::istream& is);

// Streaming writers; the word is never materialized.
void write_text_stream(std::ostream& os, LetterStream& s);
void write_packed_stream(std::ostream& os, LetterStream& s, int n);

// Reads either format, sniffing the magic. Throws std::runtime_error on a
// malformed file.
Word read_word_file(const std::string& path);

}  // namespace peano
