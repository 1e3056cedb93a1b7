#include "peano/word_io.hpp"

#include <cstring>
#include <sstream>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace peano {

namespace {

void put_u64_le(std::ostream& os, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(buf, 8);
}

std::uint64_t get_u64_le(std::istream& is) {
  char buf[8];
  is.read(buf, 8);
  if (!is) throw std::runtime_error("packed word: truncated length field");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
  }
  return v;
}

// Accumulates 2-bit codes into bytes, little-endian within the byte.
class BitPacker {
 public:
  explicit BitPacker(std::ostream& os) : os_(os) {}
  void add(Letter l) {
    cur_ |= static_cast<unsigned>(l.value() - 1) << bits_;
    bits_ += 2;
    if (bits_ == 8) flush_byte();
  }
  void finish() {
    if (bits_ > 0) flush_byte();
  }

 private:
  void flush_byte() {
    os_.put(static_cast<char>(cur_));
    cur_ = 0;
    bits_ = 0;
  }
  std::ostream& os_;
  unsigned cur_ = 0;
  int bits_ = 0;
};

void write_packed_header(std::ostream& os, std::uint64_t count, int n) {
  if (n < 0 || n > 255) throw std::out_of_range("packed word: n must fit one byte");
  os.write(kPackedMagic.data(), kPackedMagic.size());
  os.put(static_cast<char>(n));
  put_u64_le(os, count);
}

}  // namespace

void write_text(std::ostream& os, const Word& w) {
  os << word_to_string(w) << '\n';
}

Word read_text(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("text word: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return word_from_string(line);
}

void write_packed(std::ostream& os, const Word& w, int n) {
  write_packed_header(os, w.size(), n);
  BitPacker packer(os);
  for (Letter l : w) packer.add(l);
  packer.finish();
}

PackedWord read_packed(std::istream& is) {
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kPackedMagic.data(), 8) != 0) {
    throw std::runtime_error("packed word: bad magic");
  }
  const int n = static_cast<unsigned char>(is.get());
  const std::uint64_t count = get_u64_le(is);
  PackedWord out{n, Word{}};
  out.letters.reserve(count);
  int bits = 8;
  unsigned cur = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (bits == 8) {
      const int c = is.get();
      if (c == std::char_traits<char>::eof()) {
        throw std::runtime_error("packed word: truncated payload");
      }
      cur = static_cast<unsigned>(c);
      bits = 0;
    }
    out.letters.push_back(Letter(static_cast<int>((cur >> bits) & 3u) + 1));
    bits += 2;
  }
  return out;
}

void write_text_stream(std::ostream& os, LetterStream& s) {
  std::string buf;
  buf.reserve(1 << 16);
  while (s.has_next()) {
    buf.push_back(s.next().digit());
    if (buf.size() == buf.capacity()) {
      os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  buf.push_back('\n');
  os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_packed_stream(std::ostream& os, LetterStream& s, int n) {
  write_packed_header(os, s.size(), n);
  BitPacker packer(os);
  while (s.has_next()) packer.add(s.next());
  packer.finish();
}

Word read_word_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  // Slurp first so that pipes and other unseekable sources work too.
  std::ostringstream buf;
  buf << f.rdbuf();
  std::istringstream contents(buf.str());
  const std::string& data = buf.str();
  if (data.size() >= 8 &&
      std::memcmp(data.data(), kPackedMagic.data(), 8) == 0) {
    return read_packed(contents).letters;
  }
  return read_text(contents);
}

}  // namespace peano
