#include "peano/render.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "peano/word.hpp"

namespace peano {

std::string render_svg(int n) {
  if (n < 1 || n > 10) {
    throw std::out_of_range("render supports 1 <= n <= 10, got " +
                            std::to_string(n));
  }

  std::int64_t x = 0, y = 0;
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  std::string points;
  points.reserve(static_cast<std::size_t>(word_length(n)) * 6);
  auto emit = [&points](std::int64_t px, std::int64_t py) {
    if (!points.empty()) points.push_back(' ');
    points += std::to_string(px);
    points.push_back(',');
    points += std::to_string(-py);  // y flipped for screen coordinates
  };

  emit(x, y);
  LetterStream s(n);
  while (s.has_next()) {
    switch (s.next().value()) {
      case 1:
        ++y;
        break;
      case 2:
        ++x;
        break;
      case 3:
        --y;
        break;
      case 4:
        --x;
        break;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
    emit(x, y);
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << (min_x - 1) << ' ' << (-max_y - 1) << ' ' << (max_x - min_x + 2)
      << ' ' << (max_y - min_y + 2) << "\">\n"
      << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.1\" "
         "stroke-linejoin=\"round\" points=\""
      << points << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace peano
