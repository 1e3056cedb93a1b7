#pragma once

#include <string>

namespace peano {

// Draws X_n as a single polyline: start at the origin, one unit step per
// letter (1 = up, 2 = right, 3 = down, 4 = left), y flipped for screen
// coordinates, viewport padded to the path's bounding box. 1 <= n <= 10.
std::string render_svg(int n);

}  // namespace peano
