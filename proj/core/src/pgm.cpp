#include "voroto/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace voroto {

void write_pgm(const std::string& path, int width, int height,
               const std::vector<double>& values) {
  if (static_cast<std::size_t>(width) * height != values.size())
    throw std::invalid_argument("pgm: dimensions do not match value count");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("pgm: cannot open " + path);
  out << "P2\n" << width << ' ' << height << "\n255\n";
  for (int row = height - 1; row >= 0; --row) {
    for (int col = 0; col < width; ++col) {
      const double v = std::clamp(values[static_cast<std::size_t>(row) * width + col], 0.0, 1.0);
      out << static_cast<int>(std::lround(255.0 * (1.0 - v)));
      out << (col + 1 == width ? '\n' : ' ');
    }
  }
  if (!out) throw std::runtime_error("pgm: write failed for " + path);
}

}  // namespace voroto
