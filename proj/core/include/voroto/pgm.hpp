#pragma once

#include <string>
#include <vector>

namespace voroto {

/// Writes a plain (P2) PGM, 0-255 grayscale, rows top to bottom. `values` is
/// row-major bottom-to-top in [0,1] (the field convention); 1 renders black
/// so material appears dark on white.
void write_pgm(const std::string& path, int width, int height,
               const std::vector<double>& values);

}  // namespace voroto
