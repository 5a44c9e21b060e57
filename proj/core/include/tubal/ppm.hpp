#pragma once

#include <string>

#include "tubal/tensor3.hpp"

namespace tubal {

// Reads a P3 or P6 PPM image into a height x width x 3 tensor with the color
// channels as frontal slices, values scaled to [0, 1].
Tensor3 read_ppm(const std::string& path);

// Writes a height x width x 3 tensor as a P3 PPM; values are clamped to
// [0, 1] and quantized to maxval 255.
void write_ppm(const std::string& path, const Tensor3& image);

}  // namespace tubal
