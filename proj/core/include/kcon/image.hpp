#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kcon/errors.hpp"

namespace kcon {

// Row-major grid of real intensities. Loaded images satisfy height,width >= 2
// and all-finite pixels; validate_image() re-checks those invariants at entry
// points. Wavelet coefficient planes reuse the struct without the size floor.
struct Image {
  int height = 0;
  int width = 0;
  std::vector<double> pixels;

  double& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
  double at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }
  std::size_t size() const { return pixels.size(); }
};

Image make_image(int height, int width, double fill = 0.0);

// Throws InvalidArgumentError / NonFiniteError when the invariants fail.
void validate_image(const Image& img);

// Binary PGM (P5), 8-bit or 16-bit big-endian samples, scaled to [0,1].
Image load_pgm(const std::string& path);

// 8-bit P5 output; values clamped to [0,1] and quantized to round(v*255).
void save_pgm(const Image& img, const std::string& path);

// Headerless little-endian float32 plane; dimensions are caller-supplied.
Image load_raw_f32(const std::string& path, int height, int width);
void save_raw_f32(const Image& img, const std::string& path);

// Zero-mean, unit-variance copy (population moments). Constant input is
// rejected with DegenerateImageError.
Image to_grayscale_normalized(const Image& img);

}  // namespace kcon
