#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "robust1d/smoothing.hpp"

namespace robust1d {

enum class PgmFormat { Plain /* P2 */, Raw /* P5 */ };

/// Netpbm grayscale image at its stored bit depth.
struct PgmImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint16_t maxval = 255;
  PgmFormat format = PgmFormat::Raw;
  std::vector<std::uint16_t> samples;  // row-major, each <= maxval

  friend bool operator==(const PgmImage&, const PgmImage&) = default;
};

/// Reads a P2 or P5 image (maxval 1..65535, 16-bit raw samples big-endian).
/// Throws Error(Parse) on malformed or truncated input.
PgmImage read_pgm(std::istream& in);

void write_pgm(std::ostream& out, const PgmImage& img);

/// Intensity = sample / maxval.
GrayImage to_gray(const PgmImage& img);

/// Quantizes intensity * maxval with round-half-away-from-zero.
PgmImage from_gray(const GrayImage& img, std::uint16_t maxval, PgmFormat format);

}  // namespace robust1d
