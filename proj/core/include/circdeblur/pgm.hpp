#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "circdeblur/types.hpp"

namespace circdeblur {

/// 8-bit grayscale raster, row-major.
struct RawImage8 {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> pixels;

  friend bool operator==(const RawImage8&, const RawImage8&) = default;
};

enum class PgmFormat { kAscii /* P2 */, kBinary /* P5 */ };

/// Parses a P2 or P5 graymap with maxval <= 255. Header comments are allowed.
/// Files with maxval below 255 are rescaled to the full 0..255 range.
/// Throws ParseError carrying the byte offset of the problem.
RawImage8 read_pgm(std::string_view bytes);

/// Canonical encoding: "P5\n<cols> <rows>\n255\n" followed by the raster
/// (P2 writes decimal rows instead).
std::string write_pgm(const RawImage8& img, PgmFormat format);

/// pixel / 255.
Image to_unit(const RawImage8& img);
/// Clamp to [0, 1], scale by 255, round half away from zero.
RawImage8 from_unit(const Image& img);

/// Whole-file helpers. Throw Error on I/O failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

RawImage8 load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const RawImage8& img, PgmFormat format = PgmFormat::kBinary);

}  // namespace circdeblur
