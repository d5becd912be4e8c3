#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "circdeblur/types.hpp"

namespace circdeblur {

enum class PsfKind { kDefocus, kGaussian, kMotion, kUniform };

PsfKind parse_psf_kind(std::string_view name);
std::string_view to_string(PsfKind kind);

/// Parameters for one generated mask. Only the fields relevant to `kind` are read.
struct PsfSpec {
  PsfKind kind = PsfKind::kUniform;
  std::size_t rows = 7;
  std::size_t cols = 7;
  double radius = 1.0;       // defocus, pixels
  double sigma = 1.0;        // gaussian, pixels
  std::size_t length = 1;    // motion, samples
  double angle_deg = 0.0;    // motion, counter-clockwise from +x with rows pointing down
};

/// Disk of radius R sampled at pixel centers, normalized by the number of
/// interior samples. Throws "radius too large for mask" unless 2R+1 <= min(J, K).
Kernel2D defocus_psf(double radius, std::size_t rows, std::size_t cols);

/// e^{-(dx²+dy²)/(2σ²)} at pixel centers, normalized to sum 1.
Kernel2D gaussian_psf(double sigma, std::size_t rows, std::size_t cols);

/// L samples of weight 1/L stepping from the center along (cos θ, -sin θ),
/// each rounded to the nearest pixel. One-sided: the line starts at the center.
Kernel2D motion_psf(std::size_t length, double angle_deg, std::size_t rows, std::size_t cols);

/// Every weight 1/(J·K).
Kernel2D uniform_psf(std::size_t rows, std::size_t cols);

Kernel2D make_psf(const PsfSpec& spec);

/// Text form: "J K" on the first line, then J lines of K weights.
std::string format_psf(const Kernel2D& psf);
Kernel2D parse_psf(std::string_view text);

}  // namespace circdeblur
