#include "circdeblur/psf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <vector>

#include "circdeblur/error.hpp"

namespace circdeblur {
namespace {

void require_odd_size(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("mask size must be positive");
  if (rows % 2 == 0 || cols % 2 == 0) throw InvalidArgument("mask size must be odd");
}

Kernel2D normalized(std::size_t rows, std::size_t cols, std::vector<double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= total;
  return Kernel2D(rows, cols, std::move(weights));
}

}  // namespace

PsfKind parse_psf_kind(std::string_view name) {
  if (name == "defocus") return PsfKind::kDefocus;
  if (name == "gaussian") return PsfKind::kGaussian;
  if (name == "motion") return PsfKind::kMotion;
  if (name == "uniform") return PsfKind::kUniform;
  throw InvalidArgument("unknown PSF kind '" + std::string(name) + "'");
}

std::string_view to_string(PsfKind kind) {
  switch (kind) {
    case PsfKind::kDefocus:
      return "defocus";
    case PsfKind::kGaussian:
      return "gaussian";
    case PsfKind::kMotion:
      return "motion";
    case PsfKind::kUniform:
      return "uniform";
  }
  return "unknown";
}

Kernel2D defocus_psf(double radius, std::size_t rows, std::size_t cols) {
  require_odd_size(rows, cols);
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("radius must be positive");
  if (2.0 * radius + 1.0 > static_cast<double>(std::min(rows, cols))) {
    throw InvalidArgument("radius too large for mask");
  }
  const auto s = static_cast<double>((rows - 1) / 2);
  const auto t = static_cast<double>((cols - 1) / 2);
  std::vector<double> weights(rows * cols, 0.0);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t k = 0; k < cols; ++k) {
      const double dy = static_cast<double>(j) - s;
      const double dx = static_cast<double>(k) - t;
      if (dx * dx + dy * dy <= radius * radius) weights[j * cols + k] = 1.0;
    }
  }
  return normalized(rows, cols, std::move(weights));
}

Kernel2D gaussian_psf(double sigma, std::size_t rows, std::size_t cols) {
  require_odd_size(rows, cols);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be positive");
  const auto s = static_cast<double>((rows - 1) / 2);
  const auto t = static_cast<double>((cols - 1) / 2);
  std::vector<double> weights(rows * cols);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t k = 0; k < cols; ++k) {
      const double dy = static_cast<double>(j) - s;
      const double dx = static_cast<double>(k) - t;
      weights[j * cols + k] = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
    }
  }
  return normalized(rows, cols, std::move(weights));
}

Kernel2D motion_psf(std::size_t length, double angle_deg, std::size_t rows, std::size_t cols) {
  require_odd_size(rows, cols);
  if (length == 0) throw InvalidArgument("motion length must be at least 1");
  if (!std::isfinite(angle_deg)) throw InvalidArgument("motion angle must be finite");
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double step_x = std::cos(theta);
  const double step_y = -std::sin(theta);
  const auto s = static_cast<long long>((rows - 1) / 2);
  const auto t = static_cast<long long>((cols - 1) / 2);
  std::vector<double> weights(rows * cols, 0.0);
  const double w = 1.0 / static_cast<double>(length);
  for (std::size_t i = 0; i < length; ++i) {
    const long long row = s + std::llround(static_cast<double>(i) * step_y);
    const long long col = t + std::llround(static_cast<double>(i) * step_x);
    if (row < 0 || col < 0 || row >= static_cast<long long>(rows) || col >= static_cast<long long>(cols)) {
      throw InvalidArgument("motion line exits mask");
    }
    weights[static_cast<std::size_t>(row) * cols + static_cast<std::size_t>(col)] += w;
  }
  return Kernel2D(rows, cols, std::move(weights));
}

Kernel2D uniform_psf(std::size_t rows, std::size_t cols) {
  require_odd_size(rows, cols);
  return Kernel2D(rows, cols, std::vector<double>(rows * cols, 1.0 / static_cast<double>(rows * cols)));
}

Kernel2D make_psf(const PsfSpec& spec) {
  switch (spec.kind) {
    case PsfKind::kDefocus:
      return defocus_psf(spec.radius, spec.rows, spec.cols);
    case PsfKind::kGaussian:
      return gaussian_psf(spec.sigma, spec.rows, spec.cols);
    case PsfKind::kMotion:
      return motion_psf(spec.length, spec.angle_deg, spec.rows, spec.cols);
    case PsfKind::kUniform:
      return uniform_psf(spec.rows, spec.cols);
  }
  throw InvalidArgument("unknown PSF kind");
}

std::string format_psf(const Kernel2D& psf) {
  std::string out = std::to_string(psf.rows()) + " " + std::to_string(psf.cols()) + "\n";
  char buf[32];
  for (std::size_t j = 0; j < psf.rows(); ++j) {
    for (std::size_t k = 0; k < psf.cols(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", psf(j, k));
      if (k > 0) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Kernel2D parse_psf(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto next_token = [&](const char* what) -> std::string_view {
    skip_space();
    if (pos >= text.size()) throw ParseError(std::string("unexpected end of PSF file, expected ") + what, pos);
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto read_size = [&](const char* what) {
    const std::size_t start = (skip_space(), pos);
    const auto token = next_token(what);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || value == 0) {
      throw ParseError(std::string("invalid PSF ") + what, start);
    }
    return value;
  };

  const std::size_t rows = read_size("row count");
  const std::size_t cols = read_size("column count");
  if (rows % 2 == 0 || cols % 2 == 0) throw ParseError("PSF dimensions must be odd", 0);
  std::vector<double> weights(rows * cols);
  for (auto& w : weights) {
    const std::size_t start = (skip_space(), pos);
    const std::string token(next_token("weight"));
    char* end = nullptr;
    w = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(w)) throw ParseError("invalid PSF weight", start);
  }
  skip_space();
  if (pos != text.size()) throw ParseError("trailing data after PSF weights", pos);
  return Kernel2D(rows, cols, std::move(weights));
}

}  // namespace circdeblur
