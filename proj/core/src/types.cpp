#include "circdeblur/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circdeblur/error.hpp"

namespace circdeblur {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
    throw InvalidArgument(std::string(what) + " contains a non-finite value");
  }
}

std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows,
                            std::size_t& cols, const char* what) {
  std::vector<double> values;
  cols = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument(std::string(what) + " rows have unequal length");
    values.insert(values.end(), r.begin(), r.end());
  }
  return values;
}

template <typename T>
double max_abs_diff(std::span<const T> a, std::span<const T> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw InvalidArgument("empty signal");
  require_finite(samples_, "signal");
}

Signal::Signal(std::initializer_list<double> samples) : Signal(std::vector<double>(samples)) {}

Image::Image(std::size_t rows, std::size_t cols) : Image(rows, cols, std::vector<double>(rows * cols)) {}

Image::Image(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("empty image");
  if (values_.size() != rows_ * cols_) throw InvalidArgument("image value count does not match dimensions");
  require_finite(values_, "image");
}

Image::Image(std::initializer_list<std::initializer_list<double>> rows) : rows_(rows.size()), cols_(0) {
  values_ = flatten(rows, cols_, "image");
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("empty image");
  require_finite(values_, "image");
}

Spectrum1D::Spectrum1D(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw InvalidArgument("empty spectrum");
}

Spectrum1D::Spectrum1D(std::initializer_list<Complex> coefficients)
    : Spectrum1D(std::vector<Complex>(coefficients)) {}

Spectrum2D::Spectrum2D(std::size_t rows, std::size_t cols)
    : Spectrum2D(rows, cols, std::vector<Complex>(rows * cols)) {}

Spectrum2D::Spectrum2D(std::size_t rows, std::size_t cols, std::vector<Complex> coefficients)
    : rows_(rows), cols_(cols), coefficients_(std::move(coefficients)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("empty spectrum");
  if (coefficients_.size() != rows_ * cols_) {
    throw InvalidArgument("spectrum coefficient count does not match dimensions");
  }
}

Kernel1D::Kernel1D(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidArgument("empty kernel");
  if (weights_.size() % 2 == 0) throw InvalidArgument("kernel length must be odd");
  require_finite(weights_, "kernel");
}

Kernel1D::Kernel1D(std::initializer_list<double> weights) : Kernel1D(std::vector<double>(weights)) {}

Kernel2D::Kernel2D(std::size_t rows, std::size_t cols, std::vector<double> weights)
    : rows_(rows), cols_(cols), weights_(std::move(weights)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("empty kernel");
  if (rows_ % 2 == 0 || cols_ % 2 == 0) throw InvalidArgument("kernel dimensions must be odd");
  if (weights_.size() != rows_ * cols_) throw InvalidArgument("kernel weight count does not match dimensions");
  require_finite(weights_, "kernel");
}

Kernel2D::Kernel2D(std::initializer_list<std::initializer_list<double>> rows) : rows_(rows.size()), cols_(0) {
  weights_ = flatten(rows, cols_, "kernel");
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("empty kernel");
  if (rows_ % 2 == 0 || cols_ % 2 == 0) throw InvalidArgument("kernel dimensions must be odd");
  require_finite(weights_, "kernel");
}

double max_abs_difference(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw InvalidArgument("signal lengths differ");
  return max_abs_diff(a.samples(), b.samples());
}

double max_abs_difference(const Image& a, const Image& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("image dimensions differ");
  return max_abs_diff(a.values(), b.values());
}

}  // namespace circdeblur
