#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace circdeblur {

using Complex = std::complex<double>;

/// Absolute max-norm tolerance used for equality checks on unit-scale data.
inline constexpr double kTolerance = 1e-9;

/// Real 1D sample vector, length >= 1, all samples finite.
class Signal {
 public:
  explicit Signal(std::vector<double> samples);
  Signal(std::initializer_list<double> samples);

  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t n) const { return samples_[n]; }
  std::span<const double> samples() const noexcept { return samples_; }
  const std::vector<double>& to_vector() const noexcept { return samples_; }

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<double> samples_;
};

/// Real M x N matrix stored row-major. Dimensions are fixed at construction.
class Image {
 public:
  /// Zero-filled image.
  Image(std::size_t rows, std::size_t cols);
  Image(std::size_t rows, std::size_t cols, std::vector<double> values);
  Image(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }

  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values_).subspan(r * cols_, cols_);
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// DFT coefficients of a Signal.
class Spectrum1D {
 public:
  explicit Spectrum1D(std::vector<Complex> coefficients);
  Spectrum1D(std::initializer_list<Complex> coefficients);

  std::size_t size() const noexcept { return coefficients_.size(); }
  const Complex& operator[](std::size_t k) const { return coefficients_[k]; }
  Complex& operator[](std::size_t k) { return coefficients_[k]; }
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }

 private:
  std::vector<Complex> coefficients_;
};

/// DFT coefficients of an Image, same shape, row-major (u indexes rows, v columns).
class Spectrum2D {
 public:
  Spectrum2D(std::size_t rows, std::size_t cols);
  Spectrum2D(std::size_t rows, std::size_t cols, std::vector<Complex> coefficients);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return coefficients_.size(); }

  const Complex& operator()(std::size_t u, std::size_t v) const { return coefficients_[u * cols_ + v]; }
  Complex& operator()(std::size_t u, std::size_t v) { return coefficients_[u * cols_ + v]; }
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }
  std::span<Complex> coefficients() noexcept { return coefficients_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> coefficients_;
};

/// Odd-length real mask. The symmetric center sits at index (M-1)/2.
class Kernel1D {
 public:
  explicit Kernel1D(std::vector<double> weights);
  Kernel1D(std::initializer_list<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::size_t center() const noexcept { return (weights_.size() - 1) / 2; }
  double operator[](std::size_t n) const { return weights_[n]; }
  std::span<const double> weights() const noexcept { return weights_; }

  friend bool operator==(const Kernel1D&, const Kernel1D&) = default;

 private:
  std::vector<double> weights_;
};

/// Odd-by-odd real mask (a PSF). Center is ((J-1)/2, (K-1)/2).
class Kernel2D {
 public:
  Kernel2D(std::size_t rows, std::size_t cols, std::vector<double> weights);
  Kernel2D(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t center_row() const noexcept { return (rows_ - 1) / 2; }
  std::size_t center_col() const noexcept { return (cols_ - 1) / 2; }

  double operator()(std::size_t j, std::size_t k) const { return weights_[j * cols_ + k]; }
  std::span<const double> weights() const noexcept { return weights_; }

  friend bool operator==(const Kernel2D&, const Kernel2D&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> weights_;
};

double max_abs_difference(const Signal& a, const Signal& b);
double max_abs_difference(const Image& a, const Image& b);

}  // namespace circdeblur
