#include "circdeblur/convolution.hpp"

#include <vector>

#include "circdeblur/circulant.hpp"
#include "circdeblur/error.hpp"
#include "circdeblur/spectral.hpp"

namespace circdeblur {
namespace {

void require_fits(const Signal& x, const Kernel1D& h) {
  if (h.size() > x.size()) throw InvalidArgument("kernel longer than signal");
}

void require_fits(const Image& f, const Kernel2D& h) {
  if (h.rows() > f.rows() || h.cols() > f.cols()) throw InvalidArgument("kernel larger than image");
}

Signal multiply_and_invert(const Signal& x, const Spectrum1D& transfer) {
  Spectrum1D spectrum = dft_1d(x);
  for (std::size_t k = 0; k < spectrum.size(); ++k) spectrum[k] *= transfer[k];
  return idft_1d(spectrum);
}

Image multiply_and_invert(const Image& f, const Spectrum2D& transfer) {
  Spectrum2D spectrum = dft_2d(f);
  auto coefficients = spectrum.coefficients();
  auto factors = transfer.coefficients();
  for (std::size_t i = 0; i < coefficients.size(); ++i) coefficients[i] *= factors[i];
  return idft_2d(spectrum);
}

}  // namespace

Signal circ_conv_1d_classic(const Signal& x, const Kernel1D& h) {
  require_fits(x, h);
  const std::size_t n = x.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t m = 0; m < h.size(); ++m) acc += h[m] * x[(i + n - m) % n];
    y[i] = acc;
  }
  return Signal(std::move(y));
}

Signal centered_conv_1d(const Signal& x, const Kernel1D& h) {
  require_fits(x, h);
  const std::size_t n = x.size();
  const std::size_t t = h.center();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) acc += h[j] * x[(i + n + j - t) % n];
    y[i] = acc;
  }
  return Signal(std::move(y));
}

Signal freq_conv_1d_classic(const Signal& x, const Kernel1D& h) {
  require_fits(x, h);
  return multiply_and_invert(x, transfer_function_1d_classic(h, x.size()));
}

Signal freq_conv_1d_modified(const Signal& x, const Kernel1D& h) {
  require_fits(x, h);
  return multiply_and_invert(x, transfer_function_1d_centered(h, x.size()));
}

Image circ_conv_2d_classic(const Image& f, const Kernel2D& h) {
  require_fits(f, h);
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  std::vector<double> g(rows * cols, 0.0);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) {
      double acc = 0.0;
      for (std::size_t p = 0; p < h.rows(); ++p) {
        const std::size_t src_row = (m + rows - p) % rows;
        for (std::size_t q = 0; q < h.cols(); ++q) acc += h(p, q) * f(src_row, (n + cols - q) % cols);
      }
      g[m * cols + n] = acc;
    }
  }
  return Image(rows, cols, std::move(g));
}

Image centered_conv_2d(const Image& f, const Kernel2D& h) {
  require_fits(f, h);
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  const std::size_t s = h.center_row();
  const std::size_t t = h.center_col();
  std::vector<double> g(rows * cols, 0.0);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) {
      double acc = 0.0;
      for (std::size_t j = 0; j < h.rows(); ++j) {
        const std::size_t src_row = (m + rows + j - s) % rows;
        for (std::size_t k = 0; k < h.cols(); ++k) acc += h(j, k) * f(src_row, (n + cols + k - t) % cols);
      }
      g[m * cols + n] = acc;
    }
  }
  return Image(rows, cols, std::move(g));
}

Image freq_conv_2d_classic(const Image& f, const Kernel2D& h) {
  require_fits(f, h);
  return multiply_and_invert(f, transfer_function_2d_classic(h, f.rows(), f.cols()));
}

Image freq_conv_2d_modified(const Image& f, const Kernel2D& h) {
  require_fits(f, h);
  return multiply_and_invert(f, transfer_function_2d_centered(h, f.rows(), f.cols()));
}

Spectrum1D transfer_function_1d_classic(const Kernel1D& h, std::size_t n) {
  return dft_1d(extend_kernel_1d(h, n));
}

Spectrum1D transfer_function_1d_centered(const Kernel1D& h, std::size_t n) {
  Spectrum1D spectrum = dft_1d(extend_kernel_1d(reverse_kernel_1d(h), n));
  for (std::size_t k = 0; k < n; ++k) spectrum[k] *= phase_factor(k, h.center(), n);
  return spectrum;
}

Spectrum2D transfer_function_2d_classic(const Kernel2D& h, std::size_t rows, std::size_t cols) {
  return dft_2d(extend_kernel_2d(h, rows, cols));
}

Spectrum2D transfer_function_2d_centered(const Kernel2D& h, std::size_t rows, std::size_t cols) {
  Spectrum2D spectrum = dft_2d(extend_kernel_2d(reverse_kernel_2d(h), rows, cols));
  const std::size_t s = h.center_row();
  const std::size_t t = h.center_col();
  for (std::size_t u = 0; u < rows; ++u) {
    const Complex row_phase = phase_factor(u, s, rows);
    for (std::size_t v = 0; v < cols; ++v) spectrum(u, v) *= phase_factor(v, t, cols) * row_phase;
  }
  return spectrum;
}

}  // namespace circdeblur
