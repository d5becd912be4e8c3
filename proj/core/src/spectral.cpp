#include "circdeblur/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "circdeblur/error.hpp"

namespace circdeblur {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this length the direct sum is cheaper than Bluestein's three
// power-of-two transforms and slightly more accurate.
constexpr std::size_t kDirectLimit = 32;

std::size_t mod(long long a, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

// e^{sign·i2π·j/n} for j = 0..n-1.
std::vector<Complex> twiddles(std::size_t n, double sign) {
  std::vector<Complex> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = std::polar(1.0, sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  }
  return w;
}

void direct(std::span<Complex> data, double sign) {
  const std::size_t n = data.size();
  const auto w = twiddles(n, sign);
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += data[j] * w[(k * j) % n];
    out[k] = acc;
  }
  std::copy(out.begin(), out.end(), data.begin());
}

void radix2(std::span<Complex> data, double sign) {
  const std::size_t n = data.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  const auto w = twiddles(n, sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex a = data[start + k];
        const Complex b = data[start + k + half] * w[k * stride];
        data[start + k] = a + b;
        data[start + k + half] = a - b;
      }
    }
  }
}

// X(k) = c_k · Σ_j (x_j c_j) conj(c_{k-j}) with c_j = e^{sign·iπ j²/n}.
void bluestein(std::span<Complex> data, double sign) {
  const std::size_t n = data.size();
  const std::size_t m = std::bit_ceil(2 * n - 1);
  std::vector<Complex> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t sq = (j * j) % (2 * n);
    chirp[j] = std::polar(1.0, sign * std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n));
  }
  std::vector<Complex> a(m), b(m);
  for (std::size_t j = 0; j < n; ++j) a[j] = data[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);
  radix2(a, -1.0);
  radix2(b, -1.0);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  radix2(a, +1.0);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) data[k] = a[k] * chirp[k] * scale;
}

std::vector<double> real_part_checked(std::span<const Complex> values) {
  double peak = 1.0;
  double residue = 0.0;
  for (const auto& v : values) {
    peak = std::max(peak, std::abs(v.real()));
    residue = std::max(residue, std::abs(v.imag()));
  }
  if (residue > kNonRealThreshold * peak) throw NumericError("non-real inverse");
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](const Complex& v) { return v.real(); });
  return out;
}

}  // namespace

void transform(std::span<Complex> data, Direction direction) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  const double sign = direction == Direction::kForward ? -1.0 : +1.0;
  if (n <= kDirectLimit) {
    direct(data, sign);
  } else if (std::has_single_bit(n)) {
    radix2(data, sign);
  } else {
    bluestein(data, sign);
  }
}

void transform_2d(std::span<Complex> data, std::size_t rows, std::size_t cols, Direction direction) {
  for (std::size_t r = 0; r < rows; ++r) transform(data.subspan(r * cols, cols), direction);
  std::vector<Complex> column(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) column[r] = data[r * cols + c];
    transform(column, direction);
    for (std::size_t r = 0; r < rows; ++r) data[r * cols + c] = column[r];
  }
}

Complex phase_factor(std::size_t k, std::size_t shift, std::size_t n) {
  const std::size_t reduced = (k % n) * (shift % n) % n;
  return std::polar(1.0, kTwoPi * static_cast<double>(reduced) / static_cast<double>(n));
}

Spectrum1D dft_1d(const Signal& x) {
  std::vector<Complex> data(x.begin(), x.end());
  transform(data, Direction::kForward);
  return Spectrum1D(std::move(data));
}

Signal idft_1d(const Spectrum1D& spectrum) {
  std::vector<Complex> data(spectrum.coefficients().begin(), spectrum.coefficients().end());
  transform(data, Direction::kInverse);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& v : data) v *= scale;
  return Signal(real_part_checked(data));
}

Spectrum2D dft_2d(const Image& f) {
  std::vector<Complex> data(f.values().begin(), f.values().end());
  transform_2d(data, f.rows(), f.cols(), Direction::kForward);
  return Spectrum2D(f.rows(), f.cols(), std::move(data));
}

Image idft_2d(const Spectrum2D& spectrum) {
  std::vector<Complex> data(spectrum.coefficients().begin(), spectrum.coefficients().end());
  transform_2d(data, spectrum.rows(), spectrum.cols(), Direction::kInverse);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& v : data) v *= scale;
  return Image(spectrum.rows(), spectrum.cols(), real_part_checked(data));
}

Signal circular_shift_1d(const Signal& x, long long k) {
  const std::size_t n = x.size();
  const std::size_t offset = mod(k, n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[(i + offset) % n];
  return Signal(std::move(out));
}

Image circular_shift_2d(const Image& f, long long s, long long t) {
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  const std::size_t ds = mod(s, rows);
  const std::size_t dt = mod(t, cols);
  std::vector<double> out(rows * cols);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) out[m * cols + n] = f((m + ds) % rows, (n + dt) % cols);
  }
  return Image(rows, cols, std::move(out));
}

}  // namespace circdeblur
