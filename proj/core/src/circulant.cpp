#include "circdeblur/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circdeblur/error.hpp"

namespace circdeblur {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
  if (rows > kMaxDenseDimension || cols > kMaxDenseDimension) {
    throw InvalidArgument("dense matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " exceeds the verification size bound");
  }
  entries_.assign(rows * cols, 0.0);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

DenseMatrix DenseMatrix::power(std::size_t exponent) const {
  if (rows_ != cols_) throw InvalidArgument("matrix power needs a square matrix");
  DenseMatrix out = identity(rows_);
  for (std::size_t e = 0; e < exponent; ++e) out = out * *this;
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimension mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<double> operator*(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols_ != x.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<double> y(a.rows_, 0.0);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
      }
    }
  }
  return out;
}

Signal extend_kernel_1d(const Kernel1D& h, std::size_t n) {
  if (h.size() > n) throw InvalidArgument("kernel longer than signal");
  std::vector<double> out(n, 0.0);
  std::copy(h.weights().begin(), h.weights().end(), out.begin());
  return Signal(std::move(out));
}

Image extend_kernel_2d(const Kernel2D& h, std::size_t rows, std::size_t cols) {
  if (h.rows() > rows || h.cols() > cols) throw InvalidArgument("kernel larger than image");
  std::vector<double> out(rows * cols, 0.0);
  for (std::size_t j = 0; j < h.rows(); ++j) {
    for (std::size_t k = 0; k < h.cols(); ++k) out[j * cols + k] = h(j, k);
  }
  return Image(rows, cols, std::move(out));
}

Kernel1D reverse_kernel_1d(const Kernel1D& h) {
  std::vector<double> out(h.weights().rbegin(), h.weights().rend());
  return Kernel1D(std::move(out));
}

Kernel2D reverse_kernel_2d(const Kernel2D& h) {
  // Row-major storage, so full index reversal is reversal of the flat array.
  std::vector<double> out(h.weights().rbegin(), h.weights().rend());
  return Kernel2D(h.rows(), h.cols(), std::move(out));
}

Signal circular_reverse_1d(const Signal& x) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[(n - i) % n];
  return Signal(std::move(out));
}

Image circular_reverse_2d(const Image& f) {
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  std::vector<double> out(rows * cols);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) out[m * cols + n] = f((rows - m) % rows, (cols - n) % cols);
  }
  return Image(rows, cols, std::move(out));
}

DenseMatrix permutation_matrix(std::size_t n) {
  if (n == 0) throw InvalidArgument("permutation matrix size must be positive");
  DenseMatrix alpha(n, n);
  for (std::size_t i = 0; i < n; ++i) alpha(i, (i + 1) % n) = 1.0;
  return alpha;
}

DenseMatrix circulant_matrix(const Signal& extended_kernel) {
  const std::size_t n = extended_kernel.size();
  DenseMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = extended_kernel[(i + n - j) % n];
  }
  return h;
}

DenseMatrix shift_convolution_matrix_1d(const DenseMatrix& h, std::size_t t) {
  if (h.rows() != h.cols()) throw InvalidArgument("convolution matrix must be square");
  if (t >= h.rows()) throw InvalidArgument("shift must be smaller than the matrix size");
  return h * permutation_matrix(h.rows()).power(t);
}

DenseMatrix block_circulant_matrix(const Image& extended_kernel) {
  const std::size_t rows = extended_kernel.rows();
  const std::size_t cols = extended_kernel.cols();
  DenseMatrix h(rows * cols, rows * cols);
  for (std::size_t bi = 0; bi < rows; ++bi) {
    for (std::size_t bj = 0; bj < rows; ++bj) {
      const std::size_t r = (bi + rows - bj) % rows;
      for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          h(bi * cols + i, bj * cols + j) = extended_kernel(r, (i + cols - j) % cols);
        }
      }
    }
  }
  return h;
}

DenseMatrix shift_convolution_matrix_2d(const DenseMatrix& h, std::size_t rows, std::size_t cols, std::size_t s,
                                        std::size_t t) {
  if (h.rows() != rows * cols || h.cols() != rows * cols) {
    throw InvalidArgument("block matrix does not match the image dimensions");
  }
  if (s >= rows || t >= cols) throw InvalidArgument("shift must be smaller than the image dimension");
  const DenseMatrix block_shift = kronecker(permutation_matrix(rows).power(s), DenseMatrix::identity(cols));
  const DenseMatrix column_shift = kronecker(DenseMatrix::identity(rows), permutation_matrix(cols).power(t));
  return h * block_shift * column_shift;
}

std::vector<double> vectorize(const Image& f) { return {f.values().begin(), f.values().end()}; }

Image unvectorize(std::span<const double> v, std::size_t rows, std::size_t cols) {
  return Image(rows, cols, std::vector<double>(v.begin(), v.end()));
}

}  // namespace circdeblur
