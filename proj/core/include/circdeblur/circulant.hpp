#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circdeblur/types.hpp"

namespace circdeblur {

/// Largest row or column count a DenseMatrix may have. Matrices exist only to
/// check the fast paths at small scale; an image of more than 4096 pixels has
/// no business being expanded into one.
inline constexpr std::size_t kMaxDenseDimension = 4096;

/// Explicit real matrix, row-major. Acts on column vectors.
class DenseMatrix {
 public:
  /// Zero matrix. Throws InvalidArgument above kMaxDenseDimension.
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  DenseMatrix transpose() const;
  /// this^exponent for square matrices, by repeated multiplication.
  DenseMatrix power(std::size_t exponent) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend std::vector<double> operator*(const DenseMatrix& a, std::span<const double> x);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);

/// Kronecker product a ⊗ b.
DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Zero-extends h to length n. Throws "kernel longer than signal" if M > n.
Signal extend_kernel_1d(const Kernel1D& h, std::size_t n);

/// Zero-extends h to rows x cols.
Image extend_kernel_2d(const Kernel2D& h, std::size_t rows, std::size_t cols);

/// h'(n) = h(M-1-n).
Kernel1D reverse_kernel_1d(const Kernel1D& h);

/// h'(j, k) = h(J-1-j, K-1-k), over the kernel support.
Kernel2D reverse_kernel_2d(const Kernel2D& h);

/// r(n) = x((-n) mod N): reversal of an already-extended kernel.
Signal circular_reverse_1d(const Signal& x);
Image circular_reverse_2d(const Image& f);

/// α: α(i, i+1) = 1, α(N-1, 0) = 1. A row vector v·α moves every element one
/// position right with wraparound; α·x moves a column vector one position left.
DenseMatrix permutation_matrix(std::size_t n);

/// H(i, j) = h_e((i - j) mod N).
DenseMatrix circulant_matrix(const Signal& extended_kernel);

/// H·α^t: every row of H rotated right by t.
DenseMatrix shift_convolution_matrix_1d(const DenseMatrix& h, std::size_t t);

/// MN x MN block-circulant matrix: block (i, j) is the N x N circulant of row
/// (i - j) mod M of the extended kernel.
DenseMatrix block_circulant_matrix(const Image& extended_kernel);

/// H·(α₁^s ⊗ I_N)·(I_M ⊗ α₂^t): blocks rotated right by s, then every block
/// multiplied by α₂^t.
DenseMatrix shift_convolution_matrix_2d(const DenseMatrix& h, std::size_t rows, std::size_t cols, std::size_t s,
                                        std::size_t t);

/// Row-by-row stacking of an image into a column vector.
std::vector<double> vectorize(const Image& f);
Image unvectorize(std::span<const double> v, std::size_t rows, std::size_t cols);

}  // namespace circdeblur
