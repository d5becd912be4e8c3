#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "circdeblur/types.hpp"

namespace circdeblur {

/// The convolution paths under test. Defaults to the library functions; tests
/// swap in deliberately broken variants to confirm the suite catches them.
struct ConvolutionPaths {
  std::function<Signal(const Signal&, const Kernel1D&)> classic_1d;
  std::function<Signal(const Signal&, const Kernel1D&)> centered_1d;
  std::function<Signal(const Signal&, const Kernel1D&)> freq_classic_1d;
  std::function<Signal(const Signal&, const Kernel1D&)> freq_modified_1d;
  std::function<Image(const Image&, const Kernel2D&)> classic_2d;
  std::function<Image(const Image&, const Kernel2D&)> centered_2d;
  std::function<Image(const Image&, const Kernel2D&)> freq_classic_2d;
  std::function<Image(const Image&, const Kernel2D&)> freq_modified_2d;

  static ConvolutionPaths library();
};

struct VerifyOptions {
  /// Largest signal length / image side drawn. max_size² must fit a DenseMatrix.
  std::size_t max_size = 16;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  ConvolutionPaths paths = ConvolutionPaths::library();
};

/// Tolerance for dense-matrix versus direct-sum comparisons.
inline constexpr double kMatrixTolerance = 1e-12;

struct CheckResult {
  std::string id;  // e.g. "Theorem 3.2"
  bool passed = true;
  double max_deviation = 0.0;
  std::size_t instances = 0;
  std::string counterexample;  // inputs of the first failing instance
};

/// Runs the eight named checks, in order:
///   Theorem 3.1  H·x and X·H equal classic convolution, which applies h reversed
///   Lemma 3.1    permutation algebra; H·α^t rotates rows and centers h'
///   Theorem 3.2  H'_t·x equals centered convolution
///   Lemma 3.2    H_t·x has spectrum X·H·e^{+i2πkt/N}; DFT shift theorem
///   Theorem 3.3  X·H'·e^{+i2πkt/N} equals centered convolution
///   Theorem 4.1  block-circulant H·vec(f) and F·H equal classic 2D convolution
///   Theorem 4.2  H'·(α₁^s ⊗ I)·(I ⊗ α₂^t)·vec(f) equals centered 2D convolution
///   Theorem 4.3  F·H'·e^{+i2πvt/N}·e^{+i2πus/M} equals centered 2D convolution
/// Throws InvalidArgument when max_size is 0 or max_size² exceeds the dense bound.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// One "<id>: PASS|FAIL" line per check, each FAIL followed by its counterexample.
std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace circdeblur
