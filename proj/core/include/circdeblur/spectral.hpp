#pragma once

#include <cstddef>
#include <span>

#include "circdeblur/types.hpp"

namespace circdeblur {

// Sign convention: the forward transform uses e^{-i2πkn/N}; the inverse uses
// e^{+i2πkn/N} and carries the 1/N (1/(MN) in 2D) normalization.

enum class Direction { kForward, kInverse };

/// In-place unnormalized DFT of arbitrary length. Power-of-two lengths use
/// radix-2; other lengths go through Bluestein's chirp-z reduction.
void transform(std::span<Complex> data, Direction direction);

/// In-place unnormalized 2D DFT of a row-major rows x cols buffer.
void transform_2d(std::span<Complex> data, std::size_t rows, std::size_t cols, Direction direction);

/// e^{+i2π·k·shift/n}, with k·shift reduced mod n before the trig call.
Complex phase_factor(std::size_t k, std::size_t shift, std::size_t n);

Spectrum1D dft_1d(const Signal& x);

/// Throws NumericError("non-real inverse") when the imaginary residue is not
/// negligible; see kNonRealThreshold.
Signal idft_1d(const Spectrum1D& spectrum);

Spectrum2D dft_2d(const Image& f);
Image idft_2d(const Spectrum2D& spectrum);

/// Largest tolerated imaginary residue of an inverse transform, relative to
/// max(1, peak real magnitude).
inline constexpr double kNonRealThreshold = 1e-6;

/// output(n) = x((n + k) mod N). Positive k moves content toward lower indices.
Signal circular_shift_1d(const Signal& x, long long k);

/// output(m, n) = f((m + s) mod M, (n + t) mod N).
Image circular_shift_2d(const Image& f, long long s, long long t);

}  // namespace circdeblur
