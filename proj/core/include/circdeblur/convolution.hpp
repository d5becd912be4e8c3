#pragma once

#include <cstddef>

#include "circdeblur/types.hpp"

namespace circdeblur {

// Two conventions of circular convolution live here.
//
// Classic: y(n) = Σ_m h_e(m)·x((n-m) mod N). This is what the textbook DFT
// product Y = X·H computes. It applies the kernel in reversed order and aligns
// its last element, not its center, with the output sample.
//
// Centered: y(n) = Σ_j h(j)·x((n+j-t) mod N), t = (M-1)/2. The kernel keeps
// its order and its symmetric center sits on the output sample, which is how
// a PSF physically spreads light. Its frequency form is
// Y(k) = X(k)·H'(k)·e^{+i2πkt/N}, where H' is the DFT of the extended
// reversed kernel. The sliding-window sum is the reference definition; the
// matrix and spectral forms are checked against it.
//
// Every function throws InvalidArgument when the kernel does not fit the data.

Signal circ_conv_1d_classic(const Signal& x, const Kernel1D& h);
Signal centered_conv_1d(const Signal& x, const Kernel1D& h);
Signal freq_conv_1d_classic(const Signal& x, const Kernel1D& h);
Signal freq_conv_1d_modified(const Signal& x, const Kernel1D& h);

Image circ_conv_2d_classic(const Image& f, const Kernel2D& h);
Image centered_conv_2d(const Image& f, const Kernel2D& h);
Image freq_conv_2d_classic(const Image& f, const Kernel2D& h);
Image freq_conv_2d_modified(const Image& f, const Kernel2D& h);

/// DFT of h extended to n samples.
Spectrum1D transfer_function_1d_classic(const Kernel1D& h, std::size_t n);
/// DFT of the extended reversed kernel times e^{+i2πkt/N}.
Spectrum1D transfer_function_1d_centered(const Kernel1D& h, std::size_t n);

/// DFT of h extended to rows x cols.
Spectrum2D transfer_function_2d_classic(const Kernel2D& h, std::size_t rows, std::size_t cols);
/// H'(u,v)·e^{+i2πvt/N}·e^{+i2πus/M} with (s,t) the kernel's center.
Spectrum2D transfer_function_2d_centered(const Kernel2D& h, std::size_t rows, std::size_t cols);

}  // namespace circdeblur
