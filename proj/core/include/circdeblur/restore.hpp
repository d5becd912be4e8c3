#pragma once

#include "circdeblur/types.hpp"

namespace circdeblur {

struct ClsParams {
  /// Weight of the smoothness term. 0 gives the plain inverse filter.
  double gamma = 1e-3;
  /// Frequencies whose denominator magnitude falls below this are zeroed.
  double epsilon = 1e-12;
};

/// 3x3 discrete Laplacian [[0,-1,0],[-1,4,-1],[0,-1,0]].
Kernel2D laplacian_mask();

/// Constrained least squares with textbook transfer functions:
///   F = conj(H)·G / (|H|² + γ|C|²),  H = DFT(h_e), C = DFT(c_e).
/// Inverts blur produced by circ_conv_2d_classic.
///
/// Throws NumericError("singular spectrum") when a denominator is exactly zero
/// and epsilon is 0.
Image cls_classic(const Image& g, const Kernel2D& h, const Kernel2D& c, const ClsParams& params);

/// Same quotient with center-corrected transfer functions
///   H₁ = H'(u,v)·e^{+i2πvt/N}·e^{+i2πus/M}, and C₁ built the same way from c
/// with c's own center. Inverts blur produced by centered_conv_2d.
Image cls_modified(const Image& g, const Kernel2D& h, const Kernel2D& c, const ClsParams& params);

struct NormalizedDifference {
  /// |a - b| divided by its maximum, or all zeros when a == b.
  Image image;
  /// Root mean square of the unscaled |a - b|.
  double rms;
  /// Largest unscaled |a - b|.
  double max_abs;
};

NormalizedDifference normalized_difference(const Image& a, const Image& b);

/// Root mean square of a - b.
double rms_difference(const Image& a, const Image& b);

}  // namespace circdeblur
