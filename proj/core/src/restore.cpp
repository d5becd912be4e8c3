#include "circdeblur/restore.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "circdeblur/convolution.hpp"
#include "circdeblur/error.hpp"
#include "circdeblur/spectral.hpp"

namespace circdeblur {
namespace {

void validate(const Image& g, const Kernel2D& h, const Kernel2D& c, const ClsParams& params) {
  if (!(params.gamma >= 0.0) || !std::isfinite(params.gamma)) throw InvalidArgument("gamma must be non-negative");
  if (!(params.epsilon >= 0.0) || !std::isfinite(params.epsilon)) {
    throw InvalidArgument("epsilon must be non-negative");
  }
  for (const Kernel2D* k : {&h, &c}) {
    if (k->rows() > g.rows() || k->cols() > g.cols()) throw InvalidArgument("kernel larger than image");
  }
}

Image solve(const Image& g, const Spectrum2D& blur, const Spectrum2D& smooth, const ClsParams& params) {
  Spectrum2D spectrum = dft_2d(g);
  auto out = spectrum.coefficients();
  const auto hs = blur.coefficients();
  const auto cs = smooth.coefficients();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double denominator = std::norm(hs[i]) + params.gamma * std::norm(cs[i]);
    if (denominator < params.epsilon) {
      out[i] = 0.0;
    } else if (denominator == 0.0) {
      throw NumericError("singular spectrum");
    } else {
      out[i] = std::conj(hs[i]) * out[i] / denominator;
    }
  }
  return idft_2d(spectrum);
}

}  // namespace

Kernel2D laplacian_mask() { return Kernel2D{{0, -1, 0}, {-1, 4, -1}, {0, -1, 0}}; }

Image cls_classic(const Image& g, const Kernel2D& h, const Kernel2D& c, const ClsParams& params) {
  validate(g, h, c, params);
  return solve(g, transfer_function_2d_classic(h, g.rows(), g.cols()),
               transfer_function_2d_classic(c, g.rows(), g.cols()), params);
}

Image cls_modified(const Image& g, const Kernel2D& h, const Kernel2D& c, const ClsParams& params) {
  validate(g, h, c, params);
  return solve(g, transfer_function_2d_centered(h, g.rows(), g.cols()),
               transfer_function_2d_centered(c, g.rows(), g.cols()), params);
}

NormalizedDifference normalized_difference(const Image& a, const Image& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("image dimensions differ");
  std::vector<double> d(a.size());
  double peak = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = std::abs(a.values()[i] - b.values()[i]);
    peak = std::max(peak, d[i]);
    sum_sq += d[i] * d[i];
  }
  const double rms = std::sqrt(sum_sq / static_cast<double>(d.size()));
  if (peak > 0.0) {
    for (auto& v : d) v /= peak;
  }
  return {Image(a.rows(), a.cols(), std::move(d)), rms, peak};
}

double rms_difference(const Image& a, const Image& b) { return normalized_difference(a, b).rms; }

}  // namespace circdeblur
