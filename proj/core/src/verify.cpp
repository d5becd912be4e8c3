#include "circdeblur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <span>

#include "circdeblur/circulant.hpp"
#include "circdeblur/convolution.hpp"
#include "circdeblur/error.hpp"
#include "circdeblur/spectral.hpp"

namespace circdeblur {
namespace {

// Doubles are built from raw 64-bit draws so reports are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::size_t odd_up_to(std::size_t limit) {
    const std::size_t largest = limit % 2 == 1 ? limit : limit - 1;
    return 2 * index(0, (largest - 1) / 2) + 1;
  }

  std::vector<double> values(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

std::string format_values(std::span<const double> values) {
  std::string out = "[";
  char buf[32];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  return out + "]";
}

std::string describe(const Signal& x, const Kernel1D& h) {
  return "N=" + std::to_string(x.size()) + " M=" + std::to_string(h.size()) + " x=" + format_values(x.samples()) +
         " h=" + format_values(h.weights());
}

std::string describe(const Image& f, const Kernel2D& h) {
  return "image " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " f=" + format_values(f.values()) +
         " kernel " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + " h=" +
         format_values(h.weights());
}

double max_deviation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (std::isnan(d)) return INFINITY;
    worst = std::max(worst, d);
  }
  return worst;
}

double max_deviation(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

class Check {
 public:
  explicit Check(std::string id) { result_.id = std::move(id); }

  // Records one comparison. `context` is only evaluated for the first failure.
  template <typename Context>
  void record(double deviation, double tolerance, Context&& context) {
    if (std::isnan(deviation)) deviation = INFINITY;
    result_.max_deviation = std::max(result_.max_deviation, deviation);
    if (deviation > tolerance && result_.passed) {
      result_.passed = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, " deviation=%.3g tolerance=%.0e", deviation, tolerance);
      result_.counterexample = std::string(context()) + buf;
    }
  }

  template <typename Body>
  void run(std::size_t trials, Body&& body) {
    for (std::size_t i = 0; i < trials; ++i) {
      try {
        body(*this);
      } catch (const std::exception& e) {
        if (result_.passed) {
          result_.passed = false;
          result_.counterexample = std::string("exception: ") + e.what();
        }
      }
      ++result_.instances;
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

struct Instance1D {
  Signal x;
  Kernel1D h;
};

struct Instance2D {
  Image f;
  Kernel2D h;
};

Instance1D draw_1d(Rng& rng, std::size_t max_size) {
  const std::size_t n = rng.index(1, max_size);
  const std::size_t m = rng.odd_up_to(std::min<std::size_t>(n, 9));
  return {Signal(rng.values(n, 0.0, 1.0)), Kernel1D(rng.values(m, -1.0, 1.0))};
}

Instance2D draw_2d(Rng& rng, std::size_t max_size) {
  const std::size_t rows = rng.index(1, max_size);
  const std::size_t cols = rng.index(1, max_size);
  const std::size_t j = rng.odd_up_to(std::min<std::size_t>(rows, 7));
  const std::size_t k = rng.odd_up_to(std::min<std::size_t>(cols, 7));
  return {Image(rows, cols, rng.values(rows * cols, 0.0, 1.0)), Kernel2D(j, k, rng.values(j * k, -1.0, 1.0))};
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t check) { return seed * 0x9E3779B97F4A7C15ULL + check; }

CheckResult theorem_3_1(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 1));
  Check check("Theorem 3.1");
  check.run(o.trials, [&](Check& c) {
    const auto [x, h] = draw_1d(rng, o.max_size);
    const auto ctx = [&] { return describe(x, h); };
    const Signal classic = o.paths.classic_1d(x, h);
    const auto hx = circulant_matrix(extend_kernel_1d(h, x.size())) * x.samples();
    c.record(max_deviation(hx, classic.samples()), kMatrixTolerance, ctx);
    c.record(max_deviation(o.paths.freq_classic_1d(x, h).samples(), classic.samples()), kTolerance, ctx);
    // The weights act in the order of h' with h'(M-1) on the output sample.
    const Kernel1D reversed = reverse_kernel_1d(h);
    const std::size_t n = x.size();
    const std::size_t last = h.size() - 1;
    std::vector<double> expected(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < h.size(); ++j) expected[i] += reversed[j] * x[(i + n + j - last) % n];
    }
    c.record(max_deviation(expected, classic.samples()), kMatrixTolerance, ctx);
  });
  return check.take();
}

CheckResult lemma_3_1(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 2));
  Check check("Lemma 3.1");
  check.run(o.trials, [&](Check& c) {
    const auto [x, h] = draw_1d(rng, o.max_size);
    const auto ctx = [&] { return describe(x, h); };
    const std::size_t n = x.size();
    const DenseMatrix alpha = permutation_matrix(n);
    const DenseMatrix eye = DenseMatrix::identity(n);
    c.record(max_abs_difference(alpha.power(n), eye), 0.0, ctx);
    c.record(max_abs_difference(alpha.transpose() * alpha, eye), 0.0, ctx);

    const DenseMatrix hm = circulant_matrix(extend_kernel_1d(h, n));
    const std::size_t t = h.center();
    const DenseMatrix shifted = shift_convolution_matrix_1d(hm, t);
    DenseMatrix rotated(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rotated(i, j) = hm(i, (j + n - t) % n);
    }
    c.record(max_abs_difference(shifted, rotated), 0.0, ctx);
    // Shifting aligns the center of h' with the output sample.
    c.record(max_deviation(shifted * x.samples(), o.paths.centered_1d(x, reverse_kernel_1d(h)).samples()),
             kMatrixTolerance, ctx);
  });
  return check.take();
}

CheckResult theorem_3_2(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 3));
  Check check("Theorem 3.2");
  check.run(o.trials, [&](Check& c) {
    const auto [x, h] = draw_1d(rng, o.max_size);
    const DenseMatrix corrected =
        shift_convolution_matrix_1d(circulant_matrix(extend_kernel_1d(reverse_kernel_1d(h), x.size())), h.center());
    c.record(max_deviation(corrected * x.samples(), o.paths.centered_1d(x, h).samples()), kMatrixTolerance,
             [&] { return describe(x, h); });
  });
  return check.take();
}

CheckResult lemma_3_2(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 4));
  Check check("Lemma 3.2");
  check.run(o.trials, [&](Check& c) {
    const auto [x, h] = draw_1d(rng, o.max_size);
    const auto ctx = [&] { return describe(x, h); };
    const std::size_t n = x.size();
    const std::size_t t = h.center();
    const auto spatial = shift_convolution_matrix_1d(circulant_matrix(extend_kernel_1d(h, n)), t) * x.samples();
    Spectrum1D product = dft_1d(x);
    const Spectrum1D transfer = dft_1d(extend_kernel_1d(h, n));
    for (std::size_t k = 0; k < n; ++k) product[k] *= transfer[k] * phase_factor(k, t, n);
    c.record(max_deviation(idft_1d(product).samples(), spatial), kTolerance, ctx);

    const auto nn = static_cast<long long>(n);
    const long long shift = static_cast<long long>(rng.index(0, 2 * n)) - nn;
    const Spectrum1D shifted = dft_1d(circular_shift_1d(x, shift));
    Spectrum1D expected = dft_1d(x);
    const auto reduced = static_cast<std::size_t>(((shift % nn) + nn) % nn);
    for (std::size_t k = 0; k < n; ++k) expected[k] *= phase_factor(k, reduced, n);
    c.record(max_deviation(shifted.coefficients(), expected.coefficients()), kTolerance,
             [&] { return describe(x, h) + " shift=" + std::to_string(shift); });
  });
  return check.take();
}

CheckResult theorem_3_3(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 5));
  Check check("Theorem 3.3");
  check.run(o.trials, [&](Check& c) {
    const auto [x, h] = draw_1d(rng, o.max_size);
    c.record(max_deviation(o.paths.freq_modified_1d(x, h).samples(), o.paths.centered_1d(x, h).samples()),
             kTolerance, [&] { return describe(x, h); });
  });
  return check.take();
}

CheckResult theorem_4_1(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 6));
  Check check("Theorem 4.1");
  check.run(o.trials, [&](Check& c) {
    const auto [f, h] = draw_2d(rng, o.max_size);
    const auto ctx = [&] { return describe(f, h); };
    const Image classic = o.paths.classic_2d(f, h);
    const auto hf = block_circulant_matrix(extend_kernel_2d(h, f.rows(), f.cols())) * vectorize(f);
    c.record(max_deviation(hf, classic.values()), kMatrixTolerance, ctx);
    c.record(max_deviation(o.paths.freq_classic_2d(f, h).values(), classic.values()), kTolerance, ctx);
  });
  return check.take();
}

CheckResult theorem_4_2(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 7));
  Check check("Theorem 4.2");
  check.run(o.trials, [&](Check& c) {
    const auto [f, h] = draw_2d(rng, o.max_size);
    const DenseMatrix base = block_circulant_matrix(extend_kernel_2d(reverse_kernel_2d(h), f.rows(), f.cols()));
    const DenseMatrix corrected =
        shift_convolution_matrix_2d(base, f.rows(), f.cols(), h.center_row(), h.center_col());
    c.record(max_deviation(corrected * vectorize(f), o.paths.centered_2d(f, h).values()), kMatrixTolerance,
             [&] { return describe(f, h); });
  });
  return check.take();
}

CheckResult theorem_4_3(const VerifyOptions& o) {
  Rng rng(stream_seed(o.seed, 8));
  Check check("Theorem 4.3");
  check.run(o.trials, [&](Check& c) {
    const auto [f, h] = draw_2d(rng, o.max_size);
    c.record(max_deviation(o.paths.freq_modified_2d(f, h).values(), o.paths.centered_2d(f, h).values()),
             kTolerance, [&] { return describe(f, h); });
  });
  return check.take();
}

}  // namespace

ConvolutionPaths ConvolutionPaths::library() {
  return {circ_conv_1d_classic, centered_conv_1d, freq_conv_1d_classic, freq_conv_1d_modified,
          circ_conv_2d_classic, centered_conv_2d, freq_conv_2d_classic, freq_conv_2d_modified};
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.max_size == 0) throw InvalidArgument("max size must be positive");
  if (options.max_size * options.max_size > kMaxDenseDimension) {
    throw InvalidArgument("max size " + std::to_string(options.max_size) + " exceeds the dense matrix bound");
  }
  return {theorem_3_1(options), lemma_3_1(options),   theorem_3_2(options), lemma_3_2(options),
          theorem_3_3(options), theorem_4_1(options), theorem_4_2(options), theorem_4_3(options)};
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.id + (r.passed ? ": PASS\n" : ": FAIL\n");
    if (!r.passed) out += "  counterexample: " + r.counterexample + "\n";
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace circdeblur
