#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "circdeblur/circulant.hpp"
#include "circdeblur/error.hpp"
#include "circdeblur/psf.hpp"

namespace circdeblur {
namespace {

double sum(const Kernel2D& k) { return std::accumulate(k.weights().begin(), k.weights().end(), 0.0); }

Kernel2D delta3() { return Kernel2D{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}; }

TEST(DefocusPsf, HalfPixelRadiusIsDelta) { EXPECT_EQ(defocus_psf(0.5, 3, 3), delta3()); }

TEST(DefocusPsf, UnitRadiusIsPlusShape) {
  // Lattice points with dx²+dy² <= 1: the center and its four neighbours.
  const double w = 1.0 / 5.0;
  EXPECT_EQ(defocus_psf(1.0, 3, 3), (Kernel2D{{0, w, 0}, {w, w, w}, {0, w, 0}}));
}

TEST(DefocusPsf, LatticeCountMatchesEnumeration) {
  for (double r : {1.5, 2.0, 2.5, 3.0}) {
    const std::size_t side = 2 * static_cast<std::size_t>(std::ceil(r)) + 1;
    int inside = 0;
    const int half = static_cast<int>(side / 2);
    for (int dy = -half; dy <= half; ++dy) {
      for (int dx = -half; dx <= half; ++dx) inside += dx * dx + dy * dy <= r * r;
    }
    const Kernel2D k = defocus_psf(r, side, side);
    EXPECT_DOUBLE_EQ(k(side / 2, side / 2), 1.0 / inside) << "R=" << r;
  }
}

TEST(DefocusPsf, Centrosymmetric) {
  const Kernel2D k = defocus_psf(2.0, 5, 5);
  EXPECT_EQ(reverse_kernel_2d(k), k);
}

TEST(DefocusPsf, RadiusTooLarge) {
  try {
    defocus_psf(2.0, 3, 7);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "radius too large for mask");
  }
  EXPECT_THROW(defocus_psf(0.0, 3, 3), InvalidArgument);
  EXPECT_THROW(defocus_psf(1.0, 4, 4), InvalidArgument);
}

TEST(GaussianPsf, TinySigmaIsDelta) { EXPECT_EQ(gaussian_psf(1e-6, 3, 3), delta3()); }

TEST(GaussianPsf, CenterWeightClosedForm) {
  const double expected = 1.0 / (1.0 + 4.0 * std::exp(-0.5) + 4.0 * std::exp(-1.0));
  const Kernel2D k = gaussian_psf(1.0, 3, 3);
  EXPECT_NEAR(k(1, 1), expected, 1e-15);
  EXPECT_NEAR(k(1, 1), 0.2042, 5e-5);
}

TEST(GaussianPsf, SymmetricAndPositive) {
  const Kernel2D k = gaussian_psf(1.5, 7, 7);
  for (std::size_t j = 0; j < 7; ++j) {
    for (std::size_t c = 0; c < 7; ++c) {
      EXPECT_EQ(k(j, c), k(6 - j, 6 - c));
      EXPECT_GT(k(j, c), 0.0);
    }
  }
  EXPECT_EQ(reverse_kernel_2d(k), k);
}

TEST(GaussianPsf, RejectsNonPositiveSigma) {
  EXPECT_THROW(gaussian_psf(0.0, 3, 3), InvalidArgument);
  EXPECT_THROW(gaussian_psf(-1.0, 3, 3), InvalidArgument);
}

TEST(MotionPsf, UnitLengthIsDelta) {
  for (double angle : {0.0, 33.0, 90.0, 215.0}) EXPECT_EQ(motion_psf(1, angle, 3, 3), delta3());
}

TEST(MotionPsf, HorizontalLineStartsAtCenter) {
  const Kernel2D k = motion_psf(3, 0.0, 5, 5);
  const double w = 1.0 / 3.0;
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t c = 0; c < 5; ++c) {
      const bool on_line = j == 2 && c >= 2;
      EXPECT_EQ(k(j, c), on_line ? w : 0.0) << j << "," << c;
    }
  }
}

TEST(MotionPsf, VerticalLineRunsUpFromCenter) {
  // Direction (cos θ, -sin θ) with rows pointing down: 90° moves toward row 0.
  const Kernel2D k = motion_psf(3, 90.0, 5, 5);
  const double w = 1.0 / 3.0;
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t c = 0; c < 5; ++c) {
      const bool on_line = c == 2 && j <= 2;
      EXPECT_EQ(k(j, c), on_line ? w : 0.0) << j << "," << c;
    }
  }
}

TEST(MotionPsf, OppositeDirectionsAreReverses) {
  for (double angle : {0.0, 90.0, 180.0, 270.0}) {
    for (std::size_t length : {2u, 3u, 4u}) {
      EXPECT_EQ(reverse_kernel_2d(motion_psf(length, angle, 7, 7)), motion_psf(length, angle + 180.0, 7, 7));
    }
  }
}

TEST(MotionPsf, NotCentrosymmetric) {
  const Kernel2D k = motion_psf(3, 0.0, 5, 5);
  EXPECT_NE(reverse_kernel_2d(k), k);
}

TEST(MotionPsf, LineMustFit) {
  EXPECT_THROW(motion_psf(4, 0.0, 5, 5), InvalidArgument);
  EXPECT_THROW(motion_psf(0, 0.0, 5, 5), InvalidArgument);
  EXPECT_NO_THROW(motion_psf(4, 45.0, 7, 7));
}

TEST(UniformPsf, Examples) {
  EXPECT_EQ(uniform_psf(1, 1), (Kernel2D{{1}}));
  const Kernel2D u7 = uniform_psf(7, 7);
  for (double w : u7.weights()) EXPECT_EQ(w, 1.0 / 49.0);
  const Kernel2D u35 = uniform_psf(3, 5);
  for (double w : u35.weights()) EXPECT_EQ(w, 1.0 / 15.0);
  EXPECT_THROW(uniform_psf(2, 3), InvalidArgument);
}

TEST(PsfProperties, EveryGeneratorSumsToOneAndIsNonNegative) {
  std::vector<Kernel2D> masks;
  for (double r : {0.5, 1.0, 1.7, 3.0}) masks.push_back(defocus_psf(r, 7, 9));
  for (double s : {0.3, 1.0, 2.5}) masks.push_back(gaussian_psf(s, 9, 7));
  for (double a : {0.0, 17.0, 45.0, 90.0, 135.0, 200.0, 333.0}) masks.push_back(motion_psf(5, a, 9, 9));
  for (std::size_t n : {1u, 3u, 7u, 11u}) masks.push_back(uniform_psf(n, n));
  for (const auto& m : masks) {
    EXPECT_NEAR(sum(m), 1.0, 1e-12);
    for (double w : m.weights()) EXPECT_GE(w, 0.0);
  }
}

TEST(MakePsf, DispatchesOnKind) {
  PsfSpec spec;
  spec.kind = PsfKind::kGaussian;
  spec.rows = spec.cols = 3;
  spec.sigma = 1.0;
  EXPECT_EQ(make_psf(spec), gaussian_psf(1.0, 3, 3));
  EXPECT_EQ(parse_psf_kind("motion"), PsfKind::kMotion);
  EXPECT_EQ(to_string(PsfKind::kDefocus), "defocus");
  EXPECT_THROW(parse_psf_kind("airy"), InvalidArgument);
}

TEST(PsfText, RoundTripIsExact) {
  for (const Kernel2D& k : {gaussian_psf(1.1, 5, 7), motion_psf(4, 30.0, 7, 7), uniform_psf(7, 7)}) {
    EXPECT_EQ(parse_psf(format_psf(k)), k);
  }
}

TEST(PsfText, Layout) {
  EXPECT_EQ(format_psf(Kernel2D{{0.25, 0.5, 0.25}}), "1 3\n0.25 0.5 0.25\n");
  EXPECT_EQ(parse_psf("3 1\n0\n1\n0\n"), (Kernel2D{{0}, {1}, {0}}));
}

TEST(PsfText, ParseErrors) {
  EXPECT_THROW(parse_psf(""), ParseError);
  EXPECT_THROW(parse_psf("2 3\n1 2 3\n4 5 6\n"), ParseError);
  EXPECT_THROW(parse_psf("1 3\n1 2\n"), ParseError);
  EXPECT_THROW(parse_psf("1 3\n1 x 2\n"), ParseError);
  EXPECT_THROW(parse_psf("1 1\n1 2\n"), ParseError);
  try {
    parse_psf("1 3\n1 nan 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

}  // namespace
}  // namespace circdeblur
