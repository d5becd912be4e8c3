#include <gtest/gtest.h>

#include <filesystem>

#include "circdeblur/error.hpp"
#include "circdeblur/pgm.hpp"
#include "oracles.hpp"

namespace circdeblur {
namespace {

RawImage8 random_raw(std::size_t rows, std::size_t cols, oracle::Gen& gen) {
  RawImage8 img{rows, cols, std::vector<std::uint8_t>(rows * cols)};
  for (auto& p : img.pixels) p = gen.byte();
  return img;
}

std::size_t error_offset(std::string_view bytes) {
  try {
    read_pgm(bytes);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for: " << bytes;
  return static_cast<std::size_t>(-1);
}

TEST(ReadPgm, AsciiExample) {
  const RawImage8 img = read_pgm("P2\n2 2\n255\n0 128 255 64\n");
  EXPECT_EQ(img, (RawImage8{2, 2, {0, 128, 255, 64}}));
}

TEST(ReadPgm, BinaryMatchesAscii) {
  const std::string p5 = std::string("P5\n2 2\n255\n") + std::string("\x00\x80\xff\x40", 4);
  EXPECT_EQ(read_pgm(p5), read_pgm("P2\n2 2\n255\n0 128 255 64"));
}

TEST(ReadPgm, HeaderComments) {
  const RawImage8 img = read_pgm("P2\n# made by hand\n3 1 # width height\n#\n255\n1 2 3\n");
  EXPECT_EQ(img, (RawImage8{1, 3, {1, 2, 3}}));
}

TEST(ReadPgm, SmallMaxvalIsRescaled) {
  EXPECT_EQ(read_pgm("P2 3 1 15 0 15 7").pixels, (std::vector<std::uint8_t>{0, 255, 119}));
}

TEST(ReadPgm, ErrorOffsets) {
  EXPECT_EQ(error_offset("P6\n1 1\n255\n0"), 0u);
  EXPECT_EQ(error_offset("P2\n1 1\n256\n0"), 7u);
  EXPECT_EQ(error_offset("P2\n1 1\n0\n0"), 7u);
  EXPECT_EQ(error_offset("P2\n2 x\n255\n0"), 5u);
  EXPECT_EQ(error_offset("P2\n2 1\n255\n0 300"), 13u);
  EXPECT_EQ(error_offset("P2\n2 1\n255\n0"), 12u);
  // Binary rasters must be complete; the offset is the end of input.
  EXPECT_EQ(error_offset(std::string("P5\n2 2\n255\n") + std::string(3, 'a')), 14u);
  EXPECT_EQ(error_offset(""), 0u);
}

TEST(WritePgm, CanonicalBinaryLayout) {
  oracle::Gen gen(1);
  const RawImage8 img = random_raw(16, 16, gen);
  const std::string bytes = write_pgm(img, PgmFormat::kBinary);
  const std::string header = "P5\n16 16\n255\n";
  ASSERT_EQ(bytes.size(), header.size() + 256);
  EXPECT_EQ(bytes.substr(0, header.size()), header);
  for (std::size_t i = 0; i < 256; ++i) EXPECT_EQ(static_cast<std::uint8_t>(bytes[header.size() + i]), img.pixels[i]);
}

TEST(WritePgm, AsciiLinesStayShort) {
  RawImage8 img{3, 40, std::vector<std::uint8_t>(120, 255)};
  const std::string text = write_pgm(img, PgmFormat::kAscii);
  EXPECT_EQ(text.rfind("P2\n40 3\n255\n", 0), 0u);
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    ASSERT_NE(end, std::string::npos);
    EXPECT_LE(end - start, 70u);
    start = end + 1;
  }
}

TEST(PgmProperties, RoundTripBothEncodings) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const RawImage8 img = random_raw(gen.size(1, 40), gen.size(1, 40), gen);
    EXPECT_EQ(read_pgm(write_pgm(img, PgmFormat::kBinary)), img);
    EXPECT_EQ(read_pgm(write_pgm(img, PgmFormat::kAscii)), img);
  }
}

TEST(PgmProperties, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "circdeblur_pgm_test.pgm";
  oracle::Gen gen(8);
  const RawImage8 img = random_raw(9, 13, gen);
  save_pgm(path, img);
  EXPECT_EQ(load_pgm(path), img);
  std::filesystem::remove(path);
  EXPECT_THROW(load_pgm(path), Error);
}

TEST(UnitScale, Conversions) {
  const Image unit = to_unit(RawImage8{1, 3, {0, 51, 255}});
  EXPECT_EQ(unit, (Image{{0.0, 0.2, 1.0}}));
  EXPECT_EQ(from_unit(Image{{0.5, -0.2, 1.3, 0.0, 1.0}}).pixels, (std::vector<std::uint8_t>{128, 0, 255, 0, 255}));
}

TEST(UnitScale, RoundTripIsExact) {
  RawImage8 all{16, 16, std::vector<std::uint8_t>(256)};
  for (std::size_t i = 0; i < 256; ++i) all.pixels[i] = static_cast<std::uint8_t>(i);
  EXPECT_EQ(from_unit(to_unit(all)), all);
}

}  // namespace
}  // namespace circdeblur
