#include "circdeblur/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "circdeblur/error.hpp"

namespace circdeblur {
namespace {

constexpr std::size_t kMaxPixels = std::size_t{1} << 28;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (!at_end()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t read_unsigned(const char* what) {
    skip_space_and_comments();
    if (at_end()) throw ParseError(std::string("unexpected end of data reading ") + what, pos_);
    if (!is_digit(bytes_[pos_])) throw ParseError(std::string("non-numeric ") + what, pos_);
    std::size_t value = 0;
    const std::size_t start = pos_;
    while (!at_end() && is_digit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > kMaxPixels) throw ParseError(std::string(what) + " out of range", start);
      ++pos_;
    }
    if (!at_end() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw ParseError(std::string("non-numeric ") + what, pos_);
    }
    return value;
  }

  std::string_view take(std::size_t n) {
    const auto out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  char peek() const { return bytes_[pos_]; }
  void advance() { ++pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::uint8_t rescale(std::size_t value, std::size_t maxval) {
  if (maxval == 255) return static_cast<std::uint8_t>(value);
  return static_cast<std::uint8_t>((value * 255 + maxval / 2) / maxval);
}

}  // namespace

RawImage8 read_pgm(std::string_view bytes) {
  Cursor in(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw ParseError("bad magic number, expected P2 or P5", 0);
  }
  const bool binary = bytes[1] == '5';
  in.take(2);
  if (!in.at_end() && !is_space(in.peek()) && in.peek() != '#') throw ParseError("bad magic number", 2);

  RawImage8 img;
  img.cols = in.read_unsigned("width");
  img.rows = in.read_unsigned("height");
  in.skip_space_and_comments();
  const std::size_t maxval_pos = in.pos();
  const std::size_t maxval = in.read_unsigned("maxval");
  if (img.cols == 0 || img.rows == 0) throw ParseError("zero image dimension", maxval_pos);
  if (img.cols * img.rows > kMaxPixels) throw ParseError("image too large", maxval_pos);
  if (maxval == 0 || maxval > 255) throw ParseError("maxval must be in 1..255", maxval_pos);

  const std::size_t count = img.rows * img.cols;
  img.pixels.resize(count);
  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (in.at_end() || !is_space(in.peek())) throw ParseError("missing whitespace after maxval", in.pos());
    in.advance();
    if (in.remaining() < count) throw ParseError("truncated pixel data", bytes.size());
    const auto raster = in.take(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto v = static_cast<std::uint8_t>(raster[i]);
      if (v > maxval) throw ParseError("pixel value exceeds maxval", in.pos() - count + i);
      img.pixels[i] = rescale(v, maxval);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      in.skip_space_and_comments();
      if (in.at_end()) throw ParseError("truncated pixel data", in.pos());
      const std::size_t at = in.pos();
      const std::size_t v = in.read_unsigned("pixel value");
      if (v > maxval) throw ParseError("pixel value exceeds maxval", at);
      img.pixels[i] = rescale(v, maxval);
    }
  }
  return img;
}

std::string write_pgm(const RawImage8& img, PgmFormat format) {
  if (img.pixels.size() != img.rows * img.cols) throw InvalidArgument("pixel count does not match dimensions");
  std::string out = format == PgmFormat::kBinary ? "P5\n" : "P2\n";
  out += std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n255\n";
  if (format == PgmFormat::kBinary) {
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
  }
  // Plain PGM lines should stay under 70 characters.
  for (std::size_t r = 0; r < img.rows; ++r) {
    std::size_t line = 0;
    for (std::size_t c = 0; c < img.cols; ++c) {
      const std::string token = std::to_string(img.pixels[r * img.cols + c]);
      if (line > 0 && line + 1 + token.size() > 70) {
        out += '\n';
        line = 0;
      } else if (line > 0) {
        out += ' ';
        ++line;
      }
      out += token;
      line += token.size();
    }
    out += '\n';
  }
  return out;
}

Image to_unit(const RawImage8& img) {
  std::vector<double> values(img.pixels.size());
  std::transform(img.pixels.begin(), img.pixels.end(), values.begin(),
                 [](std::uint8_t p) { return static_cast<double>(p) / 255.0; });
  return Image(img.rows, img.cols, std::move(values));
}

RawImage8 from_unit(const Image& img) {
  RawImage8 out{img.rows(), img.cols(), std::vector<std::uint8_t>(img.size())};
  std::transform(img.values().begin(), img.values().end(), out.pixels.begin(), [](double v) {
    return static_cast<std::uint8_t>(std::round(std::clamp(v, 0.0, 1.0) * 255.0));
  });
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("failed reading '" + path.string() + "'");
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

RawImage8 load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void save_pgm(const std::filesystem::path& path, const RawImage8& img, PgmFormat format) {
  write_file(path, write_pgm(img, format));
}

}  // namespace circdeblur
