#include "robust1d/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "robust1d/error.hpp"

namespace robust1d {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Parse, "pgm: " + msg); }

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int ch = in.peek();
    if (ch == std::char_traits<char>::eof()) return;
    if (ch == '#') {
      std::string ignored;
      std::getline(in, ignored);
    } else if (std::isspace(ch)) {
      in.get();
    } else {
      return;
    }
  }
}

unsigned long read_header_int(std::istream& in, const char* what) {
  skip_separators(in);
  std::string digits;
  while (std::isdigit(in.peek())) digits.push_back(static_cast<char>(in.get()));
  if (digits.empty() || digits.size() > 9) fail(std::string("bad ") + what);
  return std::stoul(digits);
}

}  // namespace

PgmImage read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    fail("not a P2/P5 grayscale image");
  }
  PgmImage img;
  img.format = magic[1] == '2' ? PgmFormat::Plain : PgmFormat::Raw;
  img.width = read_header_int(in, "width");
  img.height = read_header_int(in, "height");
  const unsigned long maxval = read_header_int(in, "maxval");
  if (img.width == 0 || img.height == 0) fail("zero dimension");
  if (maxval == 0 || maxval > 65535) fail("maxval must be in 1..65535");
  img.maxval = static_cast<std::uint16_t>(maxval);

  const std::size_t count = img.width * img.height;
  img.samples.resize(count);

  if (img.format == PgmFormat::Plain) {
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned long v = read_header_int(in, "sample");
      if (v > maxval) fail("sample exceeds maxval");
      img.samples[i] = static_cast<std::uint16_t>(v);
    }
    return img;
  }

  // Exactly one whitespace byte separates the header from the raster.
  if (!std::isspace(in.get())) fail("missing separator before raster");
  const bool wide = maxval > 255;
  std::vector<unsigned char> raw(count * (wide ? 2 : 1));
  if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()))) {
    fail("truncated raster");
  }
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned v = wide ? (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1] : raw[i];
    if (v > maxval) fail("sample exceeds maxval");
    img.samples[i] = static_cast<std::uint16_t>(v);
  }
  return img;
}

void write_pgm(std::ostream& out, const PgmImage& img) {
  if (img.samples.size() != img.width * img.height) {
    throw Error(ErrorKind::InvalidArgument, "pgm: sample count does not match dimensions");
  }
  out << (img.format == PgmFormat::Plain ? "P2" : "P5") << '\n'
      << img.width << ' ' << img.height << '\n'
      << img.maxval << '\n';

  if (img.format == PgmFormat::Plain) {
    // Netpbm plain files keep lines at or under 70 characters.
    for (std::size_t y = 0; y < img.height; ++y) {
      std::size_t line_len = 0;
      for (std::size_t x = 0; x < img.width; ++x) {
        const std::string tok = std::to_string(img.samples[y * img.width + x]);
        if (line_len > 0 && line_len + 1 + tok.size() > 70) {
          out << '\n';
          line_len = 0;
        }
        if (line_len > 0) {
          out << ' ';
          ++line_len;
        }
        out << tok;
        line_len += tok.size();
      }
      out << '\n';
    }
    return;
  }

  const bool wide = img.maxval > 255;
  std::vector<unsigned char> raw;
  raw.reserve(img.samples.size() * (wide ? 2 : 1));
  for (std::uint16_t v : img.samples) {
    if (wide) raw.push_back(static_cast<unsigned char>(v >> 8));
    raw.push_back(static_cast<unsigned char>(v & 0xff));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
}

GrayImage to_gray(const PgmImage& img) {
  std::vector<double> px(img.samples.size());
  const double scale = img.maxval;
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = img.samples[i] / scale;
  return GrayImage(img.width, img.height, std::move(px));
}

PgmImage from_gray(const GrayImage& img, std::uint16_t maxval, PgmFormat format) {
  if (maxval == 0) throw Error(ErrorKind::InvalidArgument, "pgm: maxval must be >= 1");
  PgmImage out;
  out.width = img.width();
  out.height = img.height();
  out.maxval = maxval;
  out.format = format;
  out.samples.resize(img.pixels().size());
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    // std::round rounds halves away from zero.
    const double q = std::round(img.pixels()[i] * maxval);
    out.samples[i] = static_cast<std::uint16_t>(std::clamp(q, 0.0, static_cast<double>(maxval)));
  }
  return out;
}

}  // namespace robust1d
