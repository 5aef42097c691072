#include "kcon/image.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace kcon {

Image make_image(int height, int width, double fill) {
  if (height < 2 || width < 2)
    throw InvalidArgumentError("image dimensions must be at least 2x2, got " +
                               std::to_string(height) + "x" + std::to_string(width));
  Image img;
  img.height = height;
  img.width = width;
  img.pixels.assign(static_cast<std::size_t>(height) * width, fill);
  return img;
}

void validate_image(const Image& img) {
  if (img.height < 2 || img.width < 2)
    throw InvalidArgumentError("image dimensions must be at least 2x2, got " +
                               std::to_string(img.height) + "x" + std::to_string(img.width));
  if (img.pixels.size() != static_cast<std::size_t>(img.height) * img.width)
    throw InvalidArgumentError("pixel count does not match dimensions");
  for (double v : img.pixels)
    if (!std::isfinite(v)) throw NonFiniteError("image contains a non-finite value");
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Reads the next header token, skipping whitespace and '#' comments.
bool next_token(const std::string& data, std::size_t& pos, std::string& tok) {
  while (pos < data.size()) {
    unsigned char c = data[pos];
    if (c == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else if (std::isspace(c)) {
      ++pos;
    } else {
      break;
    }
  }
  tok.clear();
  while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) {
    tok.push_back(data[pos]);
    ++pos;
  }
  return !tok.empty();
}

long parse_header_int(const std::string& tok, const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw MalformedHeaderError("bad " + what + " field in PGM header: '" + tok + "'");
  return std::stol(tok);
}

}  // namespace

Image load_pgm(const std::string& path) {
  const std::string data = read_file(path);
  if (data.size() < 2 || data[0] != 'P')
    throw UnsupportedMagicError("not a PGM file: " + path);
  if (data[1] != '5') {
    std::string magic = data.substr(0, 2);
    throw UnsupportedMagicError("unsupported magic '" + magic + "' (only binary P5): " + path);
  }

  std::size_t pos = 2;
  std::string tok;
  if (!next_token(data, pos, tok)) throw MalformedHeaderError("missing width: " + path);
  long w = parse_header_int(tok, "width");
  if (!next_token(data, pos, tok)) throw MalformedHeaderError("missing height: " + path);
  long h = parse_header_int(tok, "height");
  if (!next_token(data, pos, tok)) throw MalformedHeaderError("missing maxval: " + path);
  long maxval = parse_header_int(tok, "maxval");

  if (w < 2 || h < 2)
    throw MalformedHeaderError("dimensions below 2x2: " + path);
  if (maxval < 1 || maxval > 65535)
    throw MalformedHeaderError("maxval out of range [1,65535]: " + path);

  // Exactly one whitespace byte separates the header from the payload.
  if (pos >= data.size() || !std::isspace(static_cast<unsigned char>(data[pos])))
    throw MalformedHeaderError("missing separator before payload: " + path);
  ++pos;

  const bool two_byte = maxval > 255;
  const std::size_t need = static_cast<std::size_t>(w) * h * (two_byte ? 2 : 1);
  if (data.size() - pos < need)
    throw TruncatedPayloadError("payload has " + std::to_string(data.size() - pos) +
                                " bytes, expected " + std::to_string(need) + ": " + path);

  Image img = make_image(static_cast<int>(h), static_cast<int>(w));
  const double scale = 1.0 / maxval;
  const unsigned char* p = reinterpret_cast<const unsigned char*>(data.data()) + pos;
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    if (two_byte) {
      unsigned v = (static_cast<unsigned>(p[2 * i]) << 8) | p[2 * i + 1];  // big-endian
      img.pixels[i] = v * scale;
    } else {
      img.pixels[i] = p[i] * scale;
    }
  }
  return img;
}

void save_pgm(const Image& img, const std::string& path) {
  validate_image(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> bytes(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    double v = img.pixels[i];
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    bytes[i] = static_cast<unsigned char>(std::lround(v * 255.0));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  if (!out) throw IoError("write failed: " + path);
}

Image load_raw_f32(const std::string& path, int height, int width) {
  if (height < 2 || width < 2)
    throw InvalidArgumentError("raw image dimensions must be at least 2x2");
  const std::string data = read_file(path);
  const std::size_t need = static_cast<std::size_t>(height) * width * 4;
  if (data.size() != need)
    throw SizeMismatchError("file is " + std::to_string(data.size()) + " bytes, expected " +
                            std::to_string(need) + ": " + path);
  Image img = make_image(height, width);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    std::uint32_t u = 0;  // little-endian assemble, independent of host order
    const unsigned char* b = reinterpret_cast<const unsigned char*>(data.data()) + 4 * i;
    u = static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
        (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    float f;
    std::memcpy(&f, &u, 4);
    if (!std::isfinite(f)) throw NonFiniteError("non-finite value at index " + std::to_string(i) + ": " + path);
    img.pixels[i] = f;
  }
  return img;
}

void save_raw_f32(const Image& img, const std::string& path) {
  validate_image(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  for (double v : img.pixels) {
    float f = static_cast<float>(v);
    std::uint32_t u;
    std::memcpy(&u, &f, 4);
    unsigned char b[4] = {static_cast<unsigned char>(u & 0xff),
                          static_cast<unsigned char>((u >> 8) & 0xff),
                          static_cast<unsigned char>((u >> 16) & 0xff),
                          static_cast<unsigned char>((u >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
  }
  if (!out) throw IoError("write failed: " + path);
}

Image to_grayscale_normalized(const Image& img) {
  validate_image(img);
  const double n = static_cast<double>(img.pixels.size());
  double mean = 0.0, ms = 0.0;
  for (double v : img.pixels) mean += v;
  mean /= n;
  for (double v : img.pixels) ms += v * v;
  ms /= n;
  double var = 0.0;
  for (double v : img.pixels) var += (v - mean) * (v - mean);
  var /= n;
  if (var <= 1e-12 * ms || var == 0.0)
    throw DegenerateImageError("cannot normalize a (near-)constant image");
  const double inv_sd = 1.0 / std::sqrt(var);
  Image out = img;
  for (double& v : out.pixels) v = (v - mean) * inv_sd;
  return out;
}

}  // namespace kcon
