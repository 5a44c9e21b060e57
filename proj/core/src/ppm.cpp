#include "tubal/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tubal/errors.hpp"

namespace tubal {

namespace {

// next whitespace-separated token, skipping '#' comments
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      while ((c = in.peek()) != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(in.get()));
      }
      return tok;
    }
  }
  throw ImageFormatError("ppm: unexpected end of header");
}

long to_long(const std::string& tok) {
  try {
    return std::stol(tok);
  } catch (const std::exception&) {
    throw ImageFormatError("ppm: bad numeric field '" + tok + "'");
  }
}

}  // namespace

Tensor3 read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageFormatError("ppm: cannot open " + path);
  const std::string magic = next_token(in);
  if (magic != "P3" && magic != "P6")
    throw ImageFormatError("ppm: unsupported magic '" + magic + "'");
  const long width = to_long(next_token(in));
  const long height = to_long(next_token(in));
  const long maxval = to_long(next_token(in));
  if (width < 1 || height < 1 || maxval < 1 || maxval > 65535)
    throw ImageFormatError("ppm: invalid dimensions or maxval");

  Tensor3 img(height, width, 3);
  const double scale = 1.0 / static_cast<double>(maxval);
  if (magic == "P3") {
    for (long i = 0; i < height; ++i)
      for (long j = 0; j < width; ++j)
        for (long k = 0; k < 3; ++k)
          img(i, j, k) = scale * static_cast<double>(to_long(next_token(in)));
  } else {
    in.get();  // single whitespace after maxval
    const int bytes = maxval > 255 ? 2 : 1;
    for (long i = 0; i < height; ++i) {
      for (long j = 0; j < width; ++j) {
        for (long k = 0; k < 3; ++k) {
          long v = in.get();
          if (bytes == 2) v = (v << 8) | in.get();
          if (!in) throw ImageFormatError("ppm: truncated pixel data");
          img(i, j, k) = scale * static_cast<double>(v);
        }
      }
    }
  }
  return img;
}

void write_ppm(const std::string& path, const Tensor3& image) {
  if (image.n3() != 3) throw ImageFormatError("ppm: tensor must have n3 == 3");
  std::ofstream out(path);
  if (!out) throw ImageFormatError("ppm: cannot open " + path + " for writing");
  out << "P3\n" << image.n2() << ' ' << image.n1() << "\n255\n";
  for (std::int64_t i = 0; i < image.n1(); ++i) {
    for (std::int64_t j = 0; j < image.n2(); ++j) {
      for (std::int64_t k = 0; k < 3; ++k) {
        const double v = std::clamp(image(i, j, k), 0.0, 1.0);
        out << static_cast<int>(std::lround(v * 255.0));
        out << (k == 2 ? (j + 1 == image.n2() ? '\n' : ' ') : ' ');
      }
    }
  }
}

}  // namespace tubal
