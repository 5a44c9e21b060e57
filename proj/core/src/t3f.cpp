#include "tubal/t3f.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <ostream>

#include "tubal/errors.hpp"

namespace tubal {

static_assert(std::endian::native == std::endian::little,
              "T3F i/o assumes a little-endian host");

namespace {
constexpr char kMagic[4] = {'T', '3', 'F', '1'};
}

void write_t3f(std::ostream& out, const Tensor3& x) {
  out.write(kMagic, 4);
  const std::uint64_t dims[3] = {static_cast<std::uint64_t>(x.n1()),
                                 static_cast<std::uint64_t>(x.n2()),
                                 static_cast<std::uint64_t>(x.n3())};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  out.write(reinterpret_cast<const char*>(x.data().data()),
            static_cast<std::streamsize>(x.data().size() * sizeof(double)));
  if (!out) throw std::runtime_error("write_t3f: stream write failed");
}

void write_t3f(const std::string& path, const Tensor3& x) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_t3f: cannot open " + path);
  write_t3f(f, x);
}

Tensor3 read_t3f(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string_view(magic, 4) != std::string_view(kMagic, 4))
    throw std::runtime_error("read_t3f: bad magic, not a T3F file");
  std::uint64_t dims[3];
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  if (!in) throw std::runtime_error("read_t3f: truncated header");
  Tensor3 x(static_cast<std::int64_t>(dims[0]), static_cast<std::int64_t>(dims[1]),
            static_cast<std::int64_t>(dims[2]));
  in.read(reinterpret_cast<char*>(x.data().data()),
          static_cast<std::streamsize>(x.data().size() * sizeof(double)));
  if (!in) throw std::runtime_error("read_t3f: truncated payload");
  return x;
}

Tensor3 read_t3f(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_t3f: cannot open " + path);
  return read_t3f(f);
}

}  // namespace tubal
