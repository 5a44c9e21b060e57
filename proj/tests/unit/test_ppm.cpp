#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "tubal/ppm.hpp"

using namespace tubal;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ppm: P3 read with comments and arbitrary whitespace") {
  TempFile f("ppm_p3_test.ppm");
  std::ofstream(f.path) << "P3 # magic\n# full comment line\n2 1\n255\n"
                        << "255 0 0   0 255 0\n";
  const Tensor3 img = read_ppm(f.path);
  CHECK(img.dims() == Dims3{1, 2, 3});
  CHECK(img(0, 0, 0) == doctest::Approx(1.0));
  CHECK(img(0, 0, 1) == doctest::Approx(0.0));
  CHECK(img(0, 1, 1) == doctest::Approx(1.0));
}

TEST_CASE("ppm: P6 binary read matches P3 of the same pixels") {
  TempFile f3("ppm_eq_test.ppm");
  TempFile f6("ppm_eq_test6.ppm");
  std::ofstream(f3.path) << "P3\n2 2\n255\n10 20 30 40 50 60\n70 80 90 100 110 120\n";
  {
    std::ofstream out(f6.path, std::ios::binary);
    out << "P6\n2 2\n255\n";
    for (unsigned char c : {10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 110, 120})
      out.put(static_cast<char>(c));
  }
  CHECK(read_ppm(f3.path) == read_ppm(f6.path));
}

TEST_CASE("ppm: write/read round trip at 8-bit resolution") {
  Tensor3 img(3, 4, 3);
  for (std::int64_t i = 0; i < 3; ++i)
    for (std::int64_t j = 0; j < 4; ++j)
      for (std::int64_t k = 0; k < 3; ++k)
        img(i, j, k) = static_cast<double>((i * 4 + j) * 3 + k) / 255.0 * 7.0;
  for (double& v : img.data()) v = std::min(v, 1.0);
  TempFile f("ppm_rt_test.ppm");
  write_ppm(f.path, img);
  const Tensor3 back = read_ppm(f.path);
  for (std::size_t i = 0; i < img.data().size(); ++i)
    CHECK(back.data()[i] ==
          doctest::Approx(std::clamp(img.data()[i], 0.0, 1.0)).epsilon(1.0 / 255.0));
}

TEST_CASE("ppm: format errors") {
  TempFile f("ppm_bad_test.ppm");
  std::ofstream(f.path) << "P5\n2 2\n255\n";
  CHECK_THROWS_AS(read_ppm(f.path), ImageFormatError);
  std::ofstream(f.path) << "P3\n0 2\n255\n";
  CHECK_THROWS_AS(read_ppm(f.path), ImageFormatError);
  CHECK_THROWS_AS(read_ppm("does_not_exist.ppm"), ImageFormatError);
  CHECK_THROWS_AS(write_ppm(f.path, Tensor3(2, 2, 2)), ImageFormatError);
}
