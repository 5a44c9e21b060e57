#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "tubal/t3f.hpp"

using namespace tubal;
using testing::random_tensor;

TEST_CASE("t3f: stream round trip is bit-exact") {
  const Tensor3 x = random_tensor(3, 5, 4, 21);
  std::stringstream buf;
  write_t3f(buf, x);
  CHECK(read_t3f(buf) == x);
}

TEST_CASE("t3f: header layout (magic + three u64 dims)") {
  const Tensor3 x = random_tensor(2, 3, 4, 22);
  std::stringstream buf;
  write_t3f(buf, x);
  const std::string bytes = buf.str();
  CHECK(bytes.substr(0, 4) == "T3F1");
  CHECK(bytes.size() == 4 + 3 * 8 + 2 * 3 * 4 * 8);
  CHECK(static_cast<unsigned char>(bytes[4]) == 2);   // n1, little-endian
  CHECK(static_cast<unsigned char>(bytes[12]) == 3);  // n2
  CHECK(static_cast<unsigned char>(bytes[20]) == 4);  // n3
}

TEST_CASE("t3f: bad magic is rejected") {
  std::stringstream buf;
  buf << "BAD!";
  CHECK_THROWS(read_t3f(buf));
}

TEST_CASE("t3f: file round trip") {
  const Tensor3 x = random_tensor(4, 4, 3, 23);
  const std::string path = "t3f_roundtrip_test.t3f";
  write_t3f(path, x);
  CHECK(read_t3f(path) == x);
  std::remove(path.c_str());
}
