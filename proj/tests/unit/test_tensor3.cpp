#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tubal/tensor3.hpp"

using namespace tubal;
using testing::random_dim;
using testing::random_tensor;

TEST_CASE("layout: entry (i,j,k) lives at i + j*n1 + k*n1*n2") {
  Tensor3 x(2, 3, 2);
  x(1, 2, 1) = 7.0;
  CHECK(x.data()[1 + 2 * 2 + 1 * 2 * 3] == 7.0);
  CHECK(x.vec()(1 + 2 * 2 + 1 * 2 * 3) == 7.0);
}

TEST_CASE("dft: n3 = 1 is the identity transform") {
  const Tensor3 x = random_tensor(3, 4, 1, 1);
  const FourierTensor3 xf = dft_mode3(x);
  CHECK((xf.slice(0) - x.slice(0)).norm() == 0.0);
}

TEST_CASE("dft: constant slices give n3*A in slice 0 and zeros elsewhere") {
  const Tensor3 a = random_tensor(3, 2, 1, 2);
  Tensor3 x(3, 2, 4);
  for (std::int64_t k = 0; k < 4; ++k) x.slice(k) = a.slice(0);
  const FourierTensor3 xf = dft_mode3(x);
  CHECK((xf.slice(0) - 4.0 * a.slice(0)).norm() < 1e-12);
  for (std::int64_t k = 1; k < 4; ++k) CHECK(xf.slice(k).norm() < 1e-12);
}

TEST_CASE("dft/idft round trip within 1e-12 on random dims in {1..8}^3") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n1 = random_dim(rng, 1, 8);
    const auto n2 = random_dim(rng, 1, 8);
    const auto n3 = random_dim(rng, 1, 8);
    const Tensor3 x = random_tensor(n1, n2, n3, 1000 + trial);
    const Tensor3 back = idft_mode3(dft_mode3(x));
    Tensor3 diff = back;
    diff.vec() -= x.vec();
    CHECK(frobenius_norm(diff) <= 1e-12 * frobenius_norm(x));
  }
}

TEST_CASE("idft: only slice 0 nonzero = n3*A gives all slices A") {
  const Tensor3 a = random_tensor(2, 2, 1, 3);
  FourierTensor3 f(2, 2, 3);
  f.slice(0) = 3.0 * a.slice(0);
  const Tensor3 x = idft_mode3(f);
  for (std::int64_t k = 0; k < 3; ++k)
    CHECK((x.slice(k) - a.slice(0)).norm() < 1e-12);
}

TEST_CASE("idft: zero Fourier tensor gives zero tensor") {
  const Tensor3 x = idft_mode3(FourierTensor3(2, 3, 4));
  CHECK(frobenius_norm(x) == 0.0);
}

TEST_CASE("idft rejects corrupted (asymmetric) Fourier data") {
  FourierTensor3 f(2, 2, 3);
  f.slice(1) = Eigen::MatrixXcd::Constant(2, 2, std::complex<double>(0, 1));
  CHECK_THROWS_AS(idft_mode3(f), SymmetryViolation);
}

TEST_CASE("Parseval: ||X||_F = (1/sqrt(n3)) ||Xbar||_F") {
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 x = random_tensor(4, 3, 5, 2000 + trial);
    const double lhs = frobenius_norm(x);
    const double rhs = dft_mode3(x).frobenius_norm() / std::sqrt(5.0);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * lhs);
  }
}

TEST_CASE("unfold: n3 = 1 returns the slice; slices stack vertically") {
  const Tensor3 x = random_tensor(2, 2, 2, 5);
  const Eigen::MatrixXd u = unfold(x);
  CHECK(u.rows() == 4);
  CHECK((u.topRows(2) - x.slice(0)).norm() == 0.0);
  CHECK((u.bottomRows(2) - x.slice(1)).norm() == 0.0);

  const Tensor3 y = random_tensor(3, 4, 1, 6);
  CHECK((unfold(y) - y.slice(0)).norm() == 0.0);
}

TEST_CASE("fold(unfold(X)) is bit-equal to X") {
  const Tensor3 x = random_tensor(3, 5, 4, 7);
  CHECK(fold(unfold(x), x.dims()) == x);
}

TEST_CASE("bcirc: n3 = 1 and n3 = 2 explicit structure") {
  const Tensor3 x1 = random_tensor(2, 3, 1, 8);
  CHECK((bcirc(x1) - x1.slice(0)).norm() == 0.0);

  const Tensor3 x2 = random_tensor(2, 2, 2, 9);
  const Eigen::MatrixXd c = bcirc(x2);
  CHECK((c.block(0, 0, 2, 2) - x2.slice(0)).norm() == 0.0);
  CHECK((c.block(0, 2, 2, 2) - x2.slice(1)).norm() == 0.0);
  CHECK((c.block(2, 0, 2, 2) - x2.slice(1)).norm() == 0.0);
  CHECK((c.block(2, 2, 2, 2) - x2.slice(0)).norm() == 0.0);
}

TEST_CASE("bcirc: n3 = 3 first block-row is [A, C, B]") {
  const Tensor3 x = random_tensor(2, 2, 3, 10);
  const Eigen::MatrixXd c = bcirc(x);
  CHECK((c.block(0, 0, 2, 2) - x.slice(0)).norm() == 0.0);
  CHECK((c.block(0, 2, 2, 2) - x.slice(2)).norm() == 0.0);
  CHECK((c.block(0, 4, 2, 2) - x.slice(1)).norm() == 0.0);
}

TEST_CASE("bcirc(transpose_t(X)) = bcirc(X)^T") {
  const Tensor3 x = random_tensor(3, 4, 5, 11);
  CHECK((bcirc(transpose_t(x)) - bcirc(x).transpose()).norm() < 1e-12);
}

TEST_CASE("transpose_t: n3 = 1 matrix transpose; identity self-transpose") {
  const Tensor3 x = random_tensor(2, 3, 1, 12);
  CHECK((transpose_t(x).slice(0) - x.slice(0).transpose()).norm() == 0.0);

  const Tensor3 id = identity_tensor(3, 4);
  CHECK(transpose_t(id) == id);
}

TEST_CASE("transpose_t is an involution (bit-equal)") {
  const Tensor3 x = random_tensor(3, 4, 5, 13);
  CHECK(transpose_t(transpose_t(x)) == x);
}

TEST_CASE("identity_tensor: structure and Fourier slices") {
  const Tensor3 id = identity_tensor(2, 1);
  CHECK(id(0, 0, 0) == 1.0);
  CHECK(id(1, 1, 0) == 1.0);
  CHECK(id(0, 1, 0) == 0.0);

  const FourierTensor3 f = dft_mode3(identity_tensor(3, 4));
  for (std::int64_t k = 0; k < 4; ++k)
    CHECK((f.slice(k) - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("frobenius_norm: zero tensor and identity tensor") {
  CHECK(frobenius_norm(zeros(3, 2, 4)) == 0.0);
  CHECK(frobenius_norm(identity_tensor(9, 3)) == doctest::Approx(3.0));
}
