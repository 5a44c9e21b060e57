#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "tubal/errors.hpp"

namespace tubal {

struct Dims3 {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n3 = 0;

  std::int64_t numel() const { return n1 * n2 * n3; }
  bool operator==(const Dims3&) const = default;
};

// Dense real third-order tensor. Layout is slice-major: frontal slice k is
// contiguous and column-major, so entry (i,j,k) lives at i + j*n1 + k*n1*n2.
// vec() of a tensor stacks columns slice by slice under the same layout.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::int64_t n1, std::int64_t n2, std::int64_t n3)
      : dims_{n1, n2, n3}, data_(static_cast<std::size_t>(n1 * n2 * n3), 0.0) {
    if (n1 < 1 || n2 < 1 || n3 < 1)
      throw InvalidConfig("Tensor3: dimensions must be positive");
  }
  explicit Tensor3(Dims3 d) : Tensor3(d.n1, d.n2, d.n3) {}

  const Dims3& dims() const { return dims_; }
  std::int64_t n1() const { return dims_.n1; }
  std::int64_t n2() const { return dims_.n2; }
  std::int64_t n3() const { return dims_.n3; }
  std::int64_t numel() const { return dims_.numel(); }

  double operator()(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return data_[static_cast<std::size_t>(i + j * dims_.n1 + k * dims_.n1 * dims_.n2)];
  }
  double& operator()(std::int64_t i, std::int64_t j, std::int64_t k) {
    return data_[static_cast<std::size_t>(i + j * dims_.n1 + k * dims_.n1 * dims_.n2)];
  }

  Eigen::Map<const Eigen::MatrixXd> slice(std::int64_t k) const {
    return {data_.data() + k * dims_.n1 * dims_.n2, dims_.n1, dims_.n2};
  }
  Eigen::Map<Eigen::MatrixXd> slice(std::int64_t k) {
    return {data_.data() + k * dims_.n1 * dims_.n2, dims_.n1, dims_.n2};
  }

  // vec view in the fixed layout
  Eigen::Map<const Eigen::VectorXd> vec() const {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }
  Eigen::Map<Eigen::VectorXd> vec() {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Tensor3&) const = default;

 private:
  Dims3 dims_;
  std::vector<double> data_;
};

// Mode-3 DFT representation: n3 complex n1 x n2 frontal slices.
// For a real origin tensor the slices obey conjugate symmetry:
// slice k == conj(slice n3-k) for k = 1..n3-1 (0-based).
class FourierTensor3 {
 public:
  FourierTensor3() = default;
  FourierTensor3(std::int64_t n1, std::int64_t n2, std::int64_t n3)
      : dims_{n1, n2, n3},
        slices_(static_cast<std::size_t>(n3), Eigen::MatrixXcd::Zero(n1, n2)) {}
  explicit FourierTensor3(Dims3 d) : FourierTensor3(d.n1, d.n2, d.n3) {}

  const Dims3& dims() const { return dims_; }
  const Eigen::MatrixXcd& slice(std::int64_t k) const {
    return slices_[static_cast<std::size_t>(k)];
  }
  Eigen::MatrixXcd& slice(std::int64_t k) {
    return slices_[static_cast<std::size_t>(k)];
  }

  double frobenius_norm() const;

  // max relative deviation from conjugate symmetry
  double symmetry_residual() const;

 private:
  Dims3 dims_;
  std::vector<Eigen::MatrixXcd> slices_;
};

// Structural operators (Table-style t-algebra building blocks).

Tensor3 zeros(std::int64_t n1, std::int64_t n2, std::int64_t n3);

// forward mode-3 DFT, unnormalized: slice k = sum_t X^(t) w^{t k}, w = exp(-2 pi i / n3)
FourierTensor3 dft_mode3(const Tensor3& x);

// inverse mode-3 DFT (carries the 1/n3 factor); throws SymmetryViolation when
// the imaginary residue of the inverse exceeds `tol` relative to the norm.
Tensor3 idft_mode3(const FourierTensor3& xf, double tol = 1e-9);

// vertical stack of the frontal slices: (n1*n3) x n2
Eigen::MatrixXd unfold(const Tensor3& x);

Tensor3 fold(const Eigen::MatrixXd& mat, Dims3 dims);

// block-circulant matrix, (n1*n3) x (n2*n3); block column 0 is the slices in
// order, each next block column is the cyclic downward shift
Eigen::MatrixXd bcirc(const Tensor3& x);

// slice-wise transpose with slices 2..n3 reversed
Tensor3 transpose_t(const Tensor3& x);

Tensor3 identity_tensor(std::int64_t n, std::int64_t n3);

double frobenius_norm(const Tensor3& x);

double inner_product(const Tensor3& a, const Tensor3& b);

}  // namespace tubal
