#include "tubal/tensor3.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace tubal {

double FourierTensor3::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& s : slices_) acc += s.squaredNorm();
  return std::sqrt(acc);
}

double FourierTensor3::symmetry_residual() const {
  const auto n3 = dims_.n3;
  double scale = frobenius_norm();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (std::int64_t k = 1; k < n3; ++k) {
    const double dev = (slice(k) - slice(n3 - k).conjugate()).norm();
    worst = std::max(worst, dev);
  }
  return worst / scale;
}

Tensor3 zeros(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  return Tensor3(n1, n2, n3);
}

FourierTensor3 dft_mode3(const Tensor3& x) {
  const auto d = x.dims();
  FourierTensor3 out(d);
  const double theta = -2.0 * std::numbers::pi / static_cast<double>(d.n3);
  for (std::int64_t k = 0; k < d.n3; ++k) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d.n1, d.n2);
    for (std::int64_t t = 0; t < d.n3; ++t) {
      // w^{t k} with wrap-around to keep the angle small
      const auto e = static_cast<double>((t * k) % d.n3);
      const std::complex<double> w = std::polar(1.0, theta * e);
      acc += w * x.slice(t);
    }
    out.slice(k) = acc;
  }
  return out;
}

Tensor3 idft_mode3(const FourierTensor3& xf, double tol) {
  const auto d = xf.dims();
  Tensor3 out(d);
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(d.n3);
  const double scale = 1.0 / static_cast<double>(d.n3);
  const double fnorm = xf.frobenius_norm();
  double worst_imag = 0.0;
  for (std::int64_t t = 0; t < d.n3; ++t) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d.n1, d.n2);
    for (std::int64_t k = 0; k < d.n3; ++k) {
      const auto e = static_cast<double>((t * k) % d.n3);
      const std::complex<double> w = std::polar(1.0, theta * e);
      acc += w * xf.slice(k);
    }
    acc *= scale;
    worst_imag = std::max(worst_imag, acc.imag().norm());
    out.slice(t) = acc.real();
  }
  if (fnorm > 0.0 && worst_imag > tol * fnorm)
    throw SymmetryViolation("idft_mode3: imaginary residue " +
                            std::to_string(worst_imag / fnorm) +
                            " exceeds tolerance; Fourier data is not "
                            "conjugate-symmetric");
  return out;
}

Eigen::MatrixXd unfold(const Tensor3& x) {
  const auto d = x.dims();
  Eigen::MatrixXd out(d.n1 * d.n3, d.n2);
  for (std::int64_t k = 0; k < d.n3; ++k)
    out.middleRows(k * d.n1, d.n1) = x.slice(k);
  return out;
}

Tensor3 fold(const Eigen::MatrixXd& mat, Dims3 dims) {
  if (mat.rows() != dims.n1 * dims.n3 || mat.cols() != dims.n2)
    throw DimMismatch("fold: matrix shape does not match target dims");
  Tensor3 out(dims);
  for (std::int64_t k = 0; k < dims.n3; ++k)
    out.slice(k) = mat.middleRows(k * dims.n1, dims.n1);
  return out;
}

Eigen::MatrixXd bcirc(const Tensor3& x) {
  const auto d = x.dims();
  Eigen::MatrixXd out(d.n1 * d.n3, d.n2 * d.n3);
  for (std::int64_t c = 0; c < d.n3; ++c) {
    for (std::int64_t r = 0; r < d.n3; ++r) {
      // block (r, c) holds slice (r - c) mod n3
      const std::int64_t k = (r - c + d.n3) % d.n3;
      out.block(r * d.n1, c * d.n2, d.n1, d.n2) = x.slice(k);
    }
  }
  return out;
}

Tensor3 transpose_t(const Tensor3& x) {
  const auto d = x.dims();
  Tensor3 out(d.n2, d.n1, d.n3);
  out.slice(0) = x.slice(0).transpose();
  for (std::int64_t k = 1; k < d.n3; ++k)
    out.slice(k) = x.slice(d.n3 - k).transpose();
  return out;
}

Tensor3 identity_tensor(std::int64_t n, std::int64_t n3) {
  if (n < 1 || n3 < 1) throw InvalidConfig("identity_tensor: n, n3 must be >= 1");
  Tensor3 out(n, n, n3);
  out.slice(0) = Eigen::MatrixXd::Identity(n, n);
  return out;
}

double frobenius_norm(const Tensor3& x) { return x.vec().norm(); }

double inner_product(const Tensor3& a, const Tensor3& b) {
  if (!(a.dims() == b.dims()))
    throw DimMismatch("inner_product: dims differ");
  return a.vec().dot(b.vec());
}

}  // namespace tubal
