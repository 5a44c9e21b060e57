#include "tubal/t_algebra.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace tubal {

namespace {

struct SliceSvd {
  Eigen::MatrixXcd u;
  Eigen::VectorXd s;
  Eigen::MatrixXcd v;
};

SliceSvd svd_slice(const Eigen::MatrixXcd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw NumericalFailure("tsvd: slice SVD did not converge");
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

// SVD of every Fourier slice. Slices k > n3/2 are filled by conjugating the
// mirror slice, which keeps the factor tensors exactly conjugate-symmetric.
std::vector<SliceSvd> fourier_svds(const Tensor3& x) {
  const auto d = x.dims();
  const FourierTensor3 xf = dft_mode3(x);
  std::vector<SliceSvd> out(static_cast<std::size_t>(d.n3));
  for (std::int64_t k = 0; k <= d.n3 / 2; ++k)
    out[static_cast<std::size_t>(k)] = svd_slice(xf.slice(k));
  for (std::int64_t k = d.n3 / 2 + 1; k < d.n3; ++k) {
    const auto& mirror = out[static_cast<std::size_t>(d.n3 - k)];
    out[static_cast<std::size_t>(k)] = {mirror.u.conjugate(), mirror.s,
                                        mirror.v.conjugate()};
  }
  return out;
}

double max_singular_value(const std::vector<SliceSvd>& svds) {
  double top = 0.0;
  for (const auto& s : svds)
    if (s.s.size() > 0) top = std::max(top, s.s(0));
  return top;
}

std::int64_t rank_from_svds(const std::vector<SliceSvd>& svds, double tol) {
  if (tol < 0.0) tol = 1e-10 * max_singular_value(svds);
  std::int64_t r = 0;
  for (const auto& s : svds)
    for (Eigen::Index i = 0; i < s.s.size(); ++i)
      if (s.s(i) > tol) r = std::max<std::int64_t>(r, i + 1);
  return r;
}

// inverse mode-3 DFT of a complex slice stack known to be conjugate-symmetric
Tensor3 idft_slices(const std::vector<Eigen::MatrixXcd>& slices, Dims3 d) {
  FourierTensor3 f(d);
  for (std::int64_t k = 0; k < d.n3; ++k)
    f.slice(k) = slices[static_cast<std::size_t>(k)];
  return idft_mode3(f, 1e-6);
}

}  // namespace

Tensor3 tprod(const Tensor3& a, const Tensor3& b) {
  if (a.n2() != b.n1() || a.n3() != b.n3())
    throw DimMismatch("tprod: inner dims or n3 do not match");
  const FourierTensor3 af = dft_mode3(a);
  const FourierTensor3 bf = dft_mode3(b);
  const Dims3 d{a.n1(), b.n2(), a.n3()};
  std::vector<Eigen::MatrixXcd> out(static_cast<std::size_t>(d.n3));
  for (std::int64_t k = 0; k < d.n3; ++k)
    out[static_cast<std::size_t>(k)] = af.slice(k) * bf.slice(k);
  return idft_slices(out, d);
}

TSvdFactors tsvd(const Tensor3& x, TsvdMode mode) {
  const auto d = x.dims();
  const auto svds = fourier_svds(x);
  const std::int64_t kmin = std::min(d.n1, d.n2);
  const std::int64_t r =
      mode == TsvdMode::skinny ? std::max<std::int64_t>(rank_from_svds(svds, -1.0), 1)
                               : kmin;

  std::vector<Eigen::MatrixXcd> uf(static_cast<std::size_t>(d.n3));
  std::vector<Eigen::MatrixXcd> vf(static_cast<std::size_t>(d.n3));
  for (std::int64_t k = 0; k < d.n3; ++k) {
    uf[static_cast<std::size_t>(k)] = svds[static_cast<std::size_t>(k)].u.leftCols(r);
    vf[static_cast<std::size_t>(k)] = svds[static_cast<std::size_t>(k)].v.leftCols(r);
  }

  TSvdFactors out;
  out.r = r;
  out.u = idft_slices(uf, {d.n1, r, d.n3});
  out.v = idft_slices(vf, {d.n2, r, d.n3});

  // S is assembled tube by tube so off-diagonal entries stay exactly zero
  out.s = Tensor3(r, r, d.n3);
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(d.n3);
  for (std::int64_t i = 0; i < r; ++i) {
    for (std::int64_t t = 0; t < d.n3; ++t) {
      double acc = 0.0;
      for (std::int64_t k = 0; k < d.n3; ++k) {
        const double sik = i < svds[static_cast<std::size_t>(k)].s.size()
                               ? svds[static_cast<std::size_t>(k)].s(i)
                               : 0.0;
        acc += sik * std::cos(theta * static_cast<double>((t * k) % d.n3));
      }
      out.s(i, i, t) = acc / static_cast<double>(d.n3);
    }
  }
  return out;
}

std::int64_t tubal_rank(const Tensor3& x, double tol) {
  return rank_from_svds(fourier_svds(x), tol);
}

double tnn(const Tensor3& x) {
  const auto svds = fourier_svds(x);
  double acc = 0.0;
  for (const auto& s : svds) acc += s.s.sum();
  return acc / static_cast<double>(x.n3());
}

double tnn_tsvd_path(const Tensor3& x) {
  const TSvdFactors f = tsvd(x, TsvdMode::skinny);
  double acc = 0.0;
  for (std::int64_t i = 0; i < f.r; ++i) acc += f.s(i, i, 0);
  return acc;
}

Tensor3 tsvt(const Tensor3& y, double tau) {
  if (!(tau > 0.0)) throw InvalidConfig("tsvt: tau must be positive");
  const auto d = y.dims();
  const FourierTensor3 yf = dft_mode3(y);
  std::vector<Eigen::MatrixXcd> out(static_cast<std::size_t>(d.n3));
  for (std::int64_t k = 0; k <= d.n3 / 2; ++k) {
    const SliceSvd svd = svd_slice(yf.slice(k));
    const Eigen::VectorXd shrunk = (svd.s.array() - tau).max(0.0);
    out[static_cast<std::size_t>(k)] =
        svd.u * shrunk.asDiagonal() * svd.v.adjoint();
  }
  for (std::int64_t k = d.n3 / 2 + 1; k < d.n3; ++k)
    out[static_cast<std::size_t>(k)] =
        out[static_cast<std::size_t>(d.n3 - k)].conjugate();
  return idft_slices(out, d);
}

Tensor3 truncate_tubal_rank(const Tensor3& x, std::int64_t r) {
  if (r < 1) throw InvalidRank("truncate_tubal_rank: r must be >= 1");
  const auto d = x.dims();
  const auto svds = fourier_svds(x);
  std::vector<Eigen::MatrixXcd> out(static_cast<std::size_t>(d.n3));
  for (std::int64_t k = 0; k < d.n3; ++k) {
    const auto& svd = svds[static_cast<std::size_t>(k)];
    const Eigen::Index keep = std::min<Eigen::Index>(r, svd.s.size());
    out[static_cast<std::size_t>(k)] = svd.u.leftCols(keep) *
                                       svd.s.head(keep).asDiagonal() *
                                       svd.v.leftCols(keep).adjoint();
  }
  return idft_slices(out, d);
}

SingularTubes singular_tubes(const Tensor3& x) {
  const auto svds = fourier_svds(x);
  const auto r = static_cast<std::size_t>(std::min(x.n1(), x.n2()));
  SingularTubes out;
  out.tubes.assign(r, std::vector<double>(static_cast<std::size_t>(x.n3()), 0.0));
  for (std::int64_t k = 0; k < x.n3(); ++k) {
    const auto& s = svds[static_cast<std::size_t>(k)].s;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      out.tubes[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = s(i);
  }
  return out;
}

}  // namespace tubal
