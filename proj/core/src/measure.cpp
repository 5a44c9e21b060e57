#include "tubal/measure.hpp"

#include <cmath>

#include "tubal/errors.hpp"
#include "tubal/rng.hpp"

namespace tubal {

std::string to_string(Distribution d) {
  switch (d) {
    case Distribution::gaussian: return "gaussian";
    case Distribution::bernoulli: return "bernoulli";
    case Distribution::uniform_bounded: return "uniform_bounded";
  }
  return "?";
}

Distribution distribution_from_string(const std::string& s) {
  if (s == "gaussian") return Distribution::gaussian;
  if (s == "bernoulli") return Distribution::bernoulli;
  if (s == "uniform_bounded") return Distribution::uniform_bounded;
  throw InvalidConfig("unknown distribution: " + s);
}

MeasurementEnsemble::MeasurementEnsemble(Dims3 dims, std::int64_t m,
                                         Distribution distribution,
                                         std::uint64_t seed)
    : dims_(dims), m_(m), distribution_(distribution), seed_(seed) {
  if (m < 1) throw InvalidConfig("MeasurementEnsemble: m must be >= 1");
  if (dims.n1 < 1 || dims.n2 < 1 || dims.n3 < 1)
    throw InvalidConfig("MeasurementEnsemble: dims must be positive");
  const std::int64_t n = dims.numel();
  entries_.resize(m, n);
  Rng rng(derive_seed(seed, 0x4d454153ULL));  // ensemble entry stream
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
  const double bound = std::sqrt(3.0 / static_cast<double>(m));
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t i = 0; i < m; ++i) {
      double v = 0.0;
      switch (distribution) {
        case Distribution::gaussian: v = inv_sqrt_m * rng.normal(); break;
        case Distribution::bernoulli: v = inv_sqrt_m * rng.rademacher(); break;
        case Distribution::uniform_bounded: v = rng.uniform(-bound, bound); break;
      }
      entries_(i, j) = v;
    }
  }
}

MeasurementEnsemble::MeasurementEnsemble(Dims3 dims, Eigen::MatrixXd entries,
                                         Distribution distribution,
                                         std::uint64_t seed)
    : dims_(dims),
      m_(entries.rows()),
      distribution_(distribution),
      seed_(seed),
      entries_(std::move(entries)) {
  if (m_ < 1 || entries_.cols() != dims.numel())
    throw InvalidConfig("MeasurementEnsemble: matrix shape must be m x numel");
}

MeasurementEnsemble make_ensemble(Dims3 dims, std::int64_t m,
                                  Distribution distribution, std::uint64_t seed) {
  return MeasurementEnsemble(dims, m, distribution, seed);
}

Eigen::VectorXd apply(const MeasurementEnsemble& e, const Tensor3& x) {
  if (!(x.dims() == e.dims()))
    throw DimMismatch("apply: tensor dims do not match ensemble dims");
  return e.matrix() * x.vec();
}

Tensor3 adjoint(const MeasurementEnsemble& e, const Eigen::VectorXd& y) {
  if (y.size() != e.m())
    throw DimMismatch("adjoint: vector length does not match m");
  Tensor3 out(e.dims());
  out.vec() = e.matrix().transpose() * y;
  return out;
}

double operator_norm_sq(const MeasurementEnsemble& e, int iters) {
  if (iters < 1) iters = 1;
  const auto& mat = e.matrix();
  // deterministic start derived from the ensemble seed
  Rng rng(derive_seed(e.seed(), 0x504f574552ULL));
  Eigen::VectorXd v(mat.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.normal();
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXd w = mat.transpose() * (mat * v);
    lambda = w.norm();
    if (lambda == 0.0) return 0.0;
    v = w / lambda;
  }
  return lambda;
}

Eigen::VectorXd noisy_measure(const MeasurementEnsemble& e, const Tensor3& x,
                              double noise_sigma, std::uint64_t seed) {
  if (noise_sigma < 0.0) throw InvalidConfig("noisy_measure: sigma must be >= 0");
  Eigen::VectorXd y = apply(e, x);
  if (noise_sigma > 0.0) {
    Rng rng(derive_seed(seed, 0x4e4f495345ULL));  // noise stream
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) += noise_sigma * rng.normal();
  }
  return y;
}

EnergyCheck expected_energy_check(const Tensor3& x, Distribution distribution,
                                  int trials, std::uint64_t seed, std::int64_t m) {
  if (trials < 2) throw InvalidConfig("expected_energy_check: trials must be >= 2");
  const double norm = frobenius_norm(x);
  if (std::abs(norm - 1.0) > 1e-8)
    throw NormNotUnit("expected_energy_check: X must have unit Frobenius norm");
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    MeasurementEnsemble e(x.dims(), m, distribution, derive_seed(seed, t));
    const double energy = apply(e, x).squaredNorm();
    sum += energy;
    sum_sq += energy * energy;
  }
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

DiagonalizedMeasurement::DiagonalizedMeasurement(const Tensor3& x, std::int64_t m)
    : x_(x.vec()), m_(m) {
  if (m < 1) throw InvalidConfig("DiagonalizedMeasurement: m must be >= 1");
}

double DiagonalizedMeasurement::frobenius_norm() const { return x_.norm(); }

double DiagonalizedMeasurement::operator_norm() const {
  return x_.norm() / std::sqrt(static_cast<double>(m_));
}

double DiagonalizedMeasurement::schatten4_pow4() const {
  const double n2 = x_.squaredNorm();
  return n2 * n2 / static_cast<double>(m_);
}

double DiagonalizedMeasurement::gram_scale() const { return x_.squaredNorm(); }

Eigen::VectorXd DiagonalizedMeasurement::apply(const Eigen::VectorXd& zeta) const {
  const Eigen::Index n = x_.size();
  if (zeta.size() != n * m_)
    throw DimMismatch("DiagonalizedMeasurement::apply: zeta length must be n*m");
  Eigen::VectorXd out(m_);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m_));
  for (std::int64_t i = 0; i < m_; ++i)
    out(i) = scale * x_.dot(zeta.segment(i * n, n));
  return out;
}

}  // namespace tubal
