#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "tubal/tensor3.hpp"

namespace tubal {

enum class Distribution { gaussian, bernoulli, uniform_bounded };

std::string to_string(Distribution d);
Distribution distribution_from_string(const std::string& s);

// Seeded dense sub-Gaussian measurement operator M: m x (n1*n2*n3).
//   gaussian        -- i.i.d. N(0, 1/m)
//   bernoulli       -- +-1/sqrt(m) with equal probability
//   uniform_bounded -- uniform on [-sqrt(3/m), sqrt(3/m)] (variance 1/m)
// The same (dims, m, distribution, seed) always regenerates bit-identical
// entries; entries are drawn column-major from a single splitmix64 stream.
class MeasurementEnsemble {
 public:
  MeasurementEnsemble(Dims3 dims, std::int64_t m, Distribution distribution,
                      std::uint64_t seed);

  // wraps an explicit matrix (diagnostics: isometries, sign flips, ...)
  MeasurementEnsemble(Dims3 dims, Eigen::MatrixXd entries,
                      Distribution distribution = Distribution::gaussian,
                      std::uint64_t seed = 0);

  const Dims3& dims() const { return dims_; }
  std::int64_t m() const { return m_; }
  Distribution distribution() const { return distribution_; }
  std::uint64_t seed() const { return seed_; }
  const Eigen::MatrixXd& matrix() const { return entries_; }

 private:
  Dims3 dims_;
  std::int64_t m_;
  Distribution distribution_;
  std::uint64_t seed_;
  Eigen::MatrixXd entries_;
};

MeasurementEnsemble make_ensemble(Dims3 dims, std::int64_t m,
                                  Distribution distribution, std::uint64_t seed);

// y = M vec(X)
Eigen::VectorXd apply(const MeasurementEnsemble& e, const Tensor3& x);

// tensor whose vectorization is M^T y
Tensor3 adjoint(const MeasurementEnsemble& e, const Eigen::VectorXd& y);

// power-iteration estimate of sigma_max(M)^2
double operator_norm_sq(const MeasurementEnsemble& e, int iters = 100);

// apply() plus i.i.d. Gaussian noise with standard deviation noise_sigma
Eigen::VectorXd noisy_measure(const MeasurementEnsemble& e, const Tensor3& x,
                              double noise_sigma, std::uint64_t seed);

struct EnergyCheck {
  double mean = 0.0;
  double stderr_ = 0.0;
};

// Monte-Carlo estimate of E ||M(X)||_2^2 over `trials` fresh ensembles for a
// unit-norm X; the mean tends to ||X||_F^2 = 1. `m` is the measurement count
// of each draw (the expectation does not depend on it).
EnergyCheck expected_energy_check(const Tensor3& x, Distribution distribution,
                                  int trials, std::uint64_t seed,
                                  std::int64_t m = 8);

// Block-diagonal lift D_X of a fixed tensor (one x^T block per measurement,
// scaled by 1/sqrt(m)); kept implicit as (vec(X), m). M(X) = D_X zeta with
// zeta the concatenation of sqrt(m) times the rows of M.
class DiagonalizedMeasurement {
 public:
  DiagonalizedMeasurement(const Tensor3& x, std::int64_t m);

  std::int64_t m() const { return m_; }
  const Eigen::VectorXd& x() const { return x_; }

  double frobenius_norm() const;        // = ||x||_2
  double operator_norm() const;         // = ||x||_2 / sqrt(m)
  double schatten4_pow4() const;        // = ||x||_2^4 / m
  // m * D_X D_X^T is ||x||^2 * I_m; returns that scalar multiple
  double gram_scale() const;

  // D_X zeta for zeta of length n*m
  Eigen::VectorXd apply(const Eigen::VectorXd& zeta) const;

 private:
  Eigen::VectorXd x_;
  std::int64_t m_;
};

}  // namespace tubal
