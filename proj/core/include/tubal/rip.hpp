#pragma once

#include <cstdint>
#include <vector>

#include "tubal/measure.hpp"
#include "tubal/tensor3.hpp"

namespace tubal {

// Empirical lower bound on the restricted isometry constant delta_r: the
// sup over the unit low-tubal-rank set is sampled, never computed exactly,
// so delta_hat never exceeds the true constant.
struct RipEstimate {
  double delta_hat = 0.0;
  std::int64_t r = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double per_sample_max_dev = 0.0;  // == delta_hat, recorded explicitly
};

// Closed-form quantities from the measurement-bound analysis.
struct BudgetReport {
  Dims3 dims;
  std::int64_t r = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  double c = 0.0;
  std::int64_t m_bound = 0;    // ceil(C * delta^-2 * max{r(n1+n2+1)n3, ln(1/eps)})
  double covering_log = 0.0;   // log covering number bound at eps_net = 1
  double gamma2_bound = 0.0;   // sqrt(r(n1+n2+1)n3 / m_bound)
  std::int64_t dof = 0;        // r(n1+n2-r)n3
};

struct DeltaCurveRow {
  std::int64_t m = 0;
  double median = 0.0;
  double q10 = 0.0;
  double q90 = 0.0;
};

// Unit-Frobenius tensor of tubal rank <= r (== r almost surely), built as a
// normalized t-product of i.i.d. Gaussian factor tensors.
Tensor3 sample_unit_low_tubal_rank(Dims3 dims, std::int64_t r, std::uint64_t seed);

// delta_hat = max over samples of | ||M(X_i)||_2^2 - 1 |. Sample i is drawn
// from the stream derive_seed(seed, i), so enlarging `samples` with the same
// seed only appends samples (nested monotonicity).
RipEstimate estimate_delta(const MeasurementEnsemble& e, std::int64_t r,
                           int samples, std::uint64_t seed);

BudgetReport theorem1_budget(Dims3 dims, std::int64_t r, double delta,
                             double epsilon, double c);

// r(n1+n2+1)n3 * ln(9/eps_net)
double covering_log_bound(Dims3 dims, std::int64_t r, double eps_net);

// c' * sqrt(r(n1+n2+1)n3 / m)
double gamma2_upper_bound(Dims3 dims, std::int64_t r, std::int64_t m,
                          double c_prime = 1.0);

// r(n1+n2-r)n3
std::int64_t dof(Dims3 dims, std::int64_t r);

// For each m in the grid, runs estimate_delta over `repetitions` fresh
// ensembles and reports median and 10/90 percentiles of delta_hat.
std::vector<DeltaCurveRow> delta_vs_m_curve(Dims3 dims, std::int64_t r,
                                            Distribution distribution,
                                            const std::vector<std::int64_t>& m_grid,
                                            int samples, int repetitions,
                                            std::uint64_t seed);

}  // namespace tubal
