#include "tubal/rip.hpp"

#include <algorithm>
#include <cmath>

#include "tubal/errors.hpp"
#include "tubal/rng.hpp"
#include "tubal/t_algebra.hpp"

namespace tubal {

namespace {

void check_rank(Dims3 dims, std::int64_t r) {
  if (r < 1 || r > std::min(dims.n1, dims.n2))
    throw InvalidRank("rank must satisfy 1 <= r <= min(n1, n2)");
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  // linear interpolation between order statistics (R type-7)
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

Tensor3 sample_unit_low_tubal_rank(Dims3 dims, std::int64_t r, std::uint64_t seed) {
  check_rank(dims, r);
  Rng rng(derive_seed(seed, 0x57725341ULL));  // W_r sample stream
  Tensor3 a(dims.n1, r, dims.n3);
  Tensor3 b(r, dims.n2, dims.n3);
  for (double& v : a.data()) v = rng.normal();
  for (double& v : b.data()) v = rng.normal();
  Tensor3 x = tprod(a, b);
  const double norm = frobenius_norm(x);
  if (norm == 0.0) throw NumericalFailure("sample_unit_low_tubal_rank: zero draw");
  for (double& v : x.data()) v /= norm;
  return x;
}

RipEstimate estimate_delta(const MeasurementEnsemble& e, std::int64_t r,
                           int samples, std::uint64_t seed) {
  check_rank(e.dims(), r);
  if (samples < 1) throw InvalidConfig("estimate_delta: samples must be >= 1");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Tensor3 x = sample_unit_low_tubal_rank(e.dims(), r, derive_seed(seed, i));
    const double dev = std::abs(apply(e, x).squaredNorm() - 1.0);
    worst = std::max(worst, dev);
  }
  return {worst, r, samples, seed, worst};
}

BudgetReport theorem1_budget(Dims3 dims, std::int64_t r, double delta,
                             double epsilon, double c) {
  check_rank(dims, r);
  if (!(delta > 0.0) || delta > 1.0 || !(epsilon > 0.0) || epsilon >= 1.0 || !(c > 0.0))
    throw InvalidConfig("theorem1_budget: need 0 < delta <= 1, 0 < epsilon < 1, C > 0");
  const double dim_term =
      static_cast<double>(r * (dims.n1 + dims.n2 + 1) * dims.n3);
  const double raw = c / (delta * delta) * std::max(dim_term, std::log(1.0 / epsilon));
  BudgetReport out;
  out.dims = dims;
  out.r = r;
  out.delta = delta;
  out.epsilon = epsilon;
  out.c = c;
  out.m_bound = static_cast<std::int64_t>(std::ceil(raw));
  out.covering_log = covering_log_bound(dims, r, 1.0);
  out.gamma2_bound = gamma2_upper_bound(dims, r, out.m_bound, 1.0);
  out.dof = dof(dims, r);
  return out;
}

double covering_log_bound(Dims3 dims, std::int64_t r, double eps_net) {
  check_rank(dims, r);
  if (!(eps_net > 0.0) || eps_net > 1.0)
    throw InvalidConfig("covering_log_bound: eps_net must be in (0, 1]");
  return static_cast<double>(r * (dims.n1 + dims.n2 + 1) * dims.n3) *
         std::log(9.0 / eps_net);
}

double gamma2_upper_bound(Dims3 dims, std::int64_t r, std::int64_t m,
                          double c_prime) {
  check_rank(dims, r);
  if (m < 1 || !(c_prime > 0.0))
    throw InvalidConfig("gamma2_upper_bound: need m >= 1 and c' > 0");
  return c_prime * std::sqrt(static_cast<double>(r * (dims.n1 + dims.n2 + 1) * dims.n3) /
                             static_cast<double>(m));
}

std::int64_t dof(Dims3 dims, std::int64_t r) {
  check_rank(dims, r);
  return r * (dims.n1 + dims.n2 - r) * dims.n3;
}

std::vector<DeltaCurveRow> delta_vs_m_curve(Dims3 dims, std::int64_t r,
                                            Distribution distribution,
                                            const std::vector<std::int64_t>& m_grid,
                                            int samples, int repetitions,
                                            std::uint64_t seed) {
  if (m_grid.empty() || !std::is_sorted(m_grid.begin(), m_grid.end()))
    throw InvalidConfig("delta_vs_m_curve: m_grid must be nonempty ascending");
  if (repetitions < 1) throw InvalidConfig("delta_vs_m_curve: repetitions >= 1");
  std::vector<DeltaCurveRow> out;
  out.reserve(m_grid.size());
  for (std::size_t gi = 0; gi < m_grid.size(); ++gi) {
    std::vector<double> deltas(static_cast<std::size_t>(repetitions));
    for (int rep = 0; rep < repetitions; ++rep) {
      const std::uint64_t rep_seed = derive_seed(seed, gi * 100000ULL + rep);
      MeasurementEnsemble e(dims, m_grid[gi], distribution, rep_seed);
      deltas[static_cast<std::size_t>(rep)] =
          estimate_delta(e, r, samples, derive_seed(rep_seed, 1)).delta_hat;
    }
    std::sort(deltas.begin(), deltas.end());
    out.push_back({m_grid[gi], quantile_sorted(deltas, 0.5),
                   quantile_sorted(deltas, 0.1), quantile_sorted(deltas, 0.9)});
  }
  return out;
}

}  // namespace tubal
