#include "tubal/solver.hpp"

#include <cmath>

#include "tubal/errors.hpp"
#include "tubal/t_algebra.hpp"

namespace tubal {

void SolverConfig::validate() const {
  if (!(lambda > 0.0)) throw InvalidConfig("solver: lambda must be positive");
  if (!(tol > 0.0) || tol >= 1.0) throw InvalidConfig("solver: tol must be in (0, 1)");
  if (!(step_scale > 0.0) || step_scale > 1.0)
    throw InvalidConfig("solver: step_scale must be in (0, 1]");
  if (max_iters < 1) throw InvalidConfig("solver: max_iters must be >= 1");
  if (continuation_stages < 1)
    throw InvalidConfig("solver: continuation_stages must be >= 1");
}

double objective(const MeasurementEnsemble& e, const Eigen::VectorXd& y,
                 const Tensor3& x, double lambda) {
  if (!(x.dims() == e.dims()) || y.size() != e.m())
    throw DimMismatch("objective: dims do not match ensemble");
  const double resid = (y - apply(e, x)).squaredNorm();
  return tnn(x) + resid / (2.0 * lambda);
}

double rel_error(const Tensor3& x_hat, const Tensor3& x) {
  const double ref = frobenius_norm(x);
  if (ref == 0.0) throw ZeroReference("rel_error: reference tensor is zero");
  if (!(x_hat.dims() == x.dims())) throw DimMismatch("rel_error: dims differ");
  Tensor3 diff = x_hat;
  diff.vec() -= x.vec();
  return frobenius_norm(diff) / ref;
}

SolveResult solve_rtnnm(const MeasurementEnsemble& e, const Eigen::VectorXd& y,
                        const SolverConfig& cfg) {
  cfg.validate();
  if (y.size() != e.m()) throw DimMismatch("solve_rtnnm: length(y) != m");

  // padded so the estimated 1/L step is a valid majorizer
  const double op_sq = 1.01 * operator_norm_sq(e);

  // lambda homotopy schedule, geometric from ~||y|| down to cfg.lambda
  std::vector<double> lambdas;
  const double lambda_hi = std::max(cfg.lambda, y.norm());
  if (cfg.continuation && lambda_hi > cfg.lambda && cfg.continuation_stages > 1) {
    const int stages = cfg.continuation_stages;
    const double ratio = std::pow(cfg.lambda / lambda_hi, 1.0 / (stages - 1));
    double lam = lambda_hi;
    for (int s = 0; s < stages; ++s, lam *= ratio) lambdas.push_back(lam);
    lambdas.back() = cfg.lambda;
  } else {
    lambdas.push_back(cfg.lambda);
  }

  SolveResult res;
  Tensor3 x(e.dims());  // X_0 = 0
  Tensor3 best = x;
  double best_obj = objective(e, y, x, cfg.lambda);
  res.objective_trace.push_back(best_obj);

  for (double lam : lambdas) {
    const double step = cfg.step_scale * lam / op_sq;
    Tensor3 z = x;
    double t = 1.0;
    bool stage_converged = false;
    for (int it = 0; it < cfg.max_iters; ++it) {
      // gradient of the smooth part at z
      Eigen::VectorXd resid = apply(e, z) - y;
      Tensor3 grad = adjoint(e, resid);
      Tensor3 w = z;
      w.vec() -= (step / lam) * grad.vec();
      Tensor3 xn = tsvt(w, step);

      const double obj = objective(e, y, xn, cfg.lambda);
      if (!std::isfinite(obj))
        throw NonFinite("solve_rtnnm: objective became non-finite");
      res.objective_trace.push_back(obj);
      if (obj < best_obj) {
        best_obj = obj;
        best = xn;
      }

      Tensor3 diff = xn;
      diff.vec() -= x.vec();
      const double rel_change =
          frobenius_norm(diff) / std::max(1.0, frobenius_norm(x));
      res.rel_change_final = rel_change;
      ++res.iterations;

      if (cfg.acceleration) {
        const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        z = xn;
        z.vec() += ((t - 1.0) / tn) * (xn.vec() - x.vec());
        t = tn;
      } else {
        z = xn;
      }
      x = xn;
      if (rel_change < cfg.tol) {
        stage_converged = true;
        break;
      }
    }
    res.converged = stage_converged;
  }

  res.x_hat = best;
  return res;
}

}  // namespace tubal
