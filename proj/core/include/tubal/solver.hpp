#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tubal/measure.hpp"
#include "tubal/tensor3.hpp"

namespace tubal {

struct SolverConfig {
  double lambda = 1e-3;
  int max_iters = 500;
  double tol = 1e-7;          // relative-change stopping threshold
  double step_scale = 1.0;    // safety factor in (0, 1] on 1/L
  bool acceleration = true;
  // Homotopy on lambda: starts from a large value and decreases geometrically
  // to cfg.lambda, warm-starting each stage. Plain proximal gradient from
  // zero needs O(L/lambda) iterations for the small lambdas the experiments
  // use; continuation removes that dependence. Off reproduces the plain
  // single-lambda method.
  bool continuation = true;
  int continuation_stages = 8;

  void validate() const;
};

struct SolveResult {
  Tensor3 x_hat;
  int iterations = 0;
  std::vector<double> objective_trace;  // objective at cfg.lambda per iterate
  double rel_change_final = 0.0;
  bool converged = false;
};

// ||X||_tnn + (1/2 lambda) ||y - M vec(X)||_2^2
double objective(const MeasurementEnsemble& e, const Eigen::VectorXd& y,
                 const Tensor3& x, double lambda);

// ||x_hat - x||_F / ||x||_F
double rel_error(const Tensor3& x_hat, const Tensor3& x);

// Accelerated proximal gradient (FISTA) for the regularized nuclear-norm
// objective; gradient step on the quadratic term with step 1/L,
// L = operator_norm_sq(E)/lambda, then tsvt at the step size. Returns the
// best iterate by objective.
SolveResult solve_rtnnm(const MeasurementEnsemble& e, const Eigen::VectorXd& y,
                        const SolverConfig& cfg);

}  // namespace tubal
