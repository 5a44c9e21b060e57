#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tubal/rip.hpp"
#include "tubal/solver.hpp"
#include "tubal/t_algebra.hpp"

using namespace tubal;
using testing::random_tensor;

TEST_CASE("objective: zero tensor, lambda -> inf limit, formula oracle") {
  const Dims3 d{3, 3, 2};
  const MeasurementEnsemble e = make_ensemble(d, 6, Distribution::gaussian, 111);
  const Tensor3 x = random_tensor(3, 3, 2, 112);
  const Eigen::VectorXd y = apply(e, random_tensor(3, 3, 2, 113));

  CHECK(objective(e, y, zeros(3, 3, 2), 2.0) ==
        doctest::Approx(y.squaredNorm() / 4.0).epsilon(1e-14));

  CHECK(objective(e, y, x, 1e12) == doctest::Approx(tnn(x)).epsilon(1e-6));

  const double oracle = tnn(x) + (y - e.matrix() * x.vec()).squaredNorm() / (2.0 * 0.7);
  CHECK(std::abs(objective(e, y, x, 0.7) - oracle) <= 1e-10 * std::abs(oracle));
}

TEST_CASE("rel_error: exact, doubled, zero estimate, zero reference") {
  const Tensor3 x = random_tensor(3, 4, 2, 114);
  Tensor3 x2 = x;
  x2.vec() *= 2.0;
  CHECK(rel_error(x, x) == 0.0);
  CHECK(rel_error(x2, x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rel_error(zeros(3, 4, 2), x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(rel_error(x, zeros(3, 4, 2)), ZeroReference);
}

TEST_CASE("solve_rtnnm: y = 0 gives the zero minimizer") {
  const Dims3 d{4, 4, 2};
  const MeasurementEnsemble e = make_ensemble(d, 10, Distribution::gaussian, 115);
  SolverConfig cfg;
  cfg.lambda = 0.1;
  const SolveResult res = solve_rtnnm(e, Eigen::VectorXd::Zero(10), cfg);
  CHECK(frobenius_norm(res.x_hat) <= 1e-10);
}

TEST_CASE("solve_rtnnm: near-interpolation with orthogonal M recovers X") {
  const Dims3 d{4, 4, 2};
  const MeasurementEnsemble e(
      d, Eigen::MatrixXd::Identity(d.numel(), d.numel()));
  const Tensor3 x = sample_unit_low_tubal_rank(d, 2, 116);
  SolverConfig cfg;
  cfg.lambda = 1e-6;
  cfg.max_iters = 2000;
  const SolveResult res = solve_rtnnm(e, apply(e, x), cfg);
  CHECK(rel_error(res.x_hat, x) < 1e-3);
}

TEST_CASE("solve_rtnnm: Table-2 regime m = 210 recovers within 1e-3") {
  const Dims3 d{10, 10, 5};
  const Tensor3 x = sample_unit_low_tubal_rank(d, 1, 117);
  const MeasurementEnsemble e = make_ensemble(d, 210, Distribution::gaussian, 118);
  SolverConfig cfg;
  cfg.lambda = 1e-6;
  cfg.max_iters = 400;
  const Eigen::VectorXd y = noisy_measure(e, x, 1e-5, 119);
  const SolveResult res = solve_rtnnm(e, y, cfg);
  CHECK(rel_error(res.x_hat, x) < 1e-3);
}

TEST_CASE("monotone descent with acceleration and continuation off") {
  const Dims3 d{5, 5, 3};
  const Tensor3 x = sample_unit_low_tubal_rank(d, 1, 120);
  const MeasurementEnsemble e = make_ensemble(d, 40, Distribution::gaussian, 121);
  SolverConfig cfg;
  cfg.lambda = 0.05;
  cfg.acceleration = false;
  cfg.continuation = false;
  cfg.max_iters = 200;
  const SolveResult res = solve_rtnnm(e, apply(e, x), cfg);
  for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
    CHECK(res.objective_trace[i] <= res.objective_trace[i - 1] + 1e-12);
}

TEST_CASE("fixed-point residual at convergence") {
  const Dims3 d{5, 5, 3};
  const Tensor3 x = sample_unit_low_tubal_rank(d, 1, 122);
  const MeasurementEnsemble e = make_ensemble(d, 50, Distribution::gaussian, 123);
  SolverConfig cfg;
  cfg.lambda = 0.05;
  cfg.max_iters = 3000;
  cfg.tol = 1e-10;
  const SolveResult res = solve_rtnnm(e, apply(e, x), cfg);
  REQUIRE(res.converged);

  const double op_sq = 1.01 * operator_norm_sq(e);
  const double step = cfg.lambda / op_sq;
  Tensor3 w = res.x_hat;
  const Tensor3 grad = adjoint(e, apply(e, res.x_hat) - apply(e, x));
  w.vec() -= (step / cfg.lambda) * grad.vec();
  const Tensor3 fixed = tsvt(w, step);
  CHECK(rel_error(fixed, res.x_hat) <= cfg.tol * 1e4);
}

TEST_CASE("lambda path: residual nonincreasing as lambda decreases") {
  const Dims3 d{5, 5, 3};
  const Tensor3 x = sample_unit_low_tubal_rank(d, 2, 124);
  const MeasurementEnsemble e = make_ensemble(d, 60, Distribution::gaussian, 125);
  const Eigen::VectorXd y = noisy_measure(e, x, 0.01, 126);
  double prev_resid = std::numeric_limits<double>::infinity();
  for (double lambda : {1.0, 0.1, 0.01, 0.001}) {
    SolverConfig cfg;
    cfg.lambda = lambda;
    cfg.max_iters = 1000;
    const SolveResult res = solve_rtnnm(e, y, cfg);
    const double resid = (y - apply(e, res.x_hat)).norm();
    CHECK(resid <= prev_resid + 1e-8);
    prev_resid = resid;
  }
}

TEST_CASE("determinism: identical inputs give bit-identical x_hat") {
  const Dims3 d{4, 4, 2};
  const Tensor3 x = sample_unit_low_tubal_rank(d, 1, 127);
  const MeasurementEnsemble e = make_ensemble(d, 20, Distribution::bernoulli, 128);
  SolverConfig cfg;
  cfg.lambda = 0.01;
  const Eigen::VectorXd y = noisy_measure(e, x, 0.01, 129);
  CHECK(solve_rtnnm(e, y, cfg).x_hat == solve_rtnnm(e, y, cfg).x_hat);
}

TEST_CASE("config validation and dim mismatch") {
  const MeasurementEnsemble e =
      make_ensemble({3, 3, 2}, 5, Distribution::gaussian, 130);
  SolverConfig bad;
  bad.lambda = 0.0;
  CHECK_THROWS_AS(solve_rtnnm(e, Eigen::VectorXd::Zero(5), bad), InvalidConfig);
  SolverConfig cfg;
  CHECK_THROWS_AS(solve_rtnnm(e, Eigen::VectorXd::Zero(4), cfg), DimMismatch);
}
