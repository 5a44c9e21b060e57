#include <doctest.h>

#include "tubal/config.hpp"

using namespace tubal;

TEST_CASE("config: parse(emit(cfg)) == cfg") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::table;
  cfg.dims = {20, 20, 5};
  cfg.ranks = {1, 2, 4};
  cfg.distribution = Distribution::bernoulli;
  cfg.sampling_rates = {0.1, 0.25, 0.5};
  cfg.rho_list = {1.0, 1.5, 2.0};
  cfg.m_grid = {105, 210};
  cfg.n_list = {10, 20, 30};
  cfg.rank_fractions = {0.1, 0.2, 0.3};
  cfg.trials = 17;
  cfg.noise_sigma = 0.012345678901234567;
  cfg.samples = 33;
  cfg.repetitions = 9;
  cfg.delta = 0.5;
  cfg.epsilon = 0.001;
  cfg.c_const = 2.5;
  cfg.master_seed = 0xdeadbeefcafeULL;
  cfg.output_path = "results/table";
  cfg.image_path = "data/logo.ppm";
  cfg.truncate_rank = 7;
  cfg.solver.lambda = 1e-6;
  cfg.solver.max_iters = 321;
  cfg.solver.tol = 1e-9;
  cfg.solver.step_scale = 0.5;
  cfg.solver.acceleration = false;
  cfg.solver.continuation = true;
  cfg.solver.continuation_stages = 5;

  CHECK(parse_config(emit_config(cfg)) == cfg);
}

TEST_CASE("config: comments, blank lines, and whitespace are tolerated") {
  const ExperimentConfig cfg = parse_config(
      "# a comment\n"
      "\n"
      "kind = budget   # trailing comment\n"
      "  dims =  10 10 5  \n"
      "ranks = 1\n"
      "delta = 1\n"
      "epsilon = 0.01\n"
      "c_const = 1\n");
  CHECK(cfg.kind == ExperimentKind::budget);
  CHECK(cfg.dims == Dims3{10, 10, 5});
  cfg.validate();
}

TEST_CASE("config: unknown keys, sections, and bad values are rejected") {
  CHECK_THROWS_AS(parse_config("bogus = 1\n"), InvalidConfig);
  CHECK_THROWS_AS(parse_config("[plotting]\n"), InvalidConfig);
  CHECK_THROWS_AS(parse_config("kind = fourier\n"), InvalidConfig);
  CHECK_THROWS_AS(parse_config("trials = seven\n"), InvalidConfig);
  CHECK_THROWS_AS(parse_config("dims = 10 10\n"), InvalidConfig);
  CHECK_THROWS_AS(parse_config("no equals sign here\n"), InvalidConfig);
}

TEST_CASE("config: validate enforces per-kind requirements") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::image;
  cfg.image_path = "";
  cfg.m_grid = {100};
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);

  cfg.kind = ExperimentKind::phase;
  cfg.sampling_rates = {};
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);

  cfg.sampling_rates = {0.2};
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
}

TEST_CASE("format_double round-trips shortest representations") {
  for (double v : {0.1, 1.0 / 3.0, 1e-7, 105.0, 3.7967e-5}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(105.0) == "105");
}

TEST_CASE("kind names round-trip") {
  for (auto k : {ExperimentKind::phase, ExperimentKind::table, ExperimentKind::image,
                 ExperimentKind::rip, ExperimentKind::budget})
    CHECK(kind_from_string(to_string(k)) == k);
}
