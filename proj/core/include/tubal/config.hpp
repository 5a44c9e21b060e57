#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubal/measure.hpp"
#include "tubal/solver.hpp"
#include "tubal/tensor3.hpp"

namespace tubal {

enum class ExperimentKind { phase, table, image, rip, budget };

std::string to_string(ExperimentKind k);
ExperimentKind kind_from_string(const std::string& s);

// Declarative experiment description. Which fields matter depends on `kind`:
//   phase  -- dims, ranks, distribution, sampling_rates, trials, noise_sigma
//   table  -- n_list, dims.n3, rank_fractions, rho_list, trials, noise_sigma
//   image  -- image_path, truncate_rank, m_grid, distribution, noise_sigma
//   rip    -- dims, ranks (first entry), distribution, m_grid, samples,
//             repetitions
//   budget -- dims, ranks, delta, epsilon, c_const
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::phase;
  Dims3 dims{10, 10, 5};
  std::vector<std::int64_t> ranks{1};
  Distribution distribution = Distribution::gaussian;
  std::vector<double> sampling_rates;
  std::vector<double> rho_list;
  std::vector<std::int64_t> m_grid;
  std::vector<std::int64_t> n_list;
  std::vector<double> rank_fractions{0.1, 0.2, 0.3};
  int trials = 50;
  double noise_sigma = 0.01;
  int samples = 100;
  int repetitions = 20;
  double delta = 0.5;
  double epsilon = 0.01;
  double c_const = 1.0;
  std::uint64_t master_seed = 42;
  std::string output_path = "out";
  std::string image_path;
  std::int64_t truncate_rank = 5;  // 0 disables pre-measurement truncation
  SolverConfig solver;

  void validate() const;
  bool operator==(const ExperimentConfig&) const = default;
};

inline bool operator==(const SolverConfig& a, const SolverConfig& b) {
  return a.lambda == b.lambda && a.max_iters == b.max_iters && a.tol == b.tol &&
         a.step_scale == b.step_scale && a.acceleration == b.acceleration &&
         a.continuation == b.continuation &&
         a.continuation_stages == b.continuation_stages;
}

// Plain-text key/value config with one optional [solver] section.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string emit_config(const ExperimentConfig& cfg);

// shortest round-trip decimal representation
std::string format_double(double v);

}  // namespace tubal
