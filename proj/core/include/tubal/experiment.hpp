#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubal/config.hpp"
#include "tubal/rip.hpp"
#include "tubal/tensor3.hpp"

namespace tubal {

// Per-trial result row. success is defined as rel_error < 1e-3.
struct TrialRecord {
  std::string experiment;
  Dims3 dims;
  std::int64_t r = 0;
  std::int64_t m = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double rel_error = 0.0;
  bool success = false;
  double wall_time = 0.0;  // seconds; informational only, never written to CSV

  static constexpr double success_threshold = 1e-3;
};

struct PhaseRow {
  std::int64_t r = 0;
  double sampling_rate = 0.0;
  std::int64_t m = 0;
  double success_rate = 0.0;
  double theory_rate = 0.0;  // r(n1+n2+1)n3 / (n1 n2 n3)
};

struct TableRow {
  std::int64_t n = 0;
  std::int64_t r = 0;
  double rho = 0.0;
  std::int64_t m = 0;
  double mean_rel_error = 0.0;
};

struct ImageRow {
  std::int64_t m = 0;
  double rel_error = 0.0;
  std::string output_file;
};

struct PhaseResult {
  std::vector<PhaseRow> rows;
  std::vector<TrialRecord> trials;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::vector<TrialRecord> trials;
};

struct ImageResult {
  std::vector<ImageRow> rows;
  Tensor3 ground_truth;  // post-truncation reference
};

// Experiment drivers. Each runs the full grid described by cfg and, given a
// non-empty out_dir, writes <kind>.csv, a gnuplot stub where a plot makes
// sense, and any auxiliary artifacts (recovered images, T3F tensors).
PhaseResult run_phase(const ExperimentConfig& cfg, const std::string& out_dir);
TableResult run_table(const ExperimentConfig& cfg, const std::string& out_dir);
ImageResult run_image(const ExperimentConfig& cfg, const std::string& out_dir);
std::vector<DeltaCurveRow> run_rip(const ExperimentConfig& cfg,
                                   const std::string& out_dir);
std::vector<BudgetReport> run_budget(const ExperimentConfig& cfg,
                                     const std::string& out_dir);

// Dispatch on cfg.kind; used by the CLI.
void run_experiment(const ExperimentConfig& cfg, const std::string& out_dir);

// CSV layer: header row, '.' decimal, one leading '#' timestamp comment that
// reproducibility comparisons must strip.
std::string csv_timestamp_line();
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);

}  // namespace tubal
