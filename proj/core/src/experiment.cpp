#include "tubal/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tubal/errors.hpp"
#include "tubal/ppm.hpp"
#include "tubal/rng.hpp"
#include "tubal/solver.hpp"
#include "tubal/t3f.hpp"
#include "tubal/t_algebra.hpp"

namespace tubal {

namespace {

constexpr std::uint64_t kEnsembleStream = 1;
constexpr std::uint64_t kGroundTruthStream = 2;
constexpr std::uint64_t kNoiseStream = 3;

// one independent (ensemble, ground truth, noise) seed triple per trial
std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t cell, int trial) {
  return derive_seed(master_seed,
                     static_cast<std::uint64_t>(cell) * 1000003u +
                         static_cast<std::uint64_t>(trial));
}

struct TrialOutcome {
  double rel = 0.0;
  std::uint64_t seed = 0;
};

TrialOutcome run_recovery_trial(Dims3 dims, std::int64_t r, std::int64_t m,
                                const ExperimentConfig& cfg, std::int64_t cell,
                                int trial) {
  TrialOutcome out;
  out.seed = trial_seed(cfg.master_seed, cell, trial);
  const Tensor3 x =
      sample_unit_low_tubal_rank(dims, r, derive_seed(out.seed, kGroundTruthStream));
  const MeasurementEnsemble e = make_ensemble(
      dims, m, cfg.distribution, derive_seed(out.seed, kEnsembleStream));
  const Eigen::VectorXd y =
      noisy_measure(e, x, cfg.noise_sigma, derive_seed(out.seed, kNoiseStream));
  const SolveResult res = solve_rtnnm(e, y, cfg.solver);
  out.rel = rel_error(res.x_hat, x);
  return out;
}

void ensure_dir(const std::string& out_dir) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

void write_gnuplot_stub(const std::string& dir, const std::string& name,
                        const std::string& body) {
  write_text(join_path(dir, name),
             "# gnuplot stub; run: gnuplot " + name + "\n" + body);
}

}  // namespace

std::string csv_timestamp_line() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return std::string("# generated ") + buf;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << csv_timestamp_line() << '\n' << header << '\n';
  for (const auto& row : rows) out << row << '\n';
}

PhaseResult run_phase(const ExperimentConfig& cfg, const std::string& out_dir) {
  if (cfg.kind != ExperimentKind::phase)
    throw InvalidConfig("run_phase: cfg.kind != phase");
  cfg.validate();

  const Dims3 d = cfg.dims;
  const auto total = static_cast<double>(d.numel());
  PhaseResult res;
  std::int64_t cell = 0;
  for (std::int64_t r : cfg.ranks) {
    const double theory_rate =
        static_cast<double>(r * (d.n1 + d.n2 + 1) * d.n3) / total;
    for (double rate : cfg.sampling_rates) {
      const auto m = std::max<std::int64_t>(1, std::llround(rate * total));
      int successes = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        const TrialOutcome o = run_recovery_trial(d, r, m, cfg, cell, t);
        TrialRecord rec;
        rec.experiment = "phase";
        rec.dims = d;
        rec.r = r;
        rec.m = m;
        rec.trial = t;
        rec.seed = o.seed;
        rec.rel_error = o.rel;
        rec.success = o.rel < TrialRecord::success_threshold;
        res.trials.push_back(rec);
        if (rec.success) ++successes;
      }
      res.rows.push_back({r, rate, m,
                          static_cast<double>(successes) / cfg.trials,
                          theory_rate});
      ++cell;
    }
  }
  std::sort(res.rows.begin(), res.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.r, a.m) < std::tie(b.r, b.m);
  });

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    std::vector<std::string> rows;
    for (const auto& row : res.rows) {
      std::ostringstream s;
      s << row.r << ',' << format_double(row.sampling_rate) << ',' << row.m << ','
        << format_double(row.success_rate) << ',' << format_double(row.theory_rate);
      rows.push_back(s.str());
    }
    write_csv(join_path(out_dir, "phase.csv"),
              "r,sampling_rate,m,success_rate,theory_rate", rows);
    write_gnuplot_stub(out_dir, "phase.gp",
                       "set datafile separator ','\n"
                       "set xlabel 'sampling rate'\n"
                       "set ylabel 'success rate'\n"
                       "plot 'phase.csv' using 2:4 with linespoints title 'empirical', \\\n"
                       "     'phase.csv' using 5:(0):(0):(1) with vectors nohead title 'theory'\n");
  }
  return res;
}

TableResult run_table(const ExperimentConfig& cfg, const std::string& out_dir) {
  if (cfg.kind != ExperimentKind::table)
    throw InvalidConfig("run_table: cfg.kind != table");
  cfg.validate();

  TableResult res;
  std::int64_t cell = 0;
  for (std::int64_t n : cfg.n_list) {
    for (double frac : cfg.rank_fractions) {
      const auto r =
          std::max<std::int64_t>(1, std::llround(frac * static_cast<double>(n)));
      const Dims3 d{n, n, cfg.dims.n3};
      for (double rho : cfg.rho_list) {
        const auto m = std::max<std::int64_t>(
            1, std::llround(rho * static_cast<double>(r * (2 * n + 1) * d.n3)));
        double acc = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
          const TrialOutcome o = run_recovery_trial(d, r, m, cfg, cell, t);
          TrialRecord rec;
          rec.experiment = "table";
          rec.dims = d;
          rec.r = r;
          rec.m = m;
          rec.trial = t;
          rec.seed = o.seed;
          rec.rel_error = o.rel;
          rec.success = o.rel < TrialRecord::success_threshold;
          res.trials.push_back(rec);
          acc += o.rel;
        }
        res.rows.push_back({n, r, rho, m, acc / cfg.trials});
        ++cell;
      }
    }
  }
  std::sort(res.rows.begin(), res.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.r, a.m) < std::tie(b.n, b.r, b.m);
  });

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    std::vector<std::string> rows;
    for (const auto& row : res.rows) {
      std::ostringstream s;
      s << row.n << ',' << row.r << ',' << format_double(row.rho) << ',' << row.m
        << ',' << format_double(row.mean_rel_error);
      rows.push_back(s.str());
    }
    write_csv(join_path(out_dir, "table.csv"), "n,r,rho,m,mean_rel_error", rows);
  }
  return res;
}

ImageResult run_image(const ExperimentConfig& cfg, const std::string& out_dir) {
  if (cfg.kind != ExperimentKind::image)
    throw InvalidConfig("run_image: cfg.kind != image");
  cfg.validate();

  const Tensor3 raw = read_ppm(cfg.image_path);
  ImageResult res;
  res.ground_truth =
      cfg.truncate_rank > 0 ? truncate_tubal_rank(raw, cfg.truncate_rank) : raw;
  const Tensor3& x = res.ground_truth;

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    write_ppm(join_path(out_dir, "ground_truth.ppm"), x);
    write_t3f(join_path(out_dir, "ground_truth.t3f"), x);
  }

  std::vector<std::int64_t> m_grid = cfg.m_grid;
  std::sort(m_grid.begin(), m_grid.end());
  std::int64_t cell = 0;
  for (std::int64_t m : m_grid) {
    const std::uint64_t seed = trial_seed(cfg.master_seed, cell, 0);
    const MeasurementEnsemble e = make_ensemble(
        x.dims(), m, cfg.distribution, derive_seed(seed, kEnsembleStream));
    const Eigen::VectorXd y =
        noisy_measure(e, x, cfg.noise_sigma, derive_seed(seed, kNoiseStream));
    const SolveResult sol = solve_rtnnm(e, y, cfg.solver);
    const double rel = rel_error(sol.x_hat, x);

    std::string file;
    if (!out_dir.empty()) {
      file = "recovered_m" + std::to_string(m) + ".ppm";
      write_ppm(join_path(out_dir, file), sol.x_hat);
      write_t3f(join_path(out_dir, "recovered_m" + std::to_string(m) + ".t3f"),
                sol.x_hat);
    }
    res.rows.push_back({m, rel, file});
    ++cell;
  }

  if (!out_dir.empty()) {
    std::vector<std::string> rows;
    for (const auto& row : res.rows)
      rows.push_back(std::to_string(row.m) + ',' + format_double(row.rel_error));
    write_csv(join_path(out_dir, "image.csv"), "m,rel_error", rows);
    write_gnuplot_stub(out_dir, "image.gp",
                       "set datafile separator ','\n"
                       "set xlabel 'm'\n"
                       "set ylabel 'relative error'\n"
                       "set logscale y\n"
                       "plot 'image.csv' using 1:2 with linespoints title 'RTNNM'\n");
  }
  return res;
}

std::vector<DeltaCurveRow> run_rip(const ExperimentConfig& cfg,
                                   const std::string& out_dir) {
  if (cfg.kind != ExperimentKind::rip)
    throw InvalidConfig("run_rip: cfg.kind != rip");
  cfg.validate();

  std::vector<std::int64_t> m_grid = cfg.m_grid;
  std::sort(m_grid.begin(), m_grid.end());
  const std::int64_t r = cfg.ranks.front();
  const auto rows = delta_vs_m_curve(cfg.dims, r, cfg.distribution, m_grid,
                                     cfg.samples, cfg.repetitions,
                                     cfg.master_seed);

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    std::vector<std::string> lines;
    for (const auto& row : rows) {
      std::ostringstream s;
      s << row.m << ',' << r << ',' << cfg.dims.n1 << ',' << cfg.dims.n2 << ','
        << cfg.dims.n3 << ',' << to_string(cfg.distribution) << ','
        << format_double(row.median) << ',' << format_double(row.q10) << ','
        << format_double(row.q90) << ',' << cfg.master_seed;
      lines.push_back(s.str());
    }
    write_csv(join_path(out_dir, "rip.csv"),
              "m,r,n1,n2,n3,distribution,median_delta_hat,q10,q90,seed", lines);
    write_gnuplot_stub(out_dir, "rip.gp",
                       "set datafile separator ','\n"
                       "set logscale xy\n"
                       "set xlabel 'm'\n"
                       "set ylabel 'delta_hat'\n"
                       "plot 'rip.csv' using 1:7 with linespoints title 'median', \\\n"
                       "     'rip.csv' using 1:8:9 with filledcurves fs transparent solid 0.2 title '10-90%'\n");
  }
  return rows;
}

std::vector<BudgetReport> run_budget(const ExperimentConfig& cfg,
                                     const std::string& out_dir) {
  if (cfg.kind != ExperimentKind::budget)
    throw InvalidConfig("run_budget: cfg.kind != budget");
  cfg.validate();

  std::vector<BudgetReport> reports;
  for (std::int64_t r : cfg.ranks)
    reports.push_back(
        theorem1_budget(cfg.dims, r, cfg.delta, cfg.epsilon, cfg.c_const));

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    std::vector<std::string> rows;
    std::ostringstream txt;
    for (const auto& b : reports) {
      std::ostringstream s;
      s << b.dims.n1 << ',' << b.dims.n2 << ',' << b.dims.n3 << ',' << b.r << ','
        << format_double(b.delta) << ',' << format_double(b.epsilon) << ','
        << format_double(b.c) << ',' << b.m_bound << ','
        << format_double(b.covering_log) << ',' << format_double(b.gamma2_bound)
        << ',' << b.dof;
      rows.push_back(s.str());
      txt << "dims " << b.dims.n1 << 'x' << b.dims.n2 << 'x' << b.dims.n3
          << ", r = " << b.r << ", delta = " << format_double(b.delta)
          << ", epsilon = " << format_double(b.epsilon)
          << ", C = " << format_double(b.c) << ":\n"
          << "  measurement bound m >= " << b.m_bound << '\n'
          << "  covering log bound   " << format_double(b.covering_log) << '\n'
          << "  gamma2 upper bound   " << format_double(b.gamma2_bound) << '\n'
          << "  degrees of freedom   " << b.dof << "\n\n";
    }
    write_csv(join_path(out_dir, "budget.csv"),
              "n1,n2,n3,r,delta,epsilon,c,m_bound,covering_log,gamma2_bound,dof",
              rows);
    write_text(join_path(out_dir, "budget.txt"), txt.str());
  }
  return reports;
}

void run_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
  switch (cfg.kind) {
    case ExperimentKind::phase: run_phase(cfg, out_dir); return;
    case ExperimentKind::table: run_table(cfg, out_dir); return;
    case ExperimentKind::image: run_image(cfg, out_dir); return;
    case ExperimentKind::rip: run_rip(cfg, out_dir); return;
    case ExperimentKind::budget: run_budget(cfg, out_dir); return;
  }
  throw InvalidConfig("run_experiment: unknown kind");
}

}  // namespace tubal
