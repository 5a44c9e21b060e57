#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "tubal/config.hpp"
#include "tubal/errors.hpp"
#include "tubal/experiment.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
  bool trials_set = false;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--config", opts.config_path, "experiment config file")
      ->required();
  sub->add_option("--out", opts.out_dir, "output directory")->required();
  sub->add_option("--seed", opts.seed, "override master_seed")
      ->each([&](const std::string&) { opts.seed_set = true; });
  sub->add_option("--trials", opts.trials, "override trials")
      ->each([&](const std::string&) { opts.trials_set = true; });
}

int run(tubal::ExperimentKind kind, const CommonOpts& opts) {
  tubal::ExperimentConfig cfg;
  try {
    cfg = tubal::load_config(opts.config_path);
    if (cfg.kind != kind)
      throw tubal::InvalidConfig("config kind '" + tubal::to_string(cfg.kind) +
                                 "' does not match subcommand '" +
                                 tubal::to_string(kind) + "'");
    if (opts.seed_set) cfg.master_seed = opts.seed;
    if (opts.trials_set) cfg.trials = opts.trials;
    cfg.validate();
  } catch (const tubal::InvalidConfig& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return 2;
  }
  try {
    tubal::run_experiment(cfg, opts.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  std::cout << "wrote " << tubal::to_string(kind) << " results to "
            << opts.out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-tubal-rank tensor recovery experiment harness"};
  app.require_subcommand(1);

  const std::pair<const char*, tubal::ExperimentKind> subs[] = {
      {"phase", tubal::ExperimentKind::phase},
      {"table", tubal::ExperimentKind::table},
      {"image", tubal::ExperimentKind::image},
      {"rip", tubal::ExperimentKind::rip},
      {"budget", tubal::ExperimentKind::budget},
  };

  CommonOpts opts;
  tubal::ExperimentKind chosen{};
  for (const auto& [name, kind] : subs) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, opts);
    sub->callback([&chosen, kind = kind] { chosen = kind; });
  }

  CLI11_PARSE(app, argc, argv);
  return run(chosen, opts);
}
