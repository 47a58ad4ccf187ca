#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pe/bench.hpp"

namespace pe {

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> strategy;
  std::optional<int> pursuers;
  std::optional<double> speed_ratio;
  std::optional<std::string> capture_rule;
  std::optional<double> replan_level1;
  std::optional<int> threads;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool need_out = true) {
  cmd->add_option("--config", f.config_path, "JSON config file");
  auto* out = cmd->add_option("--out", f.out_dir, "output directory");
  if (need_out) out->capture_default_str();
  cmd->add_option("--seed", f.seed, "base seed");
  cmd->add_option("--trials", f.trials, "trials per scenario cell");
  cmd->add_option("--strategy", f.strategy, "cb|pp|gut");
  cmd->add_option("--pursuers", f.pursuers, "pursuer count");
  cmd->add_option("--speed-ratio", f.speed_ratio, "V_p : V_e");
  cmd->add_option("--capture-rule", f.capture_rule, "max|sum");
  cmd->add_option("--replan-level1", f.replan_level1,
                  "level-1 replan period in seconds (0 = off)");
  cmd->add_option("--threads", f.threads, "worker threads");
}

ExperimentConfig build_config(const CommonFlags& f, bool single_cell) {
  ExperimentConfig cfg;
  if (!f.config_path.empty()) cfg = load_config(f.config_path);
  if (f.seed) cfg.base.base_seed = *f.seed;
  if (f.trials) cfg.base.trials = *f.trials;
  if (f.capture_rule)
    cfg.base.capture_rule = capture_rule_from_string(*f.capture_rule);
  if (f.replan_level1) cfg.base.replan.level1_period = *f.replan_level1;
  if (f.threads) cfg.threads = *f.threads;
  if (f.strategy) {
    cfg.base.strategy = strategy_from_string(*f.strategy);
    cfg.strategies = {cfg.base.strategy};
  }
  if (f.pursuers) {
    cfg.base.pursuer_count = *f.pursuers;
    cfg.pursuer_counts = {*f.pursuers};
  }
  if (f.speed_ratio) {
    cfg.base.speed_ratio = *f.speed_ratio;
    cfg.speed_ratios = {*f.speed_ratio};
  }
  if (single_cell) {
    cfg.strategies = {cfg.base.strategy};
    cfg.pursuer_counts = {cfg.base.pursuer_count};
    cfg.speed_ratios = {cfg.base.speed_ratio};
  }
  cfg.validate();
  return cfg;
}

void print_summary(const ExperimentResult& result) {
  for (const auto& cell : result.cells) {
    std::cout << to_string(cell.config.strategy) << " " << std::noshowpoint
              << cell.config.pursuer_count << "v1 ratio "
              << cell.config.speed_ratio << ": capture rate "
              << cell.stats.capture_rate << ", mean time "
              << cell.stats.time_all.mean << " s, mean energy "
              << cell.stats.energy.mean << "\n";
  }
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Pursuit-evasion benchmark: GUT vs constant-bearing and "
               "pure-pursuit teams"};
  app.require_subcommand(1);

  CommonFlags run_f, sweep_f, replay_f;
  std::string report_out = "out";

  auto* run = app.add_subcommand("run", "run one scenario cell");
  add_common(run, run_f);
  auto* sweep = app.add_subcommand(
      "sweep", "run the strategies x pursuer counts x speed ratios grid");
  add_common(sweep, sweep_f);
  auto* replay = app.add_subcommand(
      "replay", "re-simulate from logged seeds and diff against trials.csv");
  add_common(replay, replay_f);
  auto* report =
      app.add_subcommand("report", "rebuild summary.csv and charts from trials.csv");
  report->add_option("--out", report_out, "directory with trials.csv")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed() || sweep->parsed()) {
      const CommonFlags& f = run->parsed() ? run_f : sweep_f;
      ExperimentConfig cfg = build_config(f, run->parsed());
      ExperimentResult result = run_experiment(cfg);
      write_reports(result, f.out_dir);
      print_summary(result);
      std::cout << "reports written to " << f.out_dir << "\n";
    } else if (replay->parsed()) {
      ExperimentConfig cfg = build_config(replay_f, false);
      int diff = replay_diff(cfg, replay_f.out_dir);
      std::cout << "replay diff: " << diff << " row(s)\n";
      if (diff != 0) return 1;
    } else if (report->parsed()) {
      regenerate_reports(report_out);
      std::cout << "reports regenerated in " << report_out << "\n";
    }
  } catch (const ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace pe
