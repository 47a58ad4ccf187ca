#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pe/evader.hpp"
#include "pe/gut.hpp"
#include "pe/params.hpp"
#include "pe/world.hpp"

namespace pe {

enum class Strategy { CB, PP, GUT };

const char* to_string(Strategy s);
const char* to_string(CaptureRule r);
Strategy strategy_from_string(const std::string& s);       // throws ConfigInvalid
CaptureRule capture_rule_from_string(const std::string& s);  // throws ConfigInvalid

// One scenario cell: a strategy, a team size and a speed ratio, plus
// everything needed to make its trials reproducible.
struct ScenarioConfig {
  int pursuer_count = 3;
  double speed_ratio = 1.5;   // V_p : V_e
  double evader_speed = 0.1;  // m/s
  Strategy strategy = Strategy::GUT;
  Arena arena{3.2, 2.0};
  double d_capture = 0.15;
  CaptureRule capture_rule = CaptureRule::Max;
  double dt = 0.033;
  double max_time = 300.0;
  int trials = 10;
  std::uint64_t base_seed = 42;
  UtilityParams utility;
  EvaderConfig evader;
  ReplanConfig replan;

  double pursuer_speed() const { return speed_ratio * evader_speed; }
  void validate() const;  // throws ConfigInvalid
};

// One GUT epoch as logged to decisions.csv.
struct DecisionRecord {
  double time = 0.0;
  Shape formation = Shape::Circle;
  Tactic tactic = Tactic::PP;
  std::string l1_row, l1_col, l2_row, l2_col;
  double l1_gap = 0.0, l2_gap = 0.0;
  std::array<double, 8> l1_payoffs{};  // a row-major, then b row-major
  std::array<double, 8> l2_payoffs{};
};

struct TrajectoryRow {
  double time = 0.0;
  int agent = 0;  // pursuer index, or -1 for the evader
  Vec2 position;
  Vec2 velocity;
  double energy = 0.0;
};

struct TrialResult {
  bool captured = false;
  double capture_time = 0.0;  // max_time on timeout
  double avg_energy = 0.0;
  std::vector<double> per_pursuer_energy;
  std::vector<DecisionRecord> decision_log;  // GUT only
  std::vector<TrajectoryRow> trajectory;     // only when requested
  std::uint64_t seed = 0;
};

TrialResult run_trial(const ScenarioConfig& config, int trial_index,
                      bool record_trajectory = false);

struct Stats {
  double mean = 0.0, stddev = 0.0, min = 0.0, max = 0.0;
  int count = 0;
};

Stats compute_stats(const std::vector<double>& xs);

struct CellStats {
  int trials = 0;
  int captures = 0;
  double capture_rate = 0.0;
  Stats time_all;       // timeouts counted at max_time
  Stats time_captured;  // captured trials only (count 0 when none)
  Stats energy;
};

struct CellResult {
  ScenarioConfig config;
  std::vector<TrialResult> trials;
  CellStats stats;
};

CellStats summarize(const ScenarioConfig& config,
                    const std::vector<TrialResult>& trials);

// Cross product of strategies x pursuer counts x speed ratios over a shared
// base scenario.
struct ExperimentConfig {
  std::vector<Strategy> strategies{Strategy::CB, Strategy::PP, Strategy::GUT};
  std::vector<int> pursuer_counts{1, 3, 5};
  std::vector<double> speed_ratios{0.8, 1.05, 1.5};
  int threads = 1;
  ScenarioConfig base;

  void validate() const;
  std::vector<ScenarioConfig> cells() const;
};

struct ExperimentResult {
  std::vector<CellResult> cells;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// trials.csv, summary.csv, decisions.csv and SVG bar charts under out_dir.
// Throws IoError when the directory is unwritable.
void write_reports(const ExperimentResult& result, const std::string& out_dir);

// Serialize trial rows exactly as they appear in trials.csv (no header).
std::vector<std::string> trial_csv_rows(const CellResult& cell);

// JSON config file round-trip.
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& config);

// Re-run every cell and compare against an existing trials.csv; returns the
// number of mismatching rows (0 = byte-identical modulo '#' metadata lines).
int replay_diff(const ExperimentConfig& config, const std::string& out_dir);

// Rebuild summary.csv and charts from an existing trials.csv. This parses the
// CSV text back in and recomputes the aggregates independently of
// run_experiment's in-memory path.
void regenerate_reports(const std::string& out_dir);

int cli_main(int argc, char** argv);

}  // namespace pe
