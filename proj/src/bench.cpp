#include "pe/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <ctime>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pe/formation.hpp"
#include "pe/guidance.hpp"

namespace pe {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kTwoPi = 6.283185307179586;

// Terminal-phase switch for GUT slot tracking: the team abandons its slots
// for direct pursuit when even the farthest pursuer's projected tail-chase
// time dist / (V_p - V_e_effective) drops below this horizon. Once engaged,
// direct pursuit is kept while the team gains ground and released when the
// evader re-opens the gap by more than kDirectChaseRelease.
constexpr double kDirectChaseHorizon = 30.0;      // s
constexpr double kDirectChaseRelease = 0.3;       // m
constexpr double kEffectiveSpeedWindow = 2.0;     // s

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Shortest round-trip decimal representation; keeps CSV output byte-stable.
std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::uint64_t v) { return std::to_string(v); }

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::CB: return "cb";
    case Strategy::PP: return "pp";
    default: return "gut";
  }
}

const char* to_string(CaptureRule r) {
  return r == CaptureRule::Max ? "max" : "sum";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "cb" || s == "CB") return Strategy::CB;
  if (s == "pp" || s == "PP") return Strategy::PP;
  if (s == "gut" || s == "GUT") return Strategy::GUT;
  throw ConfigInvalid("unknown strategy: " + s);
}

CaptureRule capture_rule_from_string(const std::string& s) {
  if (s == "max") return CaptureRule::Max;
  if (s == "sum") return CaptureRule::Sum;
  throw ConfigInvalid("unknown capture rule: " + s);
}

void ScenarioConfig::validate() const {
  if (pursuer_count < 1) throw ConfigInvalid("pursuer_count must be >= 1");
  if (speed_ratio < 0) throw ConfigInvalid("speed_ratio must be >= 0");
  if (evader_speed <= 0) throw ConfigInvalid("evader_speed must be > 0");
  if (arena.width <= 0 || arena.height <= 0)
    throw ConfigInvalid("arena dimensions must be positive");
  if (d_capture <= 0) throw ConfigInvalid("d_capture must be > 0");
  if (dt <= 0) throw ConfigInvalid("dt must be > 0");
  if (max_time <= 0) throw ConfigInvalid("max_time must be > 0");
  if (trials < 1) throw ConfigInvalid("trials must be >= 1");
  utility.validate();
  evader.validate();
  if (!arena.contains(evader.goal_point))
    throw ConfigInvalid("evader goal_point must lie inside the arena");
}

void ExperimentConfig::validate() const {
  if (strategies.empty()) throw ConfigInvalid("strategy list must not be empty");
  if (pursuer_counts.empty())
    throw ConfigInvalid("pursuer_counts must not be empty");
  if (speed_ratios.empty()) throw ConfigInvalid("speed_ratios must not be empty");
  if (threads < 1) throw ConfigInvalid("threads must be >= 1");
  ScenarioConfig probe = base;
  for (Strategy s : strategies)
    for (int n : pursuer_counts)
      for (double r : speed_ratios) {
        probe.strategy = s;
        probe.pursuer_count = n;
        probe.speed_ratio = r;
        probe.validate();
      }
}

std::vector<ScenarioConfig> ExperimentConfig::cells() const {
  std::vector<ScenarioConfig> out;
  for (Strategy s : strategies)
    for (int n : pursuer_counts)
      for (double r : speed_ratios) {
        ScenarioConfig c = base;
        c.strategy = s;
        c.pursuer_count = n;
        c.speed_ratio = r;
        out.push_back(c);
      }
  return out;
}

TrialResult run_trial(const ScenarioConfig& config, int trial_index,
                      bool record_trajectory) {
  config.validate();
  TrialResult result;
  result.seed = config.base_seed ^ splitmix64(static_cast<std::uint64_t>(trial_index));

  std::mt19937_64 trial_rng(result.seed);
  std::mt19937_64 evader_rng(splitmix64(result.seed ^ config.evader.seed));

  WorldState world;
  world.arena = config.arena;
  world.dt = config.dt;
  const int n = config.pursuer_count;
  const double vp = config.pursuer_speed();
  world.pursuers.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& p = world.pursuers[i];
    p.position = {0.2, config.arena.height * (i + 1) / (n + 1)};
    p.max_speed = vp;
    p.role = Role::Pursuer;
    p.index = i;
  }
  world.evader.position = {config.arena.width / 2.0, config.arena.height / 2.0};
  world.evader.max_speed = config.evader_speed;
  world.evader.role = Role::Evader;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  world.evader.velocity = unit_from_angle(angle(trial_rng)) * config.evader_speed;

  GutTree tree;
  std::unique_ptr<DecisionLoop> loop;
  double radius = config.utility.formation_radius_init;
  // Rolling evader positions for the effective-speed estimate used by the
  // GUT terminal-phase switch (see kDirectChaseHorizon).
  std::deque<Vec2> evader_history;
  const size_t history_len = std::max<size_t>(
      2, static_cast<size_t>(kEffectiveSpeedWindow / config.dt));
  bool direct_latched = false;
  double latch_best = 0.0;
  if (config.strategy == Strategy::GUT) {
    tree = build_pursuit_gut(config.utility);
    tree.rng.seed(splitmix64(result.seed + 1));
    loop = std::make_unique<DecisionLoop>(tree, config.utility, config.replan);
  }

  auto log_state = [&](const WorldState& w) {
    if (!record_trajectory) return;
    for (const auto& p : w.pursuers)
      result.trajectory.push_back(
          {w.time, p.index, p.position, p.velocity, p.energy});
    result.trajectory.push_back(
        {w.time, -1, w.evader.position, w.evader.velocity, w.evader.energy});
  };
  log_state(world);

  while (true) {
    if (capture_check(world, config.d_capture, config.capture_rule)) {
      result.captured = true;
      result.capture_time = world.time;
      break;
    }
    if (world.time >= config.max_time - 1e-9) {
      result.captured = false;
      result.capture_time = config.max_time;
      break;
    }

    Vec2 evader_cmd = evader_velocity(world, config.evader, evader_rng);

    std::vector<Vec2> commands(n);
    switch (config.strategy) {
      case Strategy::CB:
        for (int i = 0; i < n; ++i)
          commands[i] = constant_bearing(world.pursuers[i],
                                         world.evader.position,
                                         world.evader.velocity)
                            .velocity;
        break;
      case Strategy::PP:
        for (int i = 0; i < n; ++i)
          commands[i] =
              pure_pursuit(world.pursuers[i], world.evader.position).velocity;
        break;
      case Strategy::GUT: {
        Decision d = loop->next(world, radius);
        std::vector<Vec2> targets(n, world.evader.position);
        if (n > 1) {
          SlotSet slots = d.formation == Shape::Circle
                              ? circle_slots(world.evader, n, radius, world.arena)
                              : semicircle_slots(world.evader, n, radius,
                                                 world.arena);
          auto perm = assign_slots(world.pursuers, slots);
          for (int i = 0; i < n; ++i) targets[i] = slots.points[perm[i]];
          // When the team can out-run the evader and even the farthest
          // pursuer's projected tail-chase time is short, direct pursuit
          // beats holding ring slots; otherwise the ring (whose slots can
          // sit ahead of the evader) is the only way to close, so hold it.
          // The evader speed used here is its net displacement rate over a
          // short window, so an evader pinned against a wall (oscillating
          // at full commanded speed but going nowhere) reads as slow.
          evader_history.push_back(world.evader.position);
          if (evader_history.size() > history_len) evader_history.pop_front();
          double effective_speed =
              distance(evader_history.front(), evader_history.back()) /
              (static_cast<double>(evader_history.size() - 1) * config.dt +
               1e-12);
          effective_speed = std::min(effective_speed, world.evader.max_speed);
          double closing = config.pursuer_speed() - effective_speed;
          double farthest = 0.0;
          for (const auto& p : world.pursuers)
            farthest = std::max(farthest,
                                distance(p.position, world.evader.position));
          if (closing > 0.0 && farthest <= closing * kDirectChaseHorizon) {
            direct_latched = true;
            latch_best = farthest;
          } else if (direct_latched) {
            // Stay in direct pursuit while the team keeps gaining ground;
            // fall back to the ring only if the evader re-opens the gap.
            latch_best = std::min(latch_best, farthest);
            if (farthest > latch_best + kDirectChaseRelease)
              direct_latched = false;
          }
          if (direct_latched)
            for (int i = 0; i < n; ++i) targets[i] = world.evader.position;
        }
        for (int i = 0; i < n; ++i) {
          commands[i] =
              d.tactic == Tactic::PP
                  ? pure_pursuit(world.pursuers[i], targets[i]).velocity
                  : constant_bearing(world.pursuers[i], targets[i],
                                     world.evader.velocity)
                        .velocity;
        }
        radius = shrink_radius(radius, config.utility, config.dt);

        DecisionRecord rec;
        rec.time = d.epoch_time;
        rec.formation = d.formation;
        rec.tactic = d.tactic;
        rec.l1_row = d.path[0].first;
        rec.l1_col = d.path[0].second;
        rec.l2_row = d.path[1].first;
        rec.l2_col = d.path[1].second;
        rec.l1_gap = d.levels[0].gap;
        rec.l2_gap = d.levels[1].gap;
        for (int k = 0; k < 4; ++k) {
          rec.l1_payoffs[k] = d.levels[0].game.payoff_a[k];
          rec.l1_payoffs[4 + k] = d.levels[0].game.payoff_b[k];
          rec.l2_payoffs[k] = d.levels[1].game.payoff_a[k];
          rec.l2_payoffs[4 + k] = d.levels[1].game.payoff_b[k];
        }
        result.decision_log.push_back(std::move(rec));
        break;
      }
    }

    world = step(world, commands, evader_cmd);
    log_state(world);
  }

  result.avg_energy = average_energy(world);
  for (const auto& p : world.pursuers)
    result.per_pursuer_energy.push_back(p.energy);
  return result;
}

Stats compute_stats(const std::vector<double>& xs) {
  Stats s;
  s.count = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  double sum = 0.0;
  s.min = s.max = xs[0];
  for (double x : xs) {
    sum += x;
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
  }
  s.mean = sum / xs.size();
  double var = 0.0;
  for (double x : xs) var += (x - s.mean) * (x - s.mean);
  s.stddev = xs.size() > 1 ? std::sqrt(var / (xs.size() - 1)) : 0.0;
  return s;
}

CellStats summarize(const ScenarioConfig& config,
                    const std::vector<TrialResult>& trials) {
  CellStats cs;
  cs.trials = static_cast<int>(trials.size());
  std::vector<double> times_all, times_cap, energies;
  for (const auto& t : trials) {
    times_all.push_back(t.capture_time);
    energies.push_back(t.avg_energy);
    if (t.captured) {
      ++cs.captures;
      times_cap.push_back(t.capture_time);
    }
  }
  cs.capture_rate = cs.trials > 0 ? double(cs.captures) / cs.trials : 0.0;
  cs.time_all = compute_stats(times_all);
  cs.time_captured = compute_stats(times_cap);
  cs.energy = compute_stats(energies);
  (void)config;
  return cs;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  auto cells = config.cells();
  result.cells.resize(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    result.cells[c].config = cells[c];
    result.cells[c].trials.resize(cells[c].trials);
  }

  // Flatten (cell, trial) pairs; workers pull indices from a shared counter,
  // so results are identical for any thread count.
  struct Job {
    size_t cell;
    int trial;
  };
  std::vector<Job> jobs;
  for (size_t c = 0; c < cells.size(); ++c)
    for (int t = 0; t < cells[c].trials; ++t) jobs.push_back({c, t});

  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= jobs.size()) break;
      const Job& job = jobs[i];
      result.cells[job.cell].trials[job.trial] =
          run_trial(cells[job.cell], job.trial);
    }
  };
  int nthreads = std::min<int>(config.threads, static_cast<int>(jobs.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& cell : result.cells)
    cell.stats = summarize(cell.config, cell.trials);
  return result;
}

std::vector<std::string> trial_csv_rows(const CellResult& cell) {
  std::vector<std::string> rows;
  for (size_t i = 0; i < cell.trials.size(); ++i) {
    const TrialResult& t = cell.trials[i];
    std::string row = fmt(static_cast<int>(i));
    row += ',';
    row += to_string(cell.config.strategy);
    row += ',' + fmt(cell.config.pursuer_count);
    row += ',' + fmt(cell.config.speed_ratio);
    row += ',' + std::string(t.captured ? "1" : "0");
    row += ',' + fmt(t.capture_time);
    row += ',' + fmt(t.avg_energy);
    row += ',' + fmt(t.seed);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

constexpr const char* kTrialsHeader =
    "trial_index,strategy,pursuers,speed_ratio,captured,capture_time_s,"
    "avg_energy,seed";
constexpr const char* kSummaryHeader =
    "strategy,pursuers,speed_ratio,trials,captures,capture_rate,"
    "time_mean,time_std,time_min,time_max,time_mean_captured,"
    "energy_mean,energy_std,energy_min,energy_max";
constexpr const char* kDecisionsHeader =
    "strategy,pursuers,speed_ratio,trial_index,time,formation,tactic,"
    "l1_row,l1_col,l2_row,l2_col,l1_gap,l2_gap,"
    "l1_a00,l1_a01,l1_a10,l1_a11,l1_b00,l1_b01,l1_b10,l1_b11,"
    "l2_a00,l2_a01,l2_a10,l2_a11,l2_b00,l2_b01,l2_b10,l2_b11";

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

std::string meta_line() {
  std::time_t now = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string("# pursuitbench v1 generated ") + buf;
}

struct SummaryRow {
  std::string strategy;
  int pursuers = 0;
  double speed_ratio = 0.0;
  CellStats stats;
};

void write_summary_file(const fs::path& path,
                        const std::vector<SummaryRow>& rows) {
  auto out = open_out(path);
  out << meta_line() << '\n' << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << r.strategy << ',' << r.pursuers << ',' << fmt(r.speed_ratio) << ','
        << r.stats.trials << ',' << r.stats.captures << ','
        << fmt(r.stats.capture_rate) << ',' << fmt(r.stats.time_all.mean) << ','
        << fmt(r.stats.time_all.stddev) << ',' << fmt(r.stats.time_all.min)
        << ',' << fmt(r.stats.time_all.max) << ','
        << (r.stats.time_captured.count > 0 ? fmt(r.stats.time_captured.mean)
                                            : std::string())
        << ',' << fmt(r.stats.energy.mean) << ',' << fmt(r.stats.energy.stddev)
        << ',' << fmt(r.stats.energy.min) << ',' << fmt(r.stats.energy.max)
        << '\n';
  }
}

// Minimal grouped bar chart. Groups are speed ratios, one bar per strategy.
void write_bar_chart(const fs::path& path, const std::string& title,
                     const std::vector<std::string>& group_labels,
                     const std::vector<std::string>& series_labels,
                     const std::vector<std::vector<double>>& values) {
  const double width = 640, height = 400, margin = 60;
  double vmax = 1e-9;
  for (const auto& series : values)
    for (double v : series) vmax = std::max(vmax, v);

  auto out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";

  static const char* colors[] = {"#4878cf", "#ee854a", "#6acc65", "#d65f5f"};
  const size_t groups = group_labels.size();
  const size_t series_n = series_labels.size();
  const double group_w = (width - 2 * margin) / groups;
  const double bar_w = group_w / (series_n + 1);
  const double plot_h = height - 2 * margin;

  for (size_t g = 0; g < groups; ++g) {
    double gx = margin + g * group_w;
    for (size_t s = 0; s < series_n; ++s) {
      double v = values[s][g];
      double h = plot_h * v / vmax;
      out << "<rect x=\"" << gx + bar_w * (s + 0.5) << "\" y=\""
          << height - margin - h << "\" width=\"" << bar_w * 0.9
          << "\" height=\"" << h << "\" fill=\"" << colors[s % 4] << "\"/>\n";
    }
    out << "<text x=\"" << gx + group_w / 2 << "\" y=\"" << height - margin + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << group_labels[g] << "</text>\n";
  }
  for (size_t s = 0; s < series_n; ++s) {
    double ly = margin + 18.0 * s;
    out << "<rect x=\"" << width - margin - 90 << "\" y=\"" << ly - 10
        << "\" width=\"12\" height=\"12\" fill=\"" << colors[s % 4] << "\"/>\n";
    out << "<text x=\"" << width - margin - 72 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << series_labels[s]
        << "</text>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">speed ratio V_p:V_e</text>\n";
  out << "</svg>\n";
}

void write_charts(const fs::path& dir, const std::vector<SummaryRow>& rows) {
  std::vector<int> counts;
  std::vector<double> ratios;
  std::vector<std::string> strategies;
  for (const auto& r : rows) {
    if (std::find(counts.begin(), counts.end(), r.pursuers) == counts.end())
      counts.push_back(r.pursuers);
    if (std::find(ratios.begin(), ratios.end(), r.speed_ratio) == ratios.end())
      ratios.push_back(r.speed_ratio);
    if (std::find(strategies.begin(), strategies.end(), r.strategy) ==
        strategies.end())
      strategies.push_back(r.strategy);
  }
  std::sort(counts.begin(), counts.end());
  std::sort(ratios.begin(), ratios.end());

  auto lookup = [&](const std::string& strat, int n, double ratio,
                    bool energy) {
    for (const auto& r : rows)
      if (r.strategy == strat && r.pursuers == n &&
          std::fabs(r.speed_ratio - ratio) < 1e-12)
        return energy ? r.stats.energy.mean : r.stats.time_all.mean;
    return 0.0;
  };

  std::vector<std::string> group_labels;
  for (double r : ratios) group_labels.push_back(fmt(r) + ":1");

  for (int n : counts) {
    for (bool energy : {false, true}) {
      std::vector<std::vector<double>> values;
      for (const auto& s : strategies) {
        std::vector<double> series;
        for (double r : ratios) series.push_back(lookup(s, n, r, energy));
        values.push_back(std::move(series));
      }
      std::string metric = energy ? "energy" : "time";
      std::string title = (energy ? "Pursuer mean energy, " : "Mean capture time, ") +
                          std::to_string(n) + "P vs 1E";
      write_bar_chart(dir / (metric + "_p" + std::to_string(n) + ".svg"), title,
                      group_labels, strategies, values);
    }
  }
}

}  // namespace

void write_reports(const ExperimentResult& result, const std::string& out_dir) {
  fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + out_dir);

  {
    auto out = open_out(dir / "trials.csv");
    out << meta_line() << '\n' << kTrialsHeader << '\n';
    for (const auto& cell : result.cells)
      for (const auto& row : trial_csv_rows(cell)) out << row << '\n';
  }

  std::vector<SummaryRow> rows;
  for (const auto& cell : result.cells)
    rows.push_back({to_string(cell.config.strategy), cell.config.pursuer_count,
                    cell.config.speed_ratio, cell.stats});
  write_summary_file(dir / "summary.csv", rows);

  {
    auto out = open_out(dir / "decisions.csv");
    out << meta_line() << '\n' << kDecisionsHeader << '\n';
    for (const auto& cell : result.cells) {
      for (size_t t = 0; t < cell.trials.size(); ++t) {
        for (const auto& rec : cell.trials[t].decision_log) {
          out << to_string(cell.config.strategy) << ','
              << cell.config.pursuer_count << ',' << fmt(cell.config.speed_ratio)
              << ',' << t << ',' << fmt(rec.time) << ','
              << to_string(rec.formation) << ',' << to_string(rec.tactic) << ','
              << rec.l1_row << ',' << rec.l1_col << ',' << rec.l2_row << ','
              << rec.l2_col << ',' << fmt(rec.l1_gap) << ',' << fmt(rec.l2_gap);
          for (double v : rec.l1_payoffs) out << ',' << fmt(v);
          for (double v : rec.l2_payoffs) out << ',' << fmt(v);
          out << '\n';
        }
      }
    }
  }

  write_charts(dir, rows);
}

namespace {

std::vector<std::string> read_data_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

int replay_diff(const ExperimentConfig& config, const std::string& out_dir) {
  auto existing = read_data_lines(fs::path(out_dir) / "trials.csv");
  ExperimentResult fresh = run_experiment(config);
  std::vector<std::string> expect = {kTrialsHeader};
  for (const auto& cell : fresh.cells)
    for (auto& row : trial_csv_rows(cell)) expect.push_back(std::move(row));

  int mismatches = 0;
  size_t n = std::max(existing.size(), expect.size());
  for (size_t i = 0; i < n; ++i) {
    const std::string* a = i < existing.size() ? &existing[i] : nullptr;
    const std::string* b = i < expect.size() ? &expect[i] : nullptr;
    if (!a || !b || *a != *b) ++mismatches;
  }
  return mismatches;
}

void regenerate_reports(const std::string& out_dir) {
  fs::path dir(out_dir);
  auto lines = read_data_lines(dir / "trials.csv");
  if (lines.empty() || lines[0] != kTrialsHeader)
    throw IoError("trials.csv missing or has unexpected header");

  struct Key {
    std::string strategy;
    int pursuers;
    double ratio;
    bool operator==(const Key&) const = default;
  };
  std::vector<Key> keys;
  std::vector<std::vector<TrialResult>> groups;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto f = split_csv(lines[i]);
    if (f.size() != 8) throw IoError("malformed trials.csv row");
    Key k{f[1], std::stoi(f[2]), std::stod(f[3])};
    size_t gi = 0;
    for (; gi < keys.size(); ++gi)
      if (keys[gi] == k) break;
    if (gi == keys.size()) {
      keys.push_back(k);
      groups.emplace_back();
    }
    TrialResult t;
    t.captured = f[4] == "1";
    t.capture_time = std::stod(f[5]);
    t.avg_energy = std::stod(f[6]);
    t.seed = std::stoull(f[7]);
    groups[gi].push_back(t);
  }

  std::vector<SummaryRow> rows;
  for (size_t gi = 0; gi < keys.size(); ++gi) {
    ScenarioConfig cfg;  // only identity fields matter for summarize
    rows.push_back({keys[gi].strategy, keys[gi].pursuers, keys[gi].ratio,
                    summarize(cfg, groups[gi])});
  }
  write_summary_file(dir / "summary.csv", rows);
  write_charts(dir, rows);
}

// ---------------------------------------------------------------------------
// JSON config

namespace {

void from_json_utility(const json& j, UtilityParams& u) {
  u.alpha_inf_mean = j.value("alpha_inf_mean", u.alpha_inf_mean);
  u.alpha_inf_std = j.value("alpha_inf_std", u.alpha_inf_std);
  u.alpha_esc_mean = j.value("alpha_esc_mean", u.alpha_esc_mean);
  u.alpha_esc_std = j.value("alpha_esc_std", u.alpha_esc_std);
  u.beta_dir_mean = j.value("beta_dir_mean", u.beta_dir_mean);
  u.beta_dir_std = j.value("beta_dir_std", u.beta_dir_std);
  u.beta_spd_mean = j.value("beta_spd_mean", u.beta_spd_mean);
  u.beta_spd_std = j.value("beta_spd_std", u.beta_spd_std);
  u.w_energy = j.value("w_energy", u.w_energy);
  u.w_distance = j.value("w_distance", u.w_distance);
  u.formation_radius_init = j.value("formation_radius_init", u.formation_radius_init);
  u.radius_shrink = j.value("radius_shrink", u.radius_shrink);
  u.d_capture = j.value("d_capture", u.d_capture);
  u.zero_sum = j.value("zero_sum", u.zero_sum);
  u.sample_coefficients = j.value("sample_coefficients", u.sample_coefficients);
}

void from_json_evader(const json& j, EvaderConfig& e) {
  if (j.contains("mode")) {
    std::string m = j["mode"];
    if (m == "infiltrate") e.mode = EvaderMode::Infiltrate;
    else if (m == "escape") e.mode = EvaderMode::Escape;
    else if (m == "alternating") e.mode = EvaderMode::Alternating;
    else throw ConfigInvalid("unknown evader mode: " + m);
  }
  if (j.contains("goal_point")) {
    e.goal_point.x = j["goal_point"].at(0);
    e.goal_point.y = j["goal_point"].at(1);
  }
  e.perturb_rate = j.value("perturb_rate", e.perturb_rate);
  e.direction_jitter = j.value("direction_jitter", e.direction_jitter);
  e.speed_scale_min = j.value("speed_scale_min", e.speed_scale_min);
  e.speed_scale_max = j.value("speed_scale_max", e.speed_scale_max);
  e.mode_switch_dist = j.value("mode_switch_dist", e.mode_switch_dist);
  e.seed = j.value("seed", e.seed);
}

void from_json_scenario(const json& j, ScenarioConfig& c) {
  c.pursuer_count = j.value("pursuer_count", c.pursuer_count);
  c.speed_ratio = j.value("speed_ratio", c.speed_ratio);
  c.evader_speed = j.value("evader_speed", c.evader_speed);
  if (j.contains("strategy")) c.strategy = strategy_from_string(j["strategy"]);
  if (j.contains("arena")) {
    c.arena.width = j["arena"].value("width", c.arena.width);
    c.arena.height = j["arena"].value("height", c.arena.height);
  }
  c.d_capture = j.value("d_capture", c.d_capture);
  if (j.contains("capture_rule"))
    c.capture_rule = capture_rule_from_string(j["capture_rule"]);
  c.dt = j.value("dt", c.dt);
  c.max_time = j.value("max_time", c.max_time);
  c.trials = j.value("trials", c.trials);
  c.base_seed = j.value("base_seed", c.base_seed);
  if (j.contains("utility")) from_json_utility(j["utility"], c.utility);
  if (j.contains("evader")) from_json_evader(j["evader"], c.evader);
  if (j.contains("replan"))
    c.replan.level1_period = j["replan"].value("level1_period", 0.0);
  // Keep the utility capture distance in lockstep unless overridden there.
  if (j.contains("d_capture") &&
      !(j.contains("utility") && j["utility"].contains("d_capture")))
    c.utility.d_capture = c.d_capture;
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigInvalid(std::string("config parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("strategies")) {
      cfg.strategies.clear();
      for (const auto& s : j["strategies"])
        cfg.strategies.push_back(strategy_from_string(s));
    }
    if (j.contains("pursuer_counts")) {
      cfg.pursuer_counts.clear();
      for (int n : j["pursuer_counts"]) cfg.pursuer_counts.push_back(n);
    }
    if (j.contains("speed_ratios")) {
      cfg.speed_ratios.clear();
      for (double r : j["speed_ratios"]) cfg.speed_ratios.push_back(r);
    }
    cfg.threads = j.value("threads", cfg.threads);
    if (j.contains("base")) from_json_scenario(j["base"], cfg.base);
  } catch (const json::exception& e) {
    throw ConfigInvalid(std::string("config field error: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::string config_to_json(const ExperimentConfig& config) {
  json j;
  for (Strategy s : config.strategies) j["strategies"].push_back(to_string(s));
  j["pursuer_counts"] = config.pursuer_counts;
  j["speed_ratios"] = config.speed_ratios;
  j["threads"] = config.threads;
  const ScenarioConfig& c = config.base;
  json b;
  b["pursuer_count"] = c.pursuer_count;
  b["speed_ratio"] = c.speed_ratio;
  b["evader_speed"] = c.evader_speed;
  b["strategy"] = to_string(c.strategy);
  b["arena"] = {{"width", c.arena.width}, {"height", c.arena.height}};
  b["d_capture"] = c.d_capture;
  b["capture_rule"] = to_string(c.capture_rule);
  b["dt"] = c.dt;
  b["max_time"] = c.max_time;
  b["trials"] = c.trials;
  b["base_seed"] = c.base_seed;
  b["utility"] = {{"alpha_inf_mean", c.utility.alpha_inf_mean},
                  {"alpha_inf_std", c.utility.alpha_inf_std},
                  {"alpha_esc_mean", c.utility.alpha_esc_mean},
                  {"alpha_esc_std", c.utility.alpha_esc_std},
                  {"beta_dir_mean", c.utility.beta_dir_mean},
                  {"beta_dir_std", c.utility.beta_dir_std},
                  {"beta_spd_mean", c.utility.beta_spd_mean},
                  {"beta_spd_std", c.utility.beta_spd_std},
                  {"w_energy", c.utility.w_energy},
                  {"w_distance", c.utility.w_distance},
                  {"formation_radius_init", c.utility.formation_radius_init},
                  {"radius_shrink", c.utility.radius_shrink},
                  {"d_capture", c.utility.d_capture},
                  {"zero_sum", c.utility.zero_sum},
                  {"sample_coefficients", c.utility.sample_coefficients}};
  const char* mode = c.evader.mode == EvaderMode::Infiltrate ? "infiltrate"
                     : c.evader.mode == EvaderMode::Escape   ? "escape"
                                                             : "alternating";
  b["evader"] = {{"mode", mode},
                 {"goal_point", {c.evader.goal_point.x, c.evader.goal_point.y}},
                 {"perturb_rate", c.evader.perturb_rate},
                 {"direction_jitter", c.evader.direction_jitter},
                 {"speed_scale_min", c.evader.speed_scale_min},
                 {"speed_scale_max", c.evader.speed_scale_max},
                 {"mode_switch_dist", c.evader.mode_switch_dist},
                 {"seed", c.evader.seed}};
  b["replan"] = {{"level1_period", c.replan.level1_period}};
  j["base"] = b;
  return j.dump(2);
}

}  // namespace pe
