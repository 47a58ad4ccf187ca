// Acceptance suite: one pass/fail line per criterion, exit code 0 only when
// every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "pe/bench.hpp"
#include "pe/formation.hpp"
#include "pe/guidance.hpp"
#include "pe/matgame.hpp"

using namespace pe;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " - ", detail.c_str());
  if (!pass) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<std::pair<int, int>> pure_nash_bruteforce(const BimatrixGame& g) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) {
      bool eq = true;
      for (int i2 = 0; i2 < g.rows; ++i2)
        if (g.a(i2, j) > g.a(i, j) + 1e-12) eq = false;
      for (int j2 = 0; j2 < g.cols; ++j2)
        if (g.b(i, j2) > g.b(i, j) + 1e-12) eq = false;
      if (eq) out.emplace_back(i, j);
    }
  return out;
}

// --- Criterion 1: solver oracle equivalence on 200 random games ------------

void nash_oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260826);
  std::uniform_int_distribution<int> pay(-5, 5);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = trial % 2 == 0 ? 2 : 3;
    BimatrixGame g;
    g.rows = n;
    g.cols = n;
    g.payoff_a.resize(n * n);
    g.payoff_b.resize(n * n);
    for (auto& v : g.payoff_a) v = pay(rng);
    for (auto& v : g.payoff_b) v = pay(rng);

    if (pure_nash(g) != pure_nash_bruteforce(g)) ok = false;
    auto eqs = mixed_nash(g);
    if (eqs.empty()) ok = false;
    for (const auto& p : eqs)
      if (best_response_gap(g, p) > 1e-9) ok = false;
  }
  double secs = elapsed_s(t0);
  report("nash solver oracle equivalence (200 random games)", ok && secs < 5.0,
         "runtime " + std::to_string(secs) + " s");
}

// --- Criterion 2: known equilibria ------------------------------------------

void known_equilibria() {
  bool ok = true;

  auto mp = BimatrixGame::make({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  auto mp_eqs = mixed_nash(mp);
  ok &= !mp_eqs.empty();
  if (ok) {
    const auto& p = mp_eqs.front();
    for (double v : p.row_dist) ok &= std::fabs(v - 0.5) <= 1e-12;
    for (double v : p.col_dist) ok &= std::fabs(v - 0.5) <= 1e-12;
  }

  auto pd = BimatrixGame::make({{-1, -3}, {0, -2}}, {{-1, 0}, {-3, -2}});
  ok &= pure_nash(pd) == std::vector<std::pair<int, int>>{{1, 1}};

  // Battle of the sexes: indifference equations solved by hand give
  // row (2/3, 1/3) and column (1/3, 2/3).
  auto bos = BimatrixGame::make({{2, 0}, {0, 1}}, {{1, 0}, {0, 2}});
  bool found = false;
  for (const auto& p : mixed_nash(bos))
    if (std::fabs(p.row_dist[0] - 2.0 / 3.0) < 1e-9 &&
        std::fabs(p.col_dist[0] - 1.0 / 3.0) < 1e-9)
      found = true;
  ok &= found;

  report("known equilibria (pennies, dilemma, battle of sexes)", ok);
}

// --- Criterion 3: CB holds the LOS and intercepts ----------------------------

void cb_invariant() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> coord(-5.0, 5.0), speed(0.2, 0.9);
  bool ok = true;
  int tested = 0;
  while (tested < 100) {
    AgentState p{{coord(rng), coord(rng)}, {}, 1.0};
    Vec2 tp{coord(rng), coord(rng)};
    Vec2 tv = Vec2{coord(rng), coord(rng)}.normalized() * speed(rng);
    if (distance(p.position, tp) < 1.0) continue;
    auto cmd = constant_bearing(p, tp, tv);
    if (cmd.law_used != Law::CB) continue;
    ++tested;

    double dt = 0.01;
    double los0 = (tp - p.position).angle();
    Vec2 pp = p.position;
    bool intercepted = false;
    for (int s = 0; s < 100000; ++s) {
      pp += cmd.velocity * dt;
      tp += tv * dt;
      if (distance(pp, tp) <= 0.02) {
        intercepted = true;
        break;
      }
      if (s < 100) {
        double drift =
            std::remainder((tp - pp).angle() - los0, 2.0 * 3.14159265358979323846);
        if (std::fabs(drift) >= 1e-6) ok = false;
      }
    }
    if (!intercepted) ok = false;  // pursuer is strictly faster here
  }
  double secs = elapsed_s(t0);
  report("CB invariant: LOS drift < 1e-6 rad and intercept (100 geometries)",
         ok && secs < 5.0, "runtime " + std::to_string(secs) + " s");
}

// --- Criterion 4: tail-chase closed form -------------------------------------

void tail_chase() {
  ScenarioConfig c;
  c.pursuer_count = 1;
  c.speed_ratio = 1.5;
  c.evader_speed = 0.1;
  c.strategy = Strategy::PP;
  c.arena = {0.9, 2.0};
  c.max_time = 60.0;
  c.trials = 1;
  c.evader.mode = EvaderMode::Escape;
  c.evader.perturb_rate = 0.0;
  c.evader.goal_point = {0.7, 1.0};

  auto r = run_trial(c, 0);
  double gap = c.arena.width / 2.0 - 0.2;
  double expect = (gap - c.d_capture) / (c.pursuer_speed() - c.evader_speed);
  bool ok = r.captured && std::fabs(r.capture_time - expect) <= 2.0 * c.dt;
  report("tail-chase capture time matches the closed form", ok,
         "got " + std::to_string(r.capture_time) + " s, oracle " +
             std::to_string(expect) + " s");
}

// --- Criteria 5-7: comparative reproductions ---------------------------------

CellStats run_cell(ScenarioConfig c, Strategy s, int pursuers, double ratio,
                   int trials, std::vector<TrialResult>* out = nullptr) {
  c.strategy = s;
  c.pursuer_count = pursuers;
  c.speed_ratio = ratio;
  c.trials = trials;
  std::vector<TrialResult> results;
  for (int t = 0; t < trials; ++t) results.push_back(run_trial(c, t));
  auto stats = summarize(c, results);
  if (out) *out = std::move(results);
  return stats;
}

void one_v_one_behavior() {
  auto t0 = std::chrono::steady_clock::now();
  ScenarioConfig base;  // default parameters

  std::vector<TrialResult> gut_trials;
  auto gut = run_cell(base, Strategy::GUT, 1, base.speed_ratio, 30, &gut_trials);
  auto pp = run_cell(base, Strategy::PP, 1, base.speed_ratio, 30);

  long long pp_epochs = 0, total_epochs = 0;
  for (const auto& t : gut_trials)
    for (const auto& rec : t.decision_log) {
      ++total_epochs;
      if (rec.tactic == Tactic::PP) ++pp_epochs;
    }
  double pp_frac = total_epochs > 0 ? double(pp_epochs) / total_epochs : 0.0;
  double rel_diff = std::fabs(gut.time_all.mean - pp.time_all.mean) /
                    std::max(pp.time_all.mean, 1e-12);

  bool ok = pp_frac >= 0.90 && rel_diff <= 0.10;
  double secs = elapsed_s(t0);
  report("1v1: GUT picks PP >= 90% of epochs, mean time within 10% of PP",
         ok && secs < 120.0,
         "PP fraction " + std::to_string(pp_frac) + ", time diff " +
             std::to_string(100.0 * rel_diff) + "%, runtime " +
             std::to_string(secs) + " s");
}

void three_v_one_directional() {
  auto t0 = std::chrono::steady_clock::now();
  ScenarioConfig base;
  auto gut = run_cell(base, Strategy::GUT, 3, 0.8, 30);
  auto cb = run_cell(base, Strategy::CB, 3, 0.8, 30);
  auto pp = run_cell(base, Strategy::PP, 3, 0.8, 30);

  bool ok = gut.time_all.mean < cb.time_all.mean &&
            gut.energy.mean < cb.energy.mean &&
            gut.capture_rate >= pp.capture_rate;
  double secs = elapsed_s(t0);
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "time gut=%.1f cb=%.1f, energy gut=%.4f cb=%.4f, rate gut=%.2f "
                "pp=%.2f, runtime %.0f s",
                gut.time_all.mean, cb.time_all.mean, gut.energy.mean,
                cb.energy.mean, gut.capture_rate, pp.capture_rate, secs);
  report("3v1 @0.8: GUT beats CB on time and energy, rate >= PP",
         ok && secs < 600.0, detail);
}

void five_v_one_directional() {
  auto t0 = std::chrono::steady_clock::now();
  ScenarioConfig base;
  bool ok = true;
  std::string detail;
  for (double ratio : {0.8, 1.05, 1.5}) {
    auto cb = run_cell(base, Strategy::CB, 5, ratio, 30);
    auto pp = run_cell(base, Strategy::PP, 5, ratio, 30);
    auto gut = run_cell(base, Strategy::GUT, 5, ratio, 30);
    bool worst =
        cb.time_all.mean > pp.time_all.mean && cb.time_all.mean > gut.time_all.mean;
    ok &= worst;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "[%.2f: cb=%.1f pp=%.1f gut=%.1f] ", ratio,
                  cb.time_all.mean, pp.time_all.mean, gut.time_all.mean);
    detail += buf;
  }
  double secs = elapsed_s(t0);
  report("5v1: CB is the slowest strategy at every speed ratio",
         ok && secs < 600.0, detail + "runtime " + std::to_string(secs) + " s");
}

// --- Criterion 8: determinism and replay -------------------------------------

void determinism_replay() {
  ExperimentConfig cfg;
  cfg.strategies = {Strategy::PP, Strategy::GUT};
  cfg.pursuer_counts = {3};
  cfg.speed_ratios = {1.5};
  cfg.base.trials = 3;
  cfg.base.max_time = 60.0;

  fs::path dir = fs::temp_directory_path() / "pe_acceptance_replay";
  fs::remove_all(dir);
  auto result = run_experiment(cfg);
  write_reports(result, dir.string());
  int diff = replay_diff(cfg, dir.string());
  report("determinism: replay reproduces trials.csv byte-identically",
         diff == 0, std::to_string(diff) + " mismatching row(s)");
}

// --- Criterion 9: simulation invariants over random cases --------------------

void simulation_invariants() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  bool ok = true;

  // Speed clamp, containment, energy additivity: 1000 random steps.
  WorldState w;
  w.arena = {3.2, 2.0};
  w.dt = 0.033;
  w.pursuers.push_back({{1.0, 1.0}, {}, 0.3, 0.0, Role::Pursuer, 0});
  w.pursuers.push_back({{2.0, 0.5}, {}, 0.15, 0.0, Role::Pursuer, 1});
  w.evader = {{1.6, 1.0}, {}, 0.2, 0.0, Role::Evader, 0};
  double logged[2] = {0.0, 0.0};
  for (int s = 0; s < 1000; ++s) {
    std::vector<Vec2> cmds = {{u01(rng) - 0.5, u01(rng) - 0.5},
                              {u01(rng) - 0.5, u01(rng) - 0.5}};
    w = step(w, cmds, {u01(rng) - 0.5, u01(rng) - 0.5});
    for (int i = 0; i < 2; ++i) {
      const auto& p = w.pursuers[i];
      if (p.velocity.norm() > p.max_speed + 1e-9) ok = false;
      if (!w.arena.contains(p.position)) ok = false;
      logged[i] += p.velocity.norm2() * w.dt;
    }
    if (!w.arena.contains(w.evader.position)) ok = false;
  }
  for (int i = 0; i < 2; ++i)
    if (std::fabs(w.pursuers[i].energy - logged[i]) > 1e-9) ok = false;

  // Slot-assignment optimality vs the permutation oracle: 1000 random cases.
  std::uniform_real_distribution<double> coord(0.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + trial % 5;
    std::vector<AgentState> pursuers(n);
    SlotSet slots;
    for (int i = 0; i < n; ++i) {
      pursuers[i].position = {coord(rng), coord(rng)};
      slots.points.push_back({coord(rng), coord(rng)});
    }
    auto chosen = assign_slots(pursuers, slots);
    double chosen_cost = assignment_cost(pursuers, slots, chosen);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      if (chosen_cost > assignment_cost(pursuers, slots, perm) + 1e-9) ok = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  double secs = elapsed_s(t0);
  report("simulation invariants (clamp/containment/energy/assignment)",
         ok && secs < 60.0, "runtime " + std::to_string(secs) + " s");
}

}  // namespace

int main() {
  nash_oracle_equivalence();
  known_equilibria();
  cb_invariant();
  tail_chase();
  one_v_one_behavior();
  three_v_one_directional();
  five_v_one_directional();
  determinism_replay();
  simulation_invariants();
  std::printf("%d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
