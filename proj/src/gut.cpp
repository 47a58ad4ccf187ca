#include "pe/gut.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pe {

const char* to_string(Shape s) {
  return s == Shape::Circle ? "Circle" : "Semicircle";
}

const char* to_string(Tactic t) { return t == Tactic::CB ? "CB" : "PP"; }

GutTree build_pursuit_gut(const UtilityParams& params) {
  params.validate();
  GutTree tree;
  tree.root = std::make_unique<GutNode>();
  GutNode& root = *tree.root;
  root.level = 1;
  root.row_labels = {"Circle", "Semicircle"};
  root.col_labels = {"Infiltrate", "Escape"};
  root.situation_probs.assign(4, 0.25);
  root.game_builder = [](const WorldState& w, const UtilityParams& p,
                         double radius) { return level1_payoffs(w, p, radius); };

  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      auto child = std::make_unique<GutNode>();
      child->level = 2;
      child->row_labels = {"CB", "PP"};
      child->col_labels = {"DeltaDirection", "DeltaSpeed"};
      child->situation_probs.assign(4, 0.25);
      Shape shape = r == 0 ? Shape::Circle : Shape::Semicircle;
      child->game_builder = [shape](const WorldState& w, const UtilityParams& p,
                                    double radius) {
        return level2_payoffs(w, p, shape, radius);
      };
      root.children[{r, c}] = std::move(child);
    }
  }
  return tree;
}

std::vector<double> propagate_cp(double parent_pair_prob, const GutNode& node) {
  const size_t n = node.situation_probs.size();
  if (parent_pair_prob <= 0.0) return std::vector<double>(n, 1.0 / n);
  std::vector<double> cp(n);
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) {
    cp[i] = node.situation_probs[i] * parent_pair_prob;
    sum += cp[i];
  }
  if (sum <= 0.0) return std::vector<double>(n, 1.0 / n);
  for (double& p : cp) p /= sum;
  return cp;
}

LevelSolve solve_level(const BimatrixGame& game, GutTree& tree) {
  LevelSolve out;
  out.game = game;

  auto pure = pure_nash(game);
  if (!pure.empty()) {
    // Highest pursuer payoff, lexicographic ties.
    auto best = pure.front();
    for (auto cell : pure)
      if (game.a(cell.first, cell.second) >
          game.a(best.first, best.second) + 1e-12)
        best = cell;
    out.chosen = best;
    out.profile.row_dist.assign(game.rows, 0.0);
    out.profile.col_dist.assign(game.cols, 0.0);
    out.profile.row_dist[best.first] = 1.0;
    out.profile.col_dist[best.second] = 1.0;
    std::tie(out.profile.value_a, out.profile.value_b) =
        expected_payoffs(game, out.profile);
  } else {
    auto mixed = mixed_nash(game);
    out.profile = mixed.front();
    if (tree.sample_from_mixed) {
      std::discrete_distribution<int> row(out.profile.row_dist.begin(),
                                          out.profile.row_dist.end());
      std::discrete_distribution<int> col(out.profile.col_dist.begin(),
                                          out.profile.col_dist.end());
      out.chosen = {row(tree.rng), col(tree.rng)};
    } else {
      auto argmax = [](const std::vector<double>& v) {
        return static_cast<int>(std::max_element(v.begin(), v.end()) -
                                v.begin());
      };
      out.chosen = {argmax(out.profile.row_dist), argmax(out.profile.col_dist)};
    }
  }
  out.gap = best_response_gap(game, out.profile);
  return out;
}

namespace {

Decision assemble(const LevelSolve& l1, const LevelSolve& l2, double time) {
  Decision d;
  d.formation = l1.chosen.first == 0 ? Shape::Circle : Shape::Semicircle;
  d.tactic = l2.chosen.first == 0 ? Tactic::CB : Tactic::PP;
  d.path = {{l1.game.row_labels[l1.chosen.first],
             l1.game.col_labels[l1.chosen.second]},
            {l2.game.row_labels[l2.chosen.first],
             l2.game.col_labels[l2.chosen.second]}};
  d.levels = {l1, l2};
  d.epoch_time = time;
  return d;
}

}  // namespace

Decision decide(GutTree& tree, const WorldState& world,
                const UtilityParams& params, double radius) {
  GutNode& root = *tree.root;
  LevelSolve l1 = solve_level(root.game_builder(world, params, radius), tree);

  GutNode& child = *root.children.at(l1.chosen);
  double parent_prob =
      root.situation_probs[l1.chosen.first * static_cast<int>(root.col_labels.size()) +
                           l1.chosen.second];
  child.situation_probs = propagate_cp(parent_prob, child);

  LevelSolve l2 = solve_level(child.game_builder(world, params, radius), tree);
  return assemble(l1, l2, world.time);
}

DecisionLoop::DecisionLoop(GutTree& tree, UtilityParams params,
                           ReplanConfig replan)
    : tree_(tree), params_(std::move(params)), replan_(replan) {}

Decision DecisionLoop::next(const WorldState& world, double radius) {
  GutNode& root = *tree_.root;
  bool replan_due = replan_.level1_period > 0.0 &&
                    world.time - last_level1_time_ >= replan_.level1_period - 1e-9;
  if (!have_level1_ || replan_due) {
    level1_ = solve_level(root.game_builder(world, params_, radius), tree_);
    have_level1_ = true;
    last_level1_time_ = world.time;
    ++level1_solves_;
  }

  GutNode& child = *root.children.at(level1_.chosen);
  double parent_prob =
      root.situation_probs[level1_.chosen.first *
                               static_cast<int>(root.col_labels.size()) +
                           level1_.chosen.second];
  child.situation_probs = propagate_cp(parent_prob, child);

  LevelSolve l2 = solve_level(child.game_builder(world, params_, radius), tree_);
  ++level2_solves_;
  return assemble(level1_, l2, world.time);
}

}  // namespace pe
