#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pe/matgame.hpp"
#include "pe/params.hpp"
#include "pe/payoff.hpp"
#include "pe/world.hpp"

namespace pe {

enum class Tactic { CB, PP };

const char* to_string(Shape s);
const char* to_string(Tactic t);

// One game-theoretic computation unit. The builder constructs this level's
// bimatrix game from the live world state; situation_probs is the probability
// vector over the node's strategy pairs (row-major).
struct GutNode {
  int level = 1;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::function<BimatrixGame(const WorldState&, const UtilityParams&, double)>
      game_builder;
  std::map<std::pair<int, int>, std::unique_ptr<GutNode>> children;
  std::vector<double> situation_probs;

  bool leaf() const { return children.empty(); }
};

struct GutTree {
  std::unique_ptr<GutNode> root;
  // When set, strategy pairs are sampled from mixed profiles instead of the
  // deterministic argmax selection.
  bool sample_from_mixed = false;
  std::mt19937_64 rng{0};
};

// Chosen (pursuer, evader) strategy labels, one pair per level.
using StrategyPath = std::vector<std::pair<std::string, std::string>>;

struct LevelSolve {
  BimatrixGame game;
  MixedProfile profile;
  std::pair<int, int> chosen;
  double gap = 0.0;
};

struct Decision {
  Shape formation = Shape::Circle;
  Tactic tactic = Tactic::PP;
  StrategyPath path;
  std::vector<LevelSolve> levels;  // level 1 then level 2
  double epoch_time = 0.0;
};

// Depth-2 pursuit tree: level 1 {Circle,Semicircle} x {Infiltrate,Escape},
// four level-2 children each {CB,PP} x {DeltaDirection,DeltaSpeed}; situation
// probabilities start uniform.
GutTree build_pursuit_gut(const UtilityParams& params);

// Conditional distribution of the node's situations given the parent pair's
// probability; parent probability zero degenerates to uniform.
std::vector<double> propagate_cp(double parent_pair_prob, const GutNode& node);

// Solve one level's game and pick a strategy pair: pure equilibria first
// (max pursuer payoff, lexicographic ties), otherwise argmax of the first
// mixed profile's marginals (or a sampled pair when the tree asks for it).
LevelSolve solve_level(const BimatrixGame& game, GutTree& tree);

// Full two-level decision for the current world state.
Decision decide(GutTree& tree, const WorldState& world,
                const UtilityParams& params, double radius);

struct ReplanConfig {
  // Period in seconds for re-solving level 1; <= 0 keeps the single
  // level-one solve of the base decision loop.
  double level1_period = 0.0;
};

// Stateful decision loop: level 1 is solved on the first epoch (and then only
// at the configured replan period), level 2 on every epoch.
class DecisionLoop {
 public:
  DecisionLoop(GutTree& tree, UtilityParams params, ReplanConfig replan = {});

  Decision next(const WorldState& world, double radius);

  int level1_solves() const { return level1_solves_; }
  int level2_solves() const { return level2_solves_; }

 private:
  GutTree& tree_;
  UtilityParams params_;
  ReplanConfig replan_;
  bool have_level1_ = false;
  double last_level1_time_ = 0.0;
  LevelSolve level1_;
  int level1_solves_ = 0;
  int level2_solves_ = 0;
};

}  // namespace pe
