#include "pe/evader.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pe {

namespace {

constexpr double kWallMargin = 0.2;  // m

double min_pursuer_distance(const WorldState& world) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : world.pursuers)
    best = std::min(best, distance(p.position, world.evader.position));
  return best;
}

Vec2 pursuer_centroid(const WorldState& world) {
  Vec2 c;
  for (const auto& p : world.pursuers) c += p.position;
  return c / static_cast<double>(world.pursuers.size());
}

// Project the desired direction onto the wall tangent when heading into a
// nearby wall.
Vec2 deflect_at_walls(Vec2 dir, const Vec2& pos, const Arena& arena) {
  if ((pos.x < kWallMargin && dir.x < 0.0) ||
      (pos.x > arena.width - kWallMargin && dir.x > 0.0))
    dir.x = 0.0;
  if ((pos.y < kWallMargin && dir.y < 0.0) ||
      (pos.y > arena.height - kWallMargin && dir.y > 0.0))
    dir.y = 0.0;
  return dir;
}

}  // namespace

Vec2 evader_velocity(const WorldState& world, const EvaderConfig& config,
                     std::mt19937_64& rng) {
  config.validate();
  const AgentState& ev = world.evader;

  EvaderMode mode = config.mode;
  if (mode == EvaderMode::Alternating)
    mode = min_pursuer_distance(world) < config.mode_switch_dist
               ? EvaderMode::Escape
               : EvaderMode::Infiltrate;

  Vec2 dir;
  if (mode == EvaderMode::Infiltrate) {
    dir = (config.goal_point - ev.position).normalized();
  } else {
    dir = (ev.position - pursuer_centroid(world)).normalized();
    if (dir.norm() < 0.5) {
      // Surrounded: centroid coincides with the evader, no flee direction.
      dir = ev.velocity.norm() > 1e-9 ? ev.velocity.normalized() : Vec2{1.0, 0.0};
    }
    dir = deflect_at_walls(dir, ev.position, world.arena).normalized();
  }

  Vec2 v = dir * ev.max_speed;

  double p = 1.0 - std::exp(-config.perturb_rate * world.dt);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < p) {
    if (unit(rng) < 0.5) {
      std::uniform_real_distribution<double> jitter(-config.direction_jitter,
                                                    config.direction_jitter);
      v = v.rotated(jitter(rng));
    } else {
      std::uniform_real_distribution<double> scale(config.speed_scale_min,
                                                   config.speed_scale_max);
      v = v * scale(rng);
    }
  }

  double n = v.norm();
  if (n > ev.max_speed) v = v * (ev.max_speed / n);
  return v;
}

}  // namespace pe
