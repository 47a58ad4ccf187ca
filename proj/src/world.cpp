#include "pe/world.hpp"

#include <algorithm>
#include <cmath>

namespace pe {

namespace {

Vec2 clamp_speed(const Vec2& v, double max_speed) {
  double n = v.norm();
  if (n <= max_speed || n == 0.0) return v;
  return v * (max_speed / n);
}

void advance(AgentState& agent, const Vec2& command, const Arena& arena,
             double dt) {
  Vec2 v = clamp_speed(command, agent.max_speed);
  Vec2 p = agent.position + v * dt;
  if (p.x < 0.0) {
    p.x = 0.0;
    v.x = 0.0;
  } else if (p.x > arena.width) {
    p.x = arena.width;
    v.x = 0.0;
  }
  if (p.y < 0.0) {
    p.y = 0.0;
    v.y = 0.0;
  } else if (p.y > arena.height) {
    p.y = arena.height;
    v.y = 0.0;
  }
  agent.position = p;
  agent.velocity = v;
  agent.energy += v.norm2() * dt;
}

}  // namespace

WorldState step(const WorldState& world, const std::vector<Vec2>& pursuer_velocities,
                const Vec2& evader_velocity) {
  if (pursuer_velocities.size() != world.pursuers.size())
    throw LengthMismatch("one velocity command per pursuer required");
  WorldState next = world;
  for (size_t i = 0; i < next.pursuers.size(); ++i)
    advance(next.pursuers[i], pursuer_velocities[i], next.arena, next.dt);
  advance(next.evader, evader_velocity, next.arena, next.dt);
  next.time += next.dt;
  return next;
}

bool capture_check(const WorldState& world, double d_capture, CaptureRule rule) {
  if (rule == CaptureRule::Max) {
    for (const auto& p : world.pursuers)
      if (distance(p.position, world.evader.position) > d_capture) return false;
    return true;
  }
  double total = 0.0;
  for (const auto& p : world.pursuers)
    total += distance(p.position, world.evader.position);
  return total <= d_capture;
}

double average_energy(const WorldState& world) {
  double total = 0.0;
  for (const auto& p : world.pursuers) total += p.energy;
  return total / static_cast<double>(world.pursuers.size());
}

}  // namespace pe
