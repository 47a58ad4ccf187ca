#pragma once

#include <vector>

#include "pe/errors.hpp"
#include "pe/vec2.hpp"

namespace pe {

enum class Role { Pursuer, Evader };

struct AgentState {
  Vec2 position;
  Vec2 velocity;
  double max_speed = 1.0;
  double energy = 0.0;  // unit-mass kinetic proxy, sum of |v|^2 dt
  Role role = Role::Pursuer;
  int index = 0;
};

// Axis-aligned rectangle [0,width] x [0,height].
struct Arena {
  double width = 3.2;
  double height = 2.0;

  bool contains(const Vec2& p, double eps = 1e-9) const {
    return p.x >= -eps && p.x <= width + eps && p.y >= -eps &&
           p.y <= height + eps;
  }
};

struct WorldState {
  std::vector<AgentState> pursuers;
  AgentState evader;
  Arena arena;
  double time = 0.0;
  double dt = 0.033;
};

enum class CaptureRule { Max, Sum };

// Advance one control period. Commands are clamped to each agent's max_speed
// by scaling; positions are confined to the arena with the wall-normal
// velocity component zeroed on contact. Throws LengthMismatch when the
// command count differs from the pursuer count.
WorldState step(const WorldState& world, const std::vector<Vec2>& pursuer_velocities,
                const Vec2& evader_velocity);

// Max rule: every pursuer within d_capture of the evader.
// Sum rule: total pursuer-evader distance within d_capture.
bool capture_check(const WorldState& world, double d_capture,
                   CaptureRule rule = CaptureRule::Max);

double average_energy(const WorldState& world);

}  // namespace pe
