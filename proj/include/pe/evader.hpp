#pragma once

#include <cstdint>
#include <random>

#include "pe/vec2.hpp"
#include "pe/world.hpp"

namespace pe {

enum class EvaderMode { Infiltrate, Escape, Alternating };

struct EvaderConfig {
  EvaderMode mode = EvaderMode::Alternating;
  Vec2 goal_point{3.0, 1.0};   // Infiltrate target
  double perturb_rate = 0.8;   // Poisson rate of random events, 1/s
  double direction_jitter = 1.3;        // rad, uniform half-width
  double speed_scale_min = 0.4;
  double speed_scale_max = 1.0;
  double mode_switch_dist = 0.5;  // Alternating: closer than this => Escape
  std::uint64_t seed = 0;

  void validate() const {
    if (perturb_rate < 0) throw ConfigInvalid("perturb_rate must be >= 0");
    if (speed_scale_min <= 0 || speed_scale_min > speed_scale_max)
      throw ConfigInvalid("speed scale range must satisfy 0 < min <= max");
  }
};

// Scripted evader: Infiltrate heads to the goal point, Escape flees the
// pursuer centroid with wall-tangent deflection, Alternating switches on the
// minimum pursuer distance. Random direction/speed events fire at
// perturb_rate from the supplied generator. Output speed <= max_speed.
Vec2 evader_velocity(const WorldState& world, const EvaderConfig& config,
                     std::mt19937_64& rng);

}  // namespace pe
