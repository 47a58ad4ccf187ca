#pragma once

#include <optional>
#include <vector>

#include "pe/params.hpp"
#include "pe/vec2.hpp"
#include "pe/world.hpp"

namespace pe {

enum class Shape { Circle, Semicircle };

struct SlotSet {
  std::vector<Vec2> points;
  Shape shape = Shape::Circle;
  double radius = 0.0;
  Vec2 center;  // evader position at generation time
};

// n slots uniformly spaced on the circle around the evader, the first one at
// the evader's heading (angle 0 when stationary). Points are clamped into the
// arena when one is given.
SlotSet circle_slots(const AgentState& evader, int n, double radius,
                     const std::optional<Arena>& arena = std::nullopt);

// n slots on a half-circle arc. The open side faces the nearest wall when the
// evader is within 2*radius of one (herding it toward the wall), otherwise it
// faces the evader's heading.
SlotSet semicircle_slots(const AgentState& evader, int n, double radius,
                         const std::optional<Arena>& arena = std::nullopt);

// Minimum-total-distance assignment of pursuers to slots; result[i] is the
// slot index for pursuer i. Exact for counts <= 6, greedy beyond. Throws
// CountMismatch.
std::vector<int> assign_slots(const std::vector<AgentState>& pursuers,
                              const SlotSet& slots);

double assignment_cost(const std::vector<AgentState>& pursuers,
                       const SlotSet& slots, const std::vector<int>& perm);

// Exponential contraction floored just below the capture distance.
double shrink_radius(double current, const UtilityParams& params, double dt);

}  // namespace pe
