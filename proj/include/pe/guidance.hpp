#pragma once

#include "pe/vec2.hpp"
#include "pe/world.hpp"

namespace pe {

enum class Law { CB, PP, CB_fallback_PP };

struct GuidanceCommand {
  Vec2 velocity;
  Law law_used = Law::PP;
};

// Full speed straight down the line of sight; zero when already on target.
GuidanceCommand pure_pursuit(const AgentState& pursuer, const Vec2& target_pos);

// Collision-course guidance: cancels the target's velocity component
// perpendicular to the line of sight and spends the remaining speed closing
// along it. Falls back to pure pursuit when the triangle is infeasible or the
// closing speed would be non-positive.
GuidanceCommand constant_bearing(const AgentState& pursuer, const Vec2& target_pos,
                                 const Vec2& target_vel);

}  // namespace pe
