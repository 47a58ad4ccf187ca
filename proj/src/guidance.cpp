#include "pe/guidance.hpp"

#include <cmath>

namespace pe {

GuidanceCommand pure_pursuit(const AgentState& pursuer, const Vec2& target_pos) {
  Vec2 rel = target_pos - pursuer.position;
  if (rel.norm() < 1e-9) return {{0.0, 0.0}, Law::PP};
  return {rel.normalized() * pursuer.max_speed, Law::PP};
}

GuidanceCommand constant_bearing(const AgentState& pursuer, const Vec2& target_pos,
                                 const Vec2& target_vel) {
  Vec2 rel = target_pos - pursuer.position;
  double dist = rel.norm();
  if (dist < 1e-9) return {{0.0, 0.0}, Law::CB};
  Vec2 los = rel / dist;
  double along = target_vel.dot(los);
  Vec2 perp = target_vel - los * along;
  double perp2 = perp.norm2();
  double ms2 = pursuer.max_speed * pursuer.max_speed;
  if (perp2 > ms2) {
    auto pp = pure_pursuit(pursuer, target_pos);
    return {pp.velocity, Law::CB_fallback_PP};
  }
  // Of the two headings matching the target's perpendicular speed, take the
  // one closing along the LOS; reject it if the target still outruns us.
  double closing = std::sqrt(ms2 - perp2);
  if (closing <= along) {
    auto pp = pure_pursuit(pursuer, target_pos);
    return {pp.velocity, Law::CB_fallback_PP};
  }
  return {perp + los * closing, Law::CB};
}

}  // namespace pe
