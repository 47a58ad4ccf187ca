#include "pe/formation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pe {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec2 clamp_to_arena(Vec2 p, const std::optional<Arena>& arena) {
  if (!arena) return p;
  p.x = std::clamp(p.x, 0.0, arena->width);
  p.y = std::clamp(p.y, 0.0, arena->height);
  return p;
}

double reference_angle(const AgentState& evader) {
  return evader.velocity.norm() > 1e-12 ? evader.velocity.angle() : 0.0;
}

}  // namespace

SlotSet circle_slots(const AgentState& evader, int n, double radius,
                     const std::optional<Arena>& arena) {
  SlotSet set;
  set.shape = Shape::Circle;
  set.radius = radius;
  set.center = evader.position;
  double base = reference_angle(evader);
  set.points.reserve(n);
  for (int k = 0; k < n; ++k) {
    double angle = base + 2.0 * kPi * k / n;
    set.points.push_back(
        clamp_to_arena(evader.position + unit_from_angle(angle) * radius, arena));
  }
  return set;
}

SlotSet semicircle_slots(const AgentState& evader, int n, double radius,
                         const std::optional<Arena>& arena) {
  SlotSet set;
  set.shape = Shape::Semicircle;
  set.radius = radius;
  set.center = evader.position;

  // Open side: toward the nearest wall when close to one, else along the
  // evader's heading.
  double open_angle = reference_angle(evader);
  if (arena) {
    const Vec2 e = evader.position;
    struct Wall {
      double dist;
      double angle;
    };
    Wall walls[4] = {{e.x, kPi},
                     {arena->width - e.x, 0.0},
                     {e.y, -kPi / 2.0},
                     {arena->height - e.y, kPi / 2.0}};
    const Wall* nearest = &walls[0];
    for (const Wall& w : walls)
      if (w.dist < nearest->dist) nearest = &w;
    if (nearest->dist <= 2.0 * radius) open_angle = nearest->angle;
  }

  set.points.reserve(n);
  if (n == 1) {
    set.points.push_back(clamp_to_arena(
        evader.position + unit_from_angle(open_angle + kPi) * radius, arena));
    return set;
  }
  // Arc from open+pi/2 to open+3pi/2, endpoints included.
  for (int k = 0; k < n; ++k) {
    double angle = open_angle + kPi / 2.0 + kPi * k / (n - 1);
    set.points.push_back(
        clamp_to_arena(evader.position + unit_from_angle(angle) * radius, arena));
  }
  return set;
}

double assignment_cost(const std::vector<AgentState>& pursuers,
                       const SlotSet& slots, const std::vector<int>& perm) {
  double total = 0.0;
  for (size_t i = 0; i < pursuers.size(); ++i)
    total += distance(pursuers[i].position, slots.points[perm[i]]);
  return total;
}

std::vector<int> assign_slots(const std::vector<AgentState>& pursuers,
                              const SlotSet& slots) {
  const int n = static_cast<int>(pursuers.size());
  if (slots.points.size() != pursuers.size())
    throw CountMismatch("slot count must equal pursuer count");

  if (n <= 6) {
    std::vector<int> perm(n), best(n);
    std::iota(perm.begin(), perm.end(), 0);
    best = perm;
    double best_cost = assignment_cost(pursuers, slots, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
      double cost = assignment_cost(pursuers, slots, perm);
      if (cost < best_cost - 1e-12) {  // strict: first lexicographic perm wins ties
        best_cost = cost;
        best = perm;
      }
    }
    return best;
  }

  // Greedy nearest-available slot in pursuer index order.
  std::vector<int> result(n, -1);
  std::vector<bool> taken(n, false);
  for (int i = 0; i < n; ++i) {
    int pick = -1;
    double pick_dist = 0.0;
    for (int s = 0; s < n; ++s) {
      if (taken[s]) continue;
      double d = distance(pursuers[i].position, slots.points[s]);
      if (pick < 0 || d < pick_dist - 1e-12) {
        pick = s;
        pick_dist = d;
      }
    }
    taken[pick] = true;
    result[i] = pick;
  }
  return result;
}

double shrink_radius(double current, const UtilityParams& params, double dt) {
  double shrunk = current * std::pow(params.radius_shrink, dt);
  return std::max(params.d_capture * 0.9, shrunk);
}

}  // namespace pe
