#include "pe/payoff.hpp"

#include <cmath>

namespace pe {

namespace {

// Smallest positive time at which a pursuer at full speed meets a target
// moving at constant velocity (collision-triangle quadratic); negative when
// no intercept exists.
double intercept_time(const Vec2& pursuer_pos, double pursuer_speed,
                      const Vec2& target_pos, const Vec2& target_vel) {
  Vec2 rel = target_pos - pursuer_pos;
  double a = target_vel.norm2() - pursuer_speed * pursuer_speed;
  double b = 2.0 * rel.dot(target_vel);
  double c = rel.norm2();
  if (c < 1e-18) return 0.0;
  if (std::fabs(a) < 1e-12) {
    if (std::fabs(b) < 1e-12) return -1.0;
    double t = -c / b;
    return t > 0.0 ? t : -1.0;
  }
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return -1.0;
  double sq = std::sqrt(disc);
  double t1 = (-b - sq) / (2.0 * a);
  double t2 = (-b + sq) / (2.0 * a);
  if (t1 > t2) std::swap(t1, t2);
  if (t1 > 0.0) return t1;
  if (t2 > 0.0) return t2;
  return -1.0;
}

double sample_coeff(double mean, double std, std::mt19937_64* rng,
                    bool sampling) {
  if (!sampling || rng == nullptr || std == 0.0) return mean;
  std::normal_distribution<double> dist(mean, std);
  return std::max(0.0, dist(*rng));
}

}  // namespace

DistanceSummary distance_summary(const WorldState& world,
                                 const UtilityParams& params, double radius,
                                 std::optional<Shape> formation) {
  const int n = static_cast<int>(world.pursuers.size());
  DistanceSummary out;

  auto slot_total = [&](const SlotSet& slots) {
    return assignment_cost(world.pursuers, slots, assign_slots(world.pursuers, slots));
  };
  SlotSet cir = circle_slots(world.evader, n, radius, world.arena);
  SlotSet sem = semicircle_slots(world.evader, n, radius, world.arena);
  out.d_cir = slot_total(cir);
  out.d_sem = slot_total(sem);

  // Capture-distance estimates: against the chosen formation's slots (moving
  // with the evader), or the evader itself when no formation is fixed yet.
  std::vector<Vec2> targets(n);
  if (formation) {
    const SlotSet& slots = *formation == Shape::Circle ? cir : sem;
    auto perm = assign_slots(world.pursuers, slots);
    for (int i = 0; i < n; ++i) targets[i] = slots.points[perm[i]];
  } else {
    for (int i = 0; i < n; ++i) targets[i] = world.evader.position;
  }
  for (int i = 0; i < n; ++i) {
    const auto& p = world.pursuers[i];
    double straight = distance(p.position, targets[i]);
    out.d_pp += straight;
    double t = intercept_time(p.position, p.max_speed, targets[i],
                              world.evader.velocity);
    out.d_cb += t >= 0.0 ? p.max_speed * t : straight;
  }
  return out;
}

BimatrixGame level1_payoffs(const WorldState& world, const UtilityParams& params,
                            double radius, std::mt19937_64* rng) {
  DistanceSummary d = distance_summary(world, params, radius);
  double alpha[2] = {
      sample_coeff(params.alpha_inf_mean, params.alpha_inf_std, rng,
                   params.sample_coefficients),
      sample_coeff(params.alpha_esc_mean, params.alpha_esc_std, rng,
                   params.sample_coefficients)};
  double dist[2] = {d.d_cir, d.d_sem};

  BimatrixGame g;
  g.rows = 2;
  g.cols = 2;
  g.row_labels = {"Circle", "Semicircle"};
  g.col_labels = {"Infiltrate", "Escape"};
  g.payoff_a.resize(4);
  g.payoff_b.resize(4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      double cost = alpha[c] * dist[r];
      g.payoff_a[r * 2 + c] = -params.w_energy * cost;
      g.payoff_b[r * 2 + c] =
          params.zero_sum ? params.w_energy * cost : cost;
    }
  }
  return g;
}

BimatrixGame level2_payoffs(const WorldState& world, const UtilityParams& params,
                            Shape formation, double radius, std::mt19937_64* rng) {
  DistanceSummary d = distance_summary(world, params, radius, formation);
  double beta[2] = {
      sample_coeff(params.beta_dir_mean, params.beta_dir_std, rng,
                   params.sample_coefficients),
      sample_coeff(params.beta_spd_mean, params.beta_spd_std, rng,
                   params.sample_coefficients)};
  double dist[2] = {d.d_cb, d.d_pp};

  BimatrixGame g;
  g.rows = 2;
  g.cols = 2;
  g.row_labels = {"CB", "PP"};
  g.col_labels = {"DeltaDirection", "DeltaSpeed"};
  g.payoff_a.resize(4);
  g.payoff_b.resize(4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      double cost = beta[c] * dist[r];
      g.payoff_a[r * 2 + c] = -params.w_distance * cost;
      g.payoff_b[r * 2 + c] =
          params.zero_sum ? params.w_distance * cost : cost;
    }
  }
  return g;
}

}  // namespace pe
