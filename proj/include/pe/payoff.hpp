#pragma once

#include <optional>
#include <random>

#include "pe/formation.hpp"
#include "pe/matgame.hpp"
#include "pe/params.hpp"
#include "pe/world.hpp"

namespace pe {

// Distance terms feeding both payoff levels, in meters.
struct DistanceSummary {
  double d_cir = 0.0;  // total pursuer travel to circle slots (optimal assignment)
  double d_sem = 0.0;  // same for semicircle slots
  double d_cb = 0.0;   // total intercept distance under constant bearing
  double d_pp = 0.0;   // total straight-line distance under pure pursuit
};

// d_cb/d_pp are measured against the formation's assigned slots when a
// formation is given, against the evader itself otherwise. Slots are assumed
// to move with the evader's velocity; infeasible intercepts fall back to the
// straight-line distance.
DistanceSummary distance_summary(const WorldState& world,
                                 const UtilityParams& params, double radius,
                                 std::optional<Shape> formation = std::nullopt);

// Level 1: rows (Circle, Semicircle) x cols (Infiltrate, Escape).
// Pursuer entry u_a(r,c) = -(w_energy * alpha_mean(c) * d_r); evader entry is
// -u_a under zero_sum, +alpha_mean(c)*d_r otherwise. With rng given and
// sample_coefficients set, coefficients are drawn from their normals instead
// of using the means.
BimatrixGame level1_payoffs(const WorldState& world, const UtilityParams& params,
                            double radius, std::mt19937_64* rng = nullptr);

// Level 2: rows (CB, PP) x cols (DeltaDirection, DeltaSpeed), distances
// evaluated against the chosen formation's slot targets.
BimatrixGame level2_payoffs(const WorldState& world, const UtilityParams& params,
                            Shape formation, double radius,
                            std::mt19937_64* rng = nullptr);

}  // namespace pe
