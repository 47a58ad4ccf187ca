#pragma once

#include "pe/errors.hpp"

namespace pe {

// Coefficients and weights for the two-level payoff construction. The alpha
// and beta means/stds describe the evader-strategy coefficient distributions;
// by default payoff entries use the means, and sample_coefficients switches
// to per-epoch normal draws (clamped to >= 0).
//
// The coefficient defaults below are configuration choices, not published
// values; see README.
struct UtilityParams {
  double alpha_inf_mean = 1.2;
  double alpha_inf_std = 0.1;
  double alpha_esc_mean = 0.8;
  double alpha_esc_std = 0.1;
  double beta_dir_mean = 1.1;
  double beta_dir_std = 0.1;
  double beta_spd_mean = 0.9;
  double beta_spd_std = 0.1;

  double w_energy = 1.0;    // level-1 blend weight
  double w_distance = 1.0;  // level-2 blend weight

  double formation_radius_init = 0.5;  // m
  double radius_shrink = 0.45;         // per-second contraction factor
  double d_capture = 0.15;             // m

  bool zero_sum = true;
  bool sample_coefficients = false;

  void validate() const {
    if (alpha_inf_std < 0 || alpha_esc_std < 0 || beta_dir_std < 0 ||
        beta_spd_std < 0)
      throw ConfigInvalid("coefficient std must be >= 0");
    if (alpha_inf_mean <= 0 || alpha_esc_mean <= 0 || beta_dir_mean <= 0 ||
        beta_spd_mean <= 0)
      throw ConfigInvalid("coefficient means must be > 0");
    if (w_energy < 0 || w_distance < 0 || w_energy + w_distance <= 0)
      throw ConfigInvalid("weights must be nonnegative with positive sum");
    if (d_capture <= 0) throw ConfigInvalid("d_capture must be > 0");
    if (formation_radius_init <= 0)
      throw ConfigInvalid("formation_radius_init must be > 0");
    if (radius_shrink <= 0 || radius_shrink > 1)
      throw ConfigInvalid("radius_shrink must be in (0,1]");
  }
};

}  // namespace pe
