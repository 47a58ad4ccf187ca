#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pe/errors.hpp"

namespace pe {

// A finite two-player game in normal form. Player A picks a row, player B a
// column; payoffs are stored row-major and need not be zero-sum.
struct BimatrixGame {
  int rows = 0;
  int cols = 0;
  std::vector<double> payoff_a;  // rows*cols, row-major
  std::vector<double> payoff_b;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  double a(int i, int j) const { return payoff_a[i * cols + j]; }
  double b(int i, int j) const { return payoff_b[i * cols + j]; }

  // Throws DimensionMismatch on shape/label inconsistencies or non-finite
  // entries.
  void validate() const;

  static BimatrixGame make(std::vector<std::vector<double>> a,
                           std::vector<std::vector<double>> b,
                           std::vector<std::string> row_labels = {},
                           std::vector<std::string> col_labels = {});
};

// A pair of mixed strategies together with the induced expected payoffs.
struct MixedProfile {
  std::vector<double> row_dist;
  std::vector<double> col_dist;
  double value_a = 0.0;
  double value_b = 0.0;
};

// All pure Nash equilibria (weak best responses, tolerance 1e-12), ordered
// lexicographically by (row, col).
std::vector<std::pair<int, int>> pure_nash(const BimatrixGame& game);

// Equilibria found by support enumeration. Pure equilibria come first (as
// point-mass profiles, lexicographic order), then proper mixed profiles
// sorted by row_dist. Every returned profile has best_response_gap <= 1e-9.
// Throws DimensionTooLarge when rows or cols exceed 8.
std::vector<MixedProfile> mixed_nash(const BimatrixGame& game);

// Bilinear expectation of both payoff matrices under the profile.
std::pair<double, double> expected_payoffs(const BimatrixGame& game,
                                           const MixedProfile& profile);

// Max over both players of (best pure reply payoff - expected payoff).
// Zero (up to rounding) certifies a Nash equilibrium.
double best_response_gap(const BimatrixGame& game, const MixedProfile& profile);

}  // namespace pe
