#include "pe/matgame.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace pe {

namespace {

constexpr double kPureTol = 1e-12;
constexpr double kGapTol = 1e-9;
constexpr int kDimCap = 8;

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_linear(std::vector<std::vector<double>> m, std::vector<double>& rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    if (std::fabs(m[pivot][col]) < 1e-12) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return true;
}

// Mixed strategy of the "chooser" over `support` that makes the opponent
// indifferent across `opp_support`, where payoff(opp_strategy, choice) is the
// opponent's payoff. Returns an empty vector when the system is singular or
// the solution leaves the simplex.
std::vector<double> indifference_dist(
    const std::vector<int>& support, const std::vector<int>& opp_support,
    const std::function<double(int, int)>& opp_payoff, int full_size) {
  const int k = static_cast<int>(support.size());
  // Unknowns: k probabilities + the opponent's common payoff v.
  std::vector<std::vector<double>> m(k + 1, std::vector<double>(k + 1, 0.0));
  std::vector<double> rhs(k + 1, 0.0);
  for (int e = 0; e < k; ++e) {  // opp_support has the same size
    for (int c = 0; c < k; ++c) m[e][c] = opp_payoff(opp_support[e], support[c]);
    m[e][k] = -1.0;
  }
  for (int c = 0; c < k; ++c) m[k][c] = 1.0;
  rhs[k] = 1.0;
  if (!solve_linear(std::move(m), rhs)) return {};
  std::vector<double> dist(full_size, 0.0);
  for (int c = 0; c < k; ++c) {
    if (rhs[c] < -1e-9) return {};
    dist[support[c]] = std::max(0.0, rhs[c]);
  }
  double sum = 0.0;
  for (double d : dist) sum += d;
  if (std::fabs(sum - 1.0) > 1e-6) return {};
  for (double& d : dist) d /= sum;
  return dist;
}

bool is_point_mass(const std::vector<double>& dist, int* idx) {
  for (int i = 0; i < static_cast<int>(dist.size()); ++i) {
    if (dist[i] > 1.0 - 1e-9) {
      *idx = i;
      return true;
    }
  }
  return false;
}

bool same_profile(const MixedProfile& a, const MixedProfile& b) {
  for (size_t i = 0; i < a.row_dist.size(); ++i)
    if (std::fabs(a.row_dist[i] - b.row_dist[i]) > 1e-9) return false;
  for (size_t j = 0; j < a.col_dist.size(); ++j)
    if (std::fabs(a.col_dist[j] - b.col_dist[j]) > 1e-9) return false;
  return true;
}

void enumerate_supports(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

void BimatrixGame::validate() const {
  if (rows < 1 || cols < 1)
    throw DimensionMismatch("game must have at least one row and one column");
  const size_t expect = static_cast<size_t>(rows) * cols;
  if (payoff_a.size() != expect || payoff_b.size() != expect)
    throw DimensionMismatch("payoff matrix size does not match rows*cols");
  if (!row_labels.empty() && row_labels.size() != static_cast<size_t>(rows))
    throw DimensionMismatch("row label count does not match rows");
  if (!col_labels.empty() && col_labels.size() != static_cast<size_t>(cols))
    throw DimensionMismatch("col label count does not match cols");
  for (double v : payoff_a)
    if (!std::isfinite(v)) throw DimensionMismatch("non-finite entry in payoff_a");
  for (double v : payoff_b)
    if (!std::isfinite(v)) throw DimensionMismatch("non-finite entry in payoff_b");
}

BimatrixGame BimatrixGame::make(std::vector<std::vector<double>> a,
                                std::vector<std::vector<double>> b,
                                std::vector<std::string> row_labels,
                                std::vector<std::string> col_labels) {
  BimatrixGame g;
  g.rows = static_cast<int>(a.size());
  g.cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (auto& row : a) g.payoff_a.insert(g.payoff_a.end(), row.begin(), row.end());
  for (auto& row : b) g.payoff_b.insert(g.payoff_b.end(), row.begin(), row.end());
  g.row_labels = std::move(row_labels);
  g.col_labels = std::move(col_labels);
  g.validate();
  return g;
}

std::vector<std::pair<int, int>> pure_nash(const BimatrixGame& game) {
  game.validate();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < game.rows; ++i) {
    for (int j = 0; j < game.cols; ++j) {
      bool row_best = true;
      for (int i2 = 0; i2 < game.rows && row_best; ++i2)
        if (game.a(i2, j) > game.a(i, j) + kPureTol) row_best = false;
      if (!row_best) continue;
      bool col_best = true;
      for (int j2 = 0; j2 < game.cols && col_best; ++j2)
        if (game.b(i, j2) > game.b(i, j) + kPureTol) col_best = false;
      if (col_best) out.emplace_back(i, j);
    }
  }
  return out;
}

std::pair<double, double> expected_payoffs(const BimatrixGame& game,
                                           const MixedProfile& profile) {
  game.validate();
  if (profile.row_dist.size() != static_cast<size_t>(game.rows) ||
      profile.col_dist.size() != static_cast<size_t>(game.cols))
    throw DimensionMismatch("profile dimensions do not match game");
  double va = 0.0, vb = 0.0;
  for (int i = 0; i < game.rows; ++i) {
    if (profile.row_dist[i] == 0.0) continue;
    for (int j = 0; j < game.cols; ++j) {
      double w = profile.row_dist[i] * profile.col_dist[j];
      va += w * game.a(i, j);
      vb += w * game.b(i, j);
    }
  }
  return {va, vb};
}

double best_response_gap(const BimatrixGame& game, const MixedProfile& profile) {
  auto [va, vb] = expected_payoffs(game, profile);
  double best_row = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < game.rows; ++i) {
    double v = 0.0;
    for (int j = 0; j < game.cols; ++j) v += profile.col_dist[j] * game.a(i, j);
    best_row = std::max(best_row, v);
  }
  double best_col = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < game.cols; ++j) {
    double v = 0.0;
    for (int i = 0; i < game.rows; ++i) v += profile.row_dist[i] * game.b(i, j);
    best_col = std::max(best_col, v);
  }
  return std::max(best_row - va, best_col - vb);
}

std::vector<MixedProfile> mixed_nash(const BimatrixGame& game) {
  game.validate();
  if (game.rows > kDimCap || game.cols > kDimCap)
    throw DimensionTooLarge("support enumeration capped at 8x8");

  std::vector<MixedProfile> pure_out, mixed_out;
  auto consider = [&](std::vector<double> row_dist, std::vector<double> col_dist) {
    MixedProfile p;
    p.row_dist = std::move(row_dist);
    p.col_dist = std::move(col_dist);
    if (best_response_gap(game, p) > kGapTol) return;
    std::tie(p.value_a, p.value_b) = expected_payoffs(game, p);
    int ri, ci;
    auto& bucket =
        (is_point_mass(p.row_dist, &ri) && is_point_mass(p.col_dist, &ci))
            ? pure_out
            : mixed_out;
    for (const auto& q : bucket)
      if (same_profile(p, q)) return;
    bucket.push_back(std::move(p));
  };

  // Pure equilibria as degenerate profiles, lexicographic by construction.
  for (auto [i, j] : pure_nash(game)) {
    std::vector<double> rd(game.rows, 0.0), cd(game.cols, 0.0);
    rd[i] = 1.0;
    cd[j] = 1.0;
    consider(std::move(rd), std::move(cd));
  }

  // Equal-size supports of size >= 2, solved by indifference.
  const int kmax = std::min(game.rows, game.cols);
  for (int k = 2; k <= kmax; ++k) {
    std::vector<std::vector<int>> row_supports, col_supports;
    enumerate_supports(game.rows, k, row_supports);
    enumerate_supports(game.cols, k, col_supports);
    for (const auto& sr : row_supports) {
      for (const auto& sc : col_supports) {
        // Column player's distribution makes the row player indifferent on sr.
        auto col_dist = indifference_dist(
            sc, sr, [&](int i, int j) { return game.a(i, j); }, game.cols);
        if (col_dist.empty()) continue;
        auto row_dist = indifference_dist(
            sr, sc, [&](int j, int i) { return game.b(i, j); }, game.rows);
        if (row_dist.empty()) continue;
        consider(std::move(row_dist), std::move(col_dist));
      }
    }
  }

  std::sort(mixed_out.begin(), mixed_out.end(),
            [](const MixedProfile& a, const MixedProfile& b) {
              return a.row_dist < b.row_dist;
            });
  std::vector<MixedProfile> out = std::move(pure_out);
  out.insert(out.end(), mixed_out.begin(), mixed_out.end());
  return out;
}

}  // namespace pe
