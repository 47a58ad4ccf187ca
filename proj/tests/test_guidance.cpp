#include <random>

#include "doctest.h"
#include "pe/guidance.hpp"

using namespace pe;

TEST_CASE("pure_pursuit points down the line of sight") {
  AgentState p{{0.0, 0.0}, {}, 1.0};
  auto cmd = pure_pursuit(p, {3.0, 4.0});
  CHECK(cmd.velocity.x == doctest::Approx(0.6));
  CHECK(cmd.velocity.y == doctest::Approx(0.8));
  CHECK(cmd.law_used == Law::PP);

  auto zero = pure_pursuit(p, {0.0, 0.0});
  CHECK(zero.velocity.norm() == 0.0);

  AgentState q{{1.0, 1.0}, {}, 2.0};
  auto up = pure_pursuit(q, {1.0, 3.0});
  CHECK(up.velocity.x == doctest::Approx(0.0));
  CHECK(up.velocity.y == doctest::Approx(2.0));
}

TEST_CASE("constant_bearing solves the collision triangle") {
  // Target crossing at speed 1 perpendicular to a 10 m LOS; sin(delta)=0.5
  // gives a 30 degree lead at speed 2.
  AgentState p{{0.0, 0.0}, {}, 2.0};
  auto cmd = constant_bearing(p, {10.0, 0.0}, {0.0, 1.0});
  CHECK(cmd.law_used == Law::CB);
  CHECK(cmd.velocity.x == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(cmd.velocity.y == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant_bearing on a stationary target reduces to pure pursuit") {
  AgentState p{{1.0, 2.0}, {}, 0.7};
  auto cb = constant_bearing(p, {4.0, 6.0}, {0.0, 0.0});
  auto pp = pure_pursuit(p, {4.0, 6.0});
  CHECK(cb.law_used == Law::CB);
  CHECK(cb.velocity.x == doctest::Approx(pp.velocity.x));
  CHECK(cb.velocity.y == doctest::Approx(pp.velocity.y));
}

TEST_CASE("constant_bearing falls back when the triangle is infeasible") {
  AgentState p{{0.0, 0.0}, {}, 0.5};
  auto cmd = constant_bearing(p, {10.0, 0.0}, {0.0, 1.0});
  CHECK(cmd.law_used == Law::CB_fallback_PP);
  auto pp = pure_pursuit(p, {10.0, 0.0});
  CHECK(cmd.velocity.x == doctest::Approx(pp.velocity.x));
  CHECK(cmd.velocity.y == doctest::Approx(pp.velocity.y));

  // Receding target faster than the pursuer along the LOS: no closing heading.
  auto recede = constant_bearing(p, {10.0, 0.0}, {1.0, 0.0});
  CHECK(recede.law_used == Law::CB_fallback_PP);
}

TEST_CASE("CB holds the LOS angle against a constant-velocity target") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-5.0, 5.0), speed(0.3, 1.0);
  int tested = 0;
  while (tested < 100) {
    AgentState p{{coord(rng), coord(rng)}, {}, 1.0};
    Vec2 tp{coord(rng), coord(rng)};
    Vec2 tv = Vec2{coord(rng), coord(rng)}.normalized() * speed(rng);
    if (distance(p.position, tp) < 1.0) continue;
    auto cmd = constant_bearing(p, tp, tv);
    if (cmd.law_used != Law::CB) continue;
    ++tested;

    double dt = 0.01;
    double los0 = (tp - p.position).angle();
    Vec2 pp = p.position;
    bool intercepted = false;
    for (int s = 0; s < 100; ++s) {
      pp += cmd.velocity * dt;
      tp += tv * dt;
      if (distance(pp, tp) < 1e-3) {
        intercepted = true;
        break;
      }
      double los = (tp - pp).angle();
      double drift = std::remainder(los - los0, 2.0 * 3.14159265358979323846);
      CHECK(std::fabs(drift) < 1e-6);
    }
    (void)intercepted;
  }
}

TEST_CASE("CB intercepts a slower constant-velocity target") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> coord(-3.0, 3.0), speed(0.1, 0.6);
  int tested = 0;
  while (tested < 50) {
    AgentState p{{coord(rng), coord(rng)}, {}, 1.0};
    Vec2 tp{coord(rng), coord(rng)};
    Vec2 tv = Vec2{coord(rng), coord(rng)}.normalized() * speed(rng);
    if (distance(p.position, tp) < 0.5) continue;
    ++tested;
    double dt = 0.02, d_capture = 0.05;
    bool captured = false;
    Vec2 pp = p.position;
    for (int s = 0; s < 5000; ++s) {
      AgentState cur{pp, {}, p.max_speed};
      auto cmd = constant_bearing(cur, tp, tv);
      pp += cmd.velocity * dt;
      tp += tv * dt;
      if (distance(pp, tp) <= d_capture) {
        captured = true;
        break;
      }
    }
    CHECK(captured);
  }
}
