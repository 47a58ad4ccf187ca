#pragma once

#include <cmath>

namespace pe {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2& o) const = default;

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
  double angle() const { return std::atan2(y, x); }

  // Unit vector; zero vector maps to zero.
  Vec2 normalized(double eps = 1e-12) const {
    double n = norm();
    return n > eps ? Vec2{x / n, y / n} : Vec2{};
  }
  Vec2 rotated(double rad) const {
    double c = std::cos(rad), s = std::sin(rad);
    return {c * x - s * y, s * x + c * y};
  }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline Vec2 unit_from_angle(double rad) { return {std::cos(rad), std::sin(rad)}; }

}  // namespace pe
