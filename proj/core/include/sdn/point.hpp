#pragma once

namespace sdn {

// 2-D position in pixel units. Origin at the top-left pixel, col grows to
// the right and row grows downward.
struct Point2 {
  double col = 0.0;
  double row = 0.0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

constexpr double squared_distance(const Point2& a, const Point2& b) noexcept {
  const double dc = a.col - b.col;
  const double dr = a.row - b.row;
  return dc * dc + dr * dr;
}

constexpr Point2 operator+(const Point2& a, const Point2& b) noexcept {
  return {a.col + b.col, a.row + b.row};
}

constexpr Point2 operator-(const Point2& a, const Point2& b) noexcept {
  return {a.col - b.col, a.row - b.row};
}

constexpr Point2 operator*(double s, const Point2& p) noexcept {
  return {s * p.col, s * p.row};
}

}  // namespace sdn
