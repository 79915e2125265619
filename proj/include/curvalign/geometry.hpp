#pragma once

#include <cmath>
#include <stdexcept>

namespace curvalign {

/// A point (or vector) in the plane.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double x_, double y_) : x(x_), y(y_) {}

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2& operator+=(const Point2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Point2& operator-=(const Point2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point2 operator*(double s, const Point2& p) { return p * s; }
inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

/// 2x2 real matrix, row-major. Used for cross-correlation matrices A(t_m).
struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  bool finite() const {
    return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
  }
};

/// Proper planar rotation parameterized by its angle. The associated matrix is
///
///   R(theta) = [  cos(theta)  sin(theta) ]
///              [ -sin(theta)  cos(theta) ]
///
/// so that the alignment energy |c1 - R(theta) c2|^2 is minimized by the
/// reported theta when c2 was built by rotating c1 counterclockwise by theta.
class Rotation2 {
 public:
  Rotation2() = default;
  explicit Rotation2(double theta) : theta_(theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("Rotation2: non-finite angle");
  }

  double theta() const { return theta_; }

  Mat2 matrix() const {
    const double c = std::cos(theta_), s = std::sin(theta_);
    return {c, s, -s, c};
  }

  /// Applies R(theta) to a point.
  Point2 apply(const Point2& p) const {
    const double c = std::cos(theta_), s = std::sin(theta_);
    return {c * p.x + s * p.y, -s * p.x + c * p.y};
  }

  Rotation2 inverse() const { return Rotation2(-theta_); }

 private:
  double theta_ = 0.0;
};

/// Standard counterclockwise rotation of a point by `theta` (the inverse of
/// Rotation2(theta).apply). transform_curve uses this so that aligning a
/// reference against its transformed copy reports back the applied angle.
inline Point2 rotate_ccw(const Point2& p, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Wraps t into [0, 1).
inline double wrap_unit(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r -= 1.0;  // guards t = -1e-18 style results
  return r;
}

}  // namespace curvalign
