#pragma once

#include <span>
#include <vector>

namespace curvalign {

/// Scalar periodic cubic spline interpolant.
///
/// Fits y(x) through n+1 knots (x_0 < x_1 < ... < x_n) with y_n == y_0 and
/// periodic boundary conditions: value, first and second derivative match
/// across the seam x_0 ~ x_n. Evaluation wraps the argument into one period,
/// so eval(x) is defined for every finite x.
///
/// The second-derivative system is cyclic tridiagonal and is solved in O(n)
/// with the Thomas algorithm plus a Sherman-Morrison rank-one correction.
class PeriodicCubicSpline {
 public:
  /// `x` strictly increasing, size n+1 >= 4; `y` same size, y[n] is the
  /// closing value and must equal y[0] (it is overwritten with y[0] if they
  /// differ by rounding). Throws std::invalid_argument on bad input.
  PeriodicCubicSpline(std::span<const double> x, std::span<const double> y);

  double eval(double x) const;
  double derivative(double x) const;

  double period() const { return x_.back() - x_.front(); }

 private:
  std::vector<double> x_;   // knots, size n+1
  std::vector<double> y_;   // values, size n+1 (y_[n] == y_[0])
  std::vector<double> m_;   // second derivatives at knots, size n+1 (m_[n] == m_[0])

  std::size_t interval(double xw) const;
};

}  // namespace curvalign
