#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curvalign/curve.hpp"
#include "curvalign/geometry.hpp"

namespace curvalign {

// Square-root velocity samples q_l = d_l / ||d_l||^{1/2} on the uniform grid
// t_l = l/N, where d_l is the periodic central-difference derivative.
struct SrvCurve {
  std::vector<Point2> q;
  double h = 0.0;  // 1/N

  std::size_t size() const { return q.size(); }
};

// Samples of a monotone reparameterization of [0,1] on the uniform grid:
// gamma has N+1 values with gamma[0] = 0, gamma[N] = 1, non-decreasing.
struct Reparameterization {
  std::vector<double> gamma;

  std::size_t grid_size() const { return gamma.empty() ? 0 : gamma.size() - 1; }
  // Piecewise-linear evaluation at t in [0,1].
  double eval(double t) const;
};

Reparameterization identity_reparam(std::size_t n);
void validate_reparam(const Reparameterization& g);

SrvCurve srv_transform(const Curve& c);

// Subtracts the sample mean; used before treating SRV samples as a point
// sequence for the rigid search.
SrvCurve srv_center(const SrvCurve& q);

// out_l = sqrt(gamma_dot_l) * R * Q(t0 + gamma(t_l)), with Q the periodic
// linear interpolant of q's samples and gamma_dot the forward-difference
// slope. Evaluation points wrap modulo 1; on-grid points are hit exactly.
SrvCurve apply_srv_action(const SrvCurve& q, double t0, const Rotation2& rotation,
                          const Reparameterization& gamma);

// h * sum_l ||q1_l - apply_srv_action(q2, t0, R, gamma)_l||^2
double elastic_energy(const SrvCurve& q1, const SrvCurve& q2, double t0,
                      const Rotation2& rotation, const Reparameterization& gamma);

struct DpResult {
  Reparameterization gamma;
  double energy = 0.0;
};

// Admissible lattice steps (di, dj) with di, dj in 1..max_slope, gcd-reduced.
std::vector<std::pair<int, int>> dp_admissible_steps(int max_slope);

// Local cost of the lattice step from (i0, j0) with increments (di, dj):
// trapezoidal sum of the mismatch integrand at the integer grid points the
// step spans, with q2 linearly interpolated and slope dj/di held constant.
double dp_step_cost(const SrvCurve& q1, const SrvCurve& q2, int i0, int j0, int di, int dj);

// Best monotone lattice path from (0,0) to (N,N) over the admissible step
// set, minimizing the discretized elastic mismatch with t0 = 0, R = I (the
// caller folds any t0/R into q2 beforehand).
DpResult dp_reparam(const SrvCurve& q1, const SrvCurve& q2, int max_slope = 4);

}  // namespace curvalign
