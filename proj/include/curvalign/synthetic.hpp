#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "curvalign/curve.hpp"

namespace curvalign {

enum class CurveFamily {
  circle,
  superellipse,  // |x/a|^p + |y/b|^p = 1, a = 1, b = 0.6, p = 4
  hippopede,     // r^2 = 4b(a - b sin^2 phi), a = 1, b = 0.9
  bumps,         // r = 1 + 0.2 sin(6 phi)
  limacon,       // r = 0.75 + 0.5 cos(phi)
  clover,        // r = 1 + 0.4 cos(4 phi)
  fourier_random
};

CurveFamily parse_family(const std::string& name);
std::string family_name(CurveFamily f);

// N nodes at uniform parameter values of the family's closed parametric
// formula, counterclockwise.
Curve gen_curve(CurveFamily f, std::size_t n, std::uint64_t seed = 1, int harmonics = 12);

// Warps used by the matching experiments.
double gamma1_warp(double t);  // t + 0.025 sin(4 pi t)
double gamma2_warp(double t);  // t + 1.6 t^2 (t - 1)^2

// Applies, in order: cyclic starting-point shift (the original start lands at
// parameter start_shift of the output), rotation by theta (counterclockwise),
// reparameterization by the warp. Nodes are evaluated through the periodic
// spline of the input; node count is preserved. warp = nullptr is identity;
// a custom warp must be monotone with warp(0) = 0, warp(1) = 1.
Curve transform_curve(const Curve& c, double start_shift, double theta,
                      const std::function<double(double)>& warp = nullptr);

}  // namespace curvalign
