#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "curvalign/curve.hpp"
#include "curvalign/geometry.hpp"

namespace curvalign {

// Best rigid registration of c2 onto c1 over cyclic starting-point shifts and
// proper rotations: minimizes (1/N) sum_l ||c1[l] - R c2[(l+m) mod N]||^2.
struct RigidAlignment {
  std::size_t shift = 0;   // m
  double t0 = 0.0;         // m / N
  Rotation2 rotation;
  double trace = 0.0;      // tr(R A^T) at the optimum
  double energy = 0.0;     // realized mismatch energy
  bool degenerate = false; // rotation was underdetermined (A effectively zero)
};

struct RotationFit {
  Rotation2 rotation;
  double trace = 0.0;
  bool degenerate = false;
};

// A_kj = sum_l c1[l]_k * c2[(l+shift) mod N]_j
Mat2 cross_correlation_matrix(std::span<const Point2> c1, std::span<const Point2> c2,
                              std::size_t shift);

// Proper rotation maximizing tr(R A^T) via 2x2 SVD with determinant
// correction: A = U S V^T, R = U diag(1, det(U)det(V)) V^T.
RotationFit optimal_rotation_svd(const Mat2& A);

// Same optimum in closed form: theta = atan2(A12 - A21, A11 + A22).
RotationFit optimal_rotation_closed_form(const Mat2& A);

Rotation2 optimal_rotation_fixed_start(const Curve& c1, const Curve& c2);

// Correlation matrices for every shift m = 0..N-1.
std::vector<Mat2> correlation_all_shifts_naive(std::span<const Point2> c1,
                                               std::span<const Point2> c2);
std::vector<Mat2> correlation_all_shifts_fft(std::span<const Point2> c1,
                                             std::span<const Point2> c2);

double mismatch_energy(std::span<const Point2> c1, std::span<const Point2> c2,
                       std::size_t shift, const Rotation2& rotation);

RigidAlignment align_naive(std::span<const Point2> c1, std::span<const Point2> c2);
RigidAlignment align_fft(std::span<const Point2> c1, std::span<const Point2> c2);

inline RigidAlignment align_naive(const Curve& c1, const Curve& c2) {
  return align_naive(std::span<const Point2>(c1.nodes), std::span<const Point2>(c2.nodes));
}
inline RigidAlignment align_fft(const Curve& c1, const Curve& c2) {
  return align_fft(std::span<const Point2>(c1.nodes), std::span<const Point2>(c2.nodes));
}

}  // namespace curvalign
